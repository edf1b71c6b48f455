#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "synmon/errors.hpp"

namespace synmon {

/// Finite monoid with a compatible partial order, both given by tables.
/// Elements are indices 0..n-1; `names` are optional display labels.
struct OrderedMonoid {
    int n = 0;
    int identity = 0;
    std::vector<int> mult;  // row-major n*n table of element indices
    std::vector<char> leq;  // row-major n*n boolean matrix
    std::vector<std::string> names;

    int mul(int x, int y) const {
        return mult[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
    }

    bool le(int x, int y) const {
        return leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] != 0;
    }

    bool lt(int x, int y) const { return le(x, y) && x != y; }

    int pow(int x, long k) const {
        int acc = identity;
        int base = x;
        while (k > 0) {
            if (k & 1)
                acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    /// The unique idempotent among the positive powers of x.
    int omega(int x) const {
        int p = x;
        for (int i = 0; i <= n + 1; ++i) {
            if (mul(p, p) == p)
                return p;
            p = mul(p, x);
        }
        throw error("no idempotent power found; multiplication table is not a monoid");
    }

    /// x^{omega + k} = omega(x) * x^k.
    int omega_power(int x, long k) const { return mul(omega(x), pow(x, k)); }

    std::string name_of(int x) const {
        if (x >= 0 && x < static_cast<int>(names.size()) && !names[static_cast<std::size_t>(x)].empty())
            return names[static_cast<std::size_t>(x)];
        return "e" + std::to_string(x);
    }

    bool operator==(const OrderedMonoid&) const = default;
};

inline OrderedMonoid trivial_monoid() {
    OrderedMonoid m;
    m.n = 1;
    m.identity = 0;
    m.mult = {0};
    m.leq = {1};
    m.names = {"1"};
    return m;
}

/// Invariant checks: identity laws, associativity (exhaustive for n <= 64,
/// randomly sampled above), order axioms, and order compatibility with the
/// product. Returns human-readable violations; empty means the tables form
/// an ordered monoid.
inline std::vector<std::string> monoid_violations(const OrderedMonoid& m, unsigned sample_seed = 12345) {
    std::vector<std::string> out;
    const int n = m.n;
    if (n <= 0)
        return {"element count must be positive"};
    if (m.mult.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        return {"multiplication table size mismatch"};
    if (m.leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        return {"order matrix size mismatch"};
    if (m.identity < 0 || m.identity >= n)
        return {"identity index out of range"};
    for (int v : m.mult)
        if (v < 0 || v >= n)
            return {"multiplication table entry out of range"};

    for (int x = 0; x < n && out.empty(); ++x)
        if (m.mul(m.identity, x) != x || m.mul(x, m.identity) != x)
            out.push_back("identity laws fail at element " + std::to_string(x));

    auto assoc_at = [&](int x, int y, int z) {
        return m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z));
    };
    if (n <= 64) {
        for (int x = 0; x < n && out.empty(); ++x)
            for (int y = 0; y < n && out.empty(); ++y)
                for (int z = 0; z < n && out.empty(); ++z)
                    if (!assoc_at(x, y, z))
                        out.push_back("associativity fails at (" + std::to_string(x) + "," +
                                      std::to_string(y) + "," + std::to_string(z) + ")");
    } else {
        std::mt19937 rng(sample_seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 200000 && out.empty(); ++i) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (!assoc_at(x, y, z))
                out.push_back("associativity fails at (" + std::to_string(x) + "," +
                              std::to_string(y) + "," + std::to_string(z) + ")");
        }
    }

    for (int x = 0; x < n && out.empty(); ++x)
        if (!m.le(x, x))
            out.push_back("order is not reflexive at " + std::to_string(x));
    for (int x = 0; x < n && out.empty(); ++x)
        for (int y = 0; y < n && out.empty(); ++y)
            if (x != y && m.le(x, y) && m.le(y, x))
                out.push_back("order is not antisymmetric at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
    for (int x = 0; x < n && out.empty(); ++x)
        for (int y = 0; y < n && out.empty(); ++y) {
            if (!m.le(x, y))
                continue;
            for (int z = 0; z < n && out.empty(); ++z)
                if (m.le(y, z) && !m.le(x, z))
                    out.push_back("order is not transitive at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "," + std::to_string(z) + ")");
        }

    // Compatibility: x <= y implies zx <= zy and xz <= yz.
    for (int x = 0; x < n && out.empty(); ++x)
        for (int y = 0; y < n && out.empty(); ++y) {
            if (!m.le(x, y))
                continue;
            for (int z = 0; z < n && out.empty(); ++z) {
                if (!m.le(m.mul(z, x), m.mul(z, y)) || !m.le(m.mul(x, z), m.mul(y, z)))
                    out.push_back("order is not compatible with the product at (" + std::to_string(x) +
                                  "," + std::to_string(y) + "," + std::to_string(z) + ")");
            }
        }
    return out;
}

inline void require_valid(const OrderedMonoid& m) {
    auto violations = monoid_violations(m);
    if (!violations.empty())
        throw error("invalid ordered monoid: " + violations.front());
}

struct MonoidProps {
    bool commutative = false;
    bool aperiodic = false;
    std::vector<int> idempotents;
    std::vector<int> omega; // omega[x] = the idempotent power of x
};

inline MonoidProps monoid_props(const OrderedMonoid& m) {
    MonoidProps p;
    p.commutative = true;
    for (int x = 0; x < m.n && p.commutative; ++x)
        for (int y = x + 1; y < m.n; ++y)
            if (m.mul(x, y) != m.mul(y, x)) {
                p.commutative = false;
                break;
            }
    for (int x = 0; x < m.n; ++x)
        if (m.mul(x, x) == x)
            p.idempotents.push_back(x);
    p.aperiodic = true;
    p.omega.resize(static_cast<std::size_t>(m.n));
    for (int x = 0; x < m.n; ++x) {
        int w = m.omega(x);
        p.omega[static_cast<std::size_t>(x)] = w;
        if (m.mul(w, x) != w)
            p.aperiodic = false;
    }
    return p;
}

/// Strict covering pairs (x, y): x < y with nothing strictly between. These
/// are the edges of the Hasse diagram (the transitive reduction of <).
inline std::vector<std::pair<int, int>> covering_pairs(const OrderedMonoid& m) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y) {
            if (!m.lt(x, y))
                continue;
            bool covered = true;
            for (int z = 0; z < m.n && covered; ++z)
                if (z != x && z != y && m.lt(x, z) && m.lt(z, y))
                    covered = false;
            if (covered)
                out.emplace_back(x, y);
        }
    return out;
}

inline std::vector<std::pair<int, int>> strict_pairs(const OrderedMonoid& m) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (m.lt(x, y))
                out.emplace_back(x, y);
    return out;
}

namespace detail {

/// Smallest generating set under the element order, greedily: an element is
/// added iff it is not generated by the previously kept ones.
inline std::vector<int> greedy_generators(const OrderedMonoid& m) {
    std::vector<char> generated(static_cast<std::size_t>(m.n), 0);
    generated[static_cast<std::size_t>(m.identity)] = 1;
    std::vector<int> gens;
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < m.n; ++x) {
                if (!generated[static_cast<std::size_t>(x)])
                    continue;
                for (int y = 0; y < m.n; ++y) {
                    if (!generated[static_cast<std::size_t>(y)])
                        continue;
                    int z = m.mul(x, y);
                    if (!generated[static_cast<std::size_t>(z)]) {
                        generated[static_cast<std::size_t>(z)] = 1;
                        grew = true;
                    }
                }
            }
        }
    };
    close();
    for (int x = 0; x < m.n; ++x) {
        if (generated[static_cast<std::size_t>(x)])
            continue;
        gens.push_back(x);
        generated[static_cast<std::size_t>(x)] = 1;
        close();
    }
    return gens;
}

inline bool extend_isomorphism(const OrderedMonoid& a, const OrderedMonoid& b,
                               const std::vector<int>& gens, const std::vector<int>& images) {
    // Build the morphism determined by the generator images by closing the
    // generated submonoid; reject on any conflict.
    std::vector<int> map(static_cast<std::size_t>(a.n), -1);
    map[static_cast<std::size_t>(a.identity)] = b.identity;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (map[static_cast<std::size_t>(gens[i])] >= 0 &&
            map[static_cast<std::size_t>(gens[i])] != images[i])
            return false;
        map[static_cast<std::size_t>(gens[i])] = images[i];
    }
    std::vector<int> known;
    for (int x = 0; x < a.n; ++x)
        if (map[static_cast<std::size_t>(x)] >= 0)
            known.push_back(x);
    auto define = [&](int x, int y) {
        int z = a.mul(x, y);
        int fz = b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
        if (map[static_cast<std::size_t>(z)] < 0) {
            map[static_cast<std::size_t>(z)] = fz;
            known.push_back(z);
            return true;
        }
        return map[static_cast<std::size_t>(z)] == fz;
    };
    // Every pair of known elements is processed once the later of the two is
    // reached, so products of earlier elements with later arrivals are covered.
    for (std::size_t t = 0; t < known.size(); ++t)
        for (std::size_t j = 0; j <= t; ++j)
            if (!define(known[t], known[j]) || !define(known[j], known[t]))
                return false;
    if (static_cast<int>(known.size()) != a.n)
        return false; // gens generate a, so this means a conflict earlier
    // Bijectivity.
    std::vector<char> seen(static_cast<std::size_t>(b.n), 0);
    for (int x = 0; x < a.n; ++x) {
        int fx = map[static_cast<std::size_t>(x)];
        if (seen[static_cast<std::size_t>(fx)])
            return false;
        seen[static_cast<std::size_t>(fx)] = 1;
    }
    // Multiplicative on all pairs and an order isomorphism.
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) {
            if (map[static_cast<std::size_t>(a.mul(x, y))] !=
                b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
                return false;
            if (a.le(x, y) != b.le(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
                return false;
        }
    return true;
}

inline bool isomorphism_search(const OrderedMonoid& a, const OrderedMonoid& b,
                               const std::vector<int>& gens, std::vector<int>& images,
                               std::size_t at) {
    if (at == gens.size())
        return extend_isomorphism(a, b, gens, images);
    for (int candidate = 0; candidate < b.n; ++candidate) {
        images[at] = candidate;
        if (isomorphism_search(a, b, gens, images, at + 1))
            return true;
    }
    return false;
}

} // namespace detail

/// Ordered-monoid isomorphism via generator relabeling search. Intended for
/// small monoids (n <= 64).
inline bool isomorphic(const OrderedMonoid& a, const OrderedMonoid& b) {
    if (a.n != b.n)
        return false;
    if (a.n > 64)
        throw error("isomorphism search is limited to monoids with at most 64 elements");
    std::vector<int> gens = detail::greedy_generators(a);
    std::vector<int> images(gens.size(), 0);
    if (gens.empty())
        return detail::extend_isomorphism(a, b, gens, images);
    return detail::isomorphism_search(a, b, gens, images, 0);
}

} // namespace synmon

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synmon/errors.hpp"
#include "synmon/ordered_monoid.hpp"

namespace synmon {

/// Downward closed subset of an ordered monoid with at most 32 elements,
/// stored as an element bitmask.
struct Downset {
    std::uint32_t members = 0;

    bool contains(int x) const { return (members >> x) & 1u; }

    std::vector<int> element_list() const {
        std::vector<int> out;
        for (int x = 0; x < 32; ++x)
            if (contains(x))
                out.push_back(x);
        return out;
    }
};

inline std::string downset_name(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < 32; ++x)
        if ((mask >> x) & 1u) {
            if (!first)
                s += ",";
            s += std::to_string(x);
            first = false;
        }
    return s + "}";
}

/// Smallest downset containing the given elements.
inline Downset downclose(const OrderedMonoid& m, std::uint32_t elements) {
    if (m.n > 32)
        throw cap_error("downsets are limited to monoids with at most 32 elements");
    std::uint32_t mask = 0;
    for (int x = 0; x < m.n; ++x) {
        if (!((elements >> x) & 1u))
            continue;
        for (int y = 0; y < m.n; ++y)
            if (m.le(y, x))
                mask |= std::uint32_t{1} << y;
    }
    return Downset{mask};
}

/// Downset monoid of M: elements are the downsets of M (nonempty only unless
/// `include_empty`), multiplied by taking the downward closure of the
/// pointwise product and ordered by inclusion. The identity is the downset of
/// the identity; the empty set, when present, is a zero.
inline OrderedMonoid downset_monoid(const OrderedMonoid& m, bool include_empty,
                                    int max_base = 16, int max_downsets = 8192) {
    if (m.n > max_base)
        throw cap_error("downset monoid base exceeds " + std::to_string(max_base) + " elements");
    const std::uint32_t limit = std::uint32_t{1} << m.n;

    // Downward closure of each singleton, used both for the downset test and
    // for products.
    std::vector<std::uint32_t> down_of(static_cast<std::size_t>(m.n), 0);
    for (int x = 0; x < m.n; ++x)
        down_of[static_cast<std::size_t>(x)] = downclose(m, std::uint32_t{1} << x).members;

    std::vector<std::uint32_t> sets;
    std::vector<int> index_of(limit, -1);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (mask == 0 && !include_empty)
            continue;
        bool closed = true;
        for (int x = 0; x < m.n && closed; ++x)
            if ((mask >> x) & 1u)
                closed = (down_of[static_cast<std::size_t>(x)] & ~mask) == 0;
        if (closed) {
            if (static_cast<int>(sets.size()) >= max_downsets)
                throw cap_error("downset count exceeds " + std::to_string(max_downsets));
            index_of[mask] = static_cast<int>(sets.size());
            sets.push_back(mask);
        }
    }

    const int n = static_cast<int>(sets.size());
    OrderedMonoid out;
    out.n = n;
    out.identity = index_of[down_of[static_cast<std::size_t>(m.identity)]];
    out.mult.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    out.leq.resize(out.mult.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::uint32_t prod = 0;
            std::uint32_t xs = sets[static_cast<std::size_t>(i)];
            for (int x = 0; x < m.n; ++x) {
                if (!((xs >> x) & 1u))
                    continue;
                std::uint32_t ys = sets[static_cast<std::size_t>(j)];
                for (int y = 0; y < m.n; ++y)
                    if ((ys >> y) & 1u)
                        prod |= down_of[static_cast<std::size_t>(m.mul(x, y))];
            }
            out.mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j)] = index_of[prod];
            out.leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)] =
                (sets[static_cast<std::size_t>(i)] & ~sets[static_cast<std::size_t>(j)]) == 0 ? 1 : 0;
        }
    }
    out.names.reserve(sets.size());
    for (std::uint32_t mask : sets)
        out.names.push_back(downset_name(mask));
    return out;
}

/// All downsets of M as masks, in ascending mask order (empty first when
/// included); the indexing matches downset_monoid.
inline std::vector<std::uint32_t> downset_masks(const OrderedMonoid& m, bool include_empty,
                                                int max_base = 16) {
    if (m.n > max_base)
        throw cap_error("downset enumeration base exceeds " + std::to_string(max_base) + " elements");
    std::vector<std::uint32_t> out;
    const std::uint32_t limit = std::uint32_t{1} << m.n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (mask == 0 && !include_empty)
            continue;
        bool closed = true;
        for (int x = 0; x < m.n && closed; ++x)
            if ((mask >> x) & 1u)
                closed = (downclose(m, std::uint32_t{1} << x).members & ~mask) == 0;
        if (closed)
            out.push_back(mask);
    }
    return out;
}

/// The two-element ordered monoid {0 < 1} with 0 a zero: the downset monoid
/// of the trivial monoid with the empty set included.
inline OrderedMonoid u1_down() {
    OrderedMonoid m;
    m.n = 2;
    m.identity = 1;
    // element 0 is the zero (empty downset), element 1 the identity
    m.mult = {0, 0,
              0, 1};
    m.leq = {1, 1,
             0, 1};
    m.names = {"0", "1"};
    return m;
}

/// Verifies that (X, 1) -> X, (X, 0) -> empty defines a surjective monoid
/// morphism from P(M) x U1 onto P0(M) that preserves the order.
inline bool quotient_check(const OrderedMonoid& m, int max_base = 16) {
    OrderedMonoid pm = downset_monoid(m, false, max_base);
    OrderedMonoid p0 = downset_monoid(m, true, max_base);
    OrderedMonoid u1 = u1_down();
    std::vector<std::uint32_t> pm_masks = downset_masks(m, false, max_base);
    std::vector<std::uint32_t> p0_masks = downset_masks(m, true, max_base);

    std::vector<int> p0_index(std::size_t{1} << m.n, -1);
    for (std::size_t i = 0; i < p0_masks.size(); ++i)
        p0_index[p0_masks[i]] = static_cast<int>(i);

    // f(X, u): the mask of X when u is the identity of U1, the empty set when
    // u is the zero.
    auto f = [&](int x, int u) {
        return u == u1.identity ? p0_index[pm_masks[static_cast<std::size_t>(x)]] : p0_index[0];
    };

    // Identity maps to identity.
    if (f(pm.identity, u1.identity) != p0.identity)
        return false;

    // Surjectivity.
    std::vector<char> hit(static_cast<std::size_t>(p0.n), 0);
    for (int x = 0; x < pm.n; ++x)
        for (int u = 0; u < u1.n; ++u)
            hit[static_cast<std::size_t>(f(x, u))] = 1;
    for (char h : hit)
        if (!h)
            return false;

    // Morphism and order preservation over all pairs of the direct product.
    for (int x = 0; x < pm.n; ++x)
        for (int u = 0; u < u1.n; ++u)
            for (int y = 0; y < pm.n; ++y)
                for (int v = 0; v < u1.n; ++v) {
                    int fxy = f(pm.mul(x, y), u1.mul(u, v));
                    if (fxy != p0.mul(f(x, u), f(y, v)))
                        return false;
                    if (pm.le(x, y) && u1.le(u, v) && !p0.le(f(x, u), f(y, v)))
                        return false;
                }
    return true;
}

} // namespace synmon

#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"

namespace synmon {

/// Eventually periodic subset of the naturals: explicit exceptions below the
/// threshold, then membership by residue. Canonical form has the minimal
/// period and the minimal threshold, so equal sets compare equal.
struct EPSet {
    std::set<std::int64_t> exceptions; // all < threshold
    std::int64_t threshold = 0;
    std::int64_t period = 1;
    std::set<std::int64_t> residues; // all in [0, period)

    bool member(std::int64_t n) const {
        if (n < threshold)
            return exceptions.count(n) > 0;
        return residues.count(n % period) > 0;
    }

    bool operator==(const EPSet&) const = default;
};

/// Normalizes to the minimal period, then the minimal threshold.
inline EPSet canonical_epset(const EPSet& in) {
    EPSet e = in;
    if (e.period < 1)
        throw error("period must be at least 1");

    // Shrink the period to the smallest divisor that explains the residues.
    for (std::int64_t d = 1; d <= e.period; ++d) {
        if (e.period % d != 0)
            continue;
        bool periodic = true;
        for (std::int64_t r = 0; r < e.period && periodic; ++r)
            periodic = e.residues.count(r) == e.residues.count((r + d) % e.period);
        if (periodic) {
            std::set<std::int64_t> reduced;
            for (std::int64_t r : e.residues)
                reduced.insert(r % d);
            e.residues = std::move(reduced);
            e.period = d;
            break;
        }
    }

    // Shrink the threshold while the boundary point already follows the
    // periodic pattern.
    while (e.threshold > 0) {
        std::int64_t n = e.threshold - 1;
        bool except = e.exceptions.count(n) > 0;
        bool periodic = e.residues.count(n % e.period) > 0;
        if (except != periodic)
            break;
        e.exceptions.erase(n);
        e.threshold = n;
    }
    std::set<std::int64_t> trimmed;
    for (std::int64_t x : e.exceptions)
        if (x >= 0 && x < e.threshold)
            trimmed.insert(x);
    e.exceptions = std::move(trimmed);
    return e;
}

/// Builds the canonical EPSet of a membership function known to be periodic
/// with period dividing `period` from `threshold` on.
inline EPSet epset_from_fn(const std::function<bool(std::int64_t)>& member,
                           std::int64_t threshold, std::int64_t period) {
    EPSet e;
    e.threshold = threshold;
    e.period = period;
    for (std::int64_t n = 0; n < threshold; ++n)
        if (member(n))
            e.exceptions.insert(n);
    for (std::int64_t i = 0; i < period; ++i)
        if (member(threshold + i))
            e.residues.insert((threshold + i) % period);
    return canonical_epset(e);
}

/// Reads an eventually periodic set off a unary automaton. The canonical
/// automaton of a unary language is a path that enters a cycle, so the visit
/// order along `a` gives threshold and period directly.
inline EPSet to_epset(const Dfa& language) {
    if (language.alphabet.size() != 1)
        throw error("to_epset requires a single-letter alphabet");
    Dfa d = canonicalize(language);

    std::vector<int> seen_at(static_cast<std::size_t>(d.state_count()), -1);
    std::vector<int> path;
    int q = d.initial;
    while (seen_at[static_cast<std::size_t>(q)] < 0) {
        seen_at[static_cast<std::size_t>(q)] = static_cast<int>(path.size());
        path.push_back(q);
        q = d.delta[static_cast<std::size_t>(q)][0];
    }
    const std::int64_t tail = seen_at[static_cast<std::size_t>(q)];
    const std::int64_t cycle = static_cast<std::int64_t>(path.size()) - tail;

    auto member = [&](std::int64_t n) {
        std::int64_t i = n < static_cast<std::int64_t>(path.size())
                             ? n
                             : tail + (n - tail) % cycle;
        return static_cast<bool>(d.accepting[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])]);
    };
    return epset_from_fn(member, tail, cycle);
}

/// Unary automaton of an EPSet over the given letter.
inline Dfa from_epset(const EPSet& in, char letter = 'a') {
    EPSet e = canonical_epset(in);
    Dfa d;
    d.alphabet = Alphabet(std::string(1, letter));
    d.initial = 0;
    const std::int64_t n = e.threshold + e.period;
    d.delta.assign(static_cast<std::size_t>(n), std::vector<int>(1));
    d.accepting.assign(static_cast<std::size_t>(n), false);
    for (std::int64_t i = 0; i < n; ++i) {
        d.delta[static_cast<std::size_t>(i)][0] =
            static_cast<int>(i + 1 < n ? i + 1 : e.threshold);
        d.accepting[static_cast<std::size_t>(i)] = e.member(i);
    }
    return canonicalize(d);
}

/// L - 1 = { n : n + 1 in L }.
inline EPSet ep_shift(const EPSet& e) {
    std::int64_t threshold = e.threshold > 0 ? e.threshold - 1 : 0;
    return epset_from_fn([&](std::int64_t n) { return e.member(n + 1); }, threshold, e.period);
}

/// L / k = { n : k n in L }, k >= 1.
inline EPSet ep_divide(const EPSet& e, std::int64_t k) {
    if (k < 1)
        throw error("division requires k >= 1");
    std::int64_t threshold = (e.threshold + k - 1) / k;
    std::int64_t period = e.period / std::gcd(e.period, k);
    return epset_from_fn([&](std::int64_t n) { return e.member(k * n); }, threshold, period);
}

inline std::string to_string(const EPSet& e) {
    std::string out = "{";
    bool first = true;
    for (std::int64_t x : e.exceptions) {
        if (!first)
            out += ",";
        out += std::to_string(x);
        first = false;
    }
    out += "} + t" + std::to_string(e.threshold) + " p" + std::to_string(e.period) + " {";
    first = true;
    for (std::int64_t r : e.residues) {
        if (!first)
            out += ",";
        out += std::to_string(r);
        first = false;
    }
    return out + "}";
}

} // namespace synmon

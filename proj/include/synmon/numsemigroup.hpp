#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/epset.hpp"
#include "synmon/errors.hpp"
#include "synmon/ineq.hpp"
#include "synmon/syntactic.hpp"

namespace synmon {

/// Additive submonoid of the naturals generated by a finite set. Membership
/// is tabulated far enough for the pattern to stabilize: beyond the table the
/// set is periodic with period gcd(S).
struct NumericalSemigroup {
    std::vector<std::int64_t> generators;         // the input set, sorted, no zeros
    std::vector<std::int64_t> minimal_generators; // no proper subset generates
    std::vector<bool> table;                      // membership of 0..bound
    std::int64_t bound = 0;
    std::int64_t period = 1;                      // gcd of the generators
    std::optional<std::int64_t> conductor;        // least c with [c, oo) inside; empty if none

    bool member(std::int64_t n) const {
        if (n < 0)
            return false;
        if (n <= bound)
            return table[static_cast<std::size_t>(n)];
        // Stabilized region: multiples of the gcd are all present (the empty
        // set generates only {0} and never stabilizes to anything else).
        return !generators.empty() && n % period == 0;
    }
};

inline NumericalSemigroup nsg_generate(std::vector<std::int64_t> s) {
    NumericalSemigroup out;
    for (std::int64_t x : s) {
        if (x < 0)
            throw error("generators must be natural numbers");
        if (x > 0)
            out.generators.push_back(x);
    }
    std::sort(out.generators.begin(), out.generators.end());
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()),
                         out.generators.end());

    if (out.generators.empty()) {
        out.table = {true};
        out.bound = 0;
        out.period = 1;
        out.conductor = std::nullopt; // the complement of {0} is infinite
        return out;
    }

    std::int64_t g = 0;
    for (std::int64_t x : out.generators)
        g = std::gcd(g, x);
    out.period = g;

    // Stabilization bound: 2 (max/g)^2 + max/g in the gcd-scaled semigroup
    // covers its conductor; scale back up.
    std::int64_t scaled_max = out.generators.back() / g;
    out.bound = (2 * scaled_max * scaled_max + scaled_max) * g;
    out.table.assign(static_cast<std::size_t>(out.bound) + 1, false);
    out.table[0] = true;
    for (std::int64_t n = 1; n <= out.bound; ++n)
        for (std::int64_t x : out.generators) {
            if (x > n)
                break;
            if (out.table[static_cast<std::size_t>(n - x)]) {
                out.table[static_cast<std::size_t>(n)] = true;
                break;
            }
        }

    if (g == 1) {
        std::int64_t c = out.bound + 1;
        for (std::int64_t n = out.bound; n >= 0 && out.table[static_cast<std::size_t>(n)]; --n)
            c = n;
        // c is now the start of the trailing all-present run, i.e. the conductor.
        out.conductor = c;
    } else {
        out.conductor = std::nullopt;
    }

    // The minimal generating set is contained in every generating set: keep
    // the generators that are not sums of two smaller members.
    for (std::int64_t x : out.generators) {
        bool decomposable = false;
        for (std::int64_t y = 1; y < x && !decomposable; ++y)
            if (out.member(y) && out.member(x - y))
                decomposable = true;
        if (!decomposable)
            out.minimal_generators.push_back(x);
    }
    return out;
}

/// The language { a^{n+1} : n in <S> } over a single-letter alphabet.
inline Dfa build_ls(const std::vector<std::int64_t>& s, char letter = 'a') {
    NumericalSemigroup nsg = nsg_generate(s);
    EPSet e = epset_from_fn(
        [&](std::int64_t n) { return n >= 1 && nsg.member(n - 1); },
        nsg.bound + 2, nsg.period);
    return from_epset(e, letter);
}

/// For each m up to the bound, whether the ordered syntactic monoid of L_S
/// satisfies x <= x^{m+1}. The verdicts must coincide with membership of m in
/// <S>; a mismatch signals an implementation bug and raises.
inline std::vector<std::pair<std::int64_t, bool>> vs_characterization(
    const std::vector<std::int64_t>& s, std::int64_t m_bound) {
    if (m_bound < 1)
        throw error("the inequality bound must be at least 1");
    NumericalSemigroup nsg = nsg_generate(s);
    SyntacticData syn = transition_monoid(build_ls(s));

    std::vector<std::pair<std::int64_t, bool>> out;
    for (std::int64_t m = 0; m <= m_bound; ++m) {
        Inequality ineq;
        ineq.lhs.factor('x', Exponent::finite(1));
        ineq.rhs.factor('x', Exponent::finite(m + 1));
        bool holds = satisfies(syn.monoid, ineq);
        if (holds != nsg.member(m))
            throw error("inequality satisfaction disagrees with semigroup membership at m = " +
                        std::to_string(m));
        out.emplace_back(m, holds);
    }
    return out;
}

} // namespace synmon

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "synmon/errors.hpp"
#include "synmon/omega_term.hpp"
#include "synmon/ordered_monoid.hpp"
#include "synmon/stamp.hpp"

namespace synmon {

/// How the variables of an inequality are quantified when checking a stamp:
/// over the whole target monoid, over the letter images only (length-
/// preserving substitutions), or over the letter images plus the identity
/// (length-decreasing substitutions).
enum class SatMode { Monoid, Lp, Ld };

inline int eval_term(const OmegaTerm& t, const OrderedMonoid& m,
                     const std::map<char, int>& assignment) {
    int acc = m.identity;
    for (const auto& [v, e] : t.factors) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw error(std::string("unassigned variable '") + v + "'");
        int x = it->second;
        int val = e.kind == Exponent::Kind::Finite ? m.pow(x, e.k) : m.omega_power(x, e.k);
        acc = m.mul(acc, val);
    }
    return acc;
}

namespace detail {

inline bool holds_at(const OrderedMonoid& m, const Inequality& ineq,
                     const std::map<char, int>& assignment) {
    int l = eval_term(ineq.lhs, m, assignment);
    int r = eval_term(ineq.rhs, m, assignment);
    return ineq.equality ? (m.le(l, r) && m.le(r, l)) : m.le(l, r);
}

inline std::optional<std::map<char, int>> search_violation(const OrderedMonoid& m,
                                                           const Inequality& ineq,
                                                           const std::vector<int>& domain) {
    std::vector<char> vars = ineq.variables();
    if (vars.size() > 3)
        throw error("inequalities are limited to 3 variables");
    std::map<char, int> assignment;
    // Odometer over domain^#vars.
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            assignment[vars[i]] = domain[idx[i]];
        if (!holds_at(m, ineq, assignment))
            return assignment;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < domain.size())
                break;
            idx[i] = 0;
        }
        if (i == idx.size())
            return std::nullopt;
    }
}

} // namespace detail

/// A violating assignment if M does not satisfy the inequality, otherwise
/// nothing. Quantifies over all elements for every variable.
inline std::optional<std::map<char, int>> find_violation(const OrderedMonoid& m,
                                                         const Inequality& ineq) {
    std::vector<int> domain(static_cast<std::size_t>(m.n));
    for (int x = 0; x < m.n; ++x)
        domain[static_cast<std::size_t>(x)] = x;
    return detail::search_violation(m, ineq, domain);
}

inline bool satisfies(const OrderedMonoid& m, const Inequality& ineq) {
    return !find_violation(m, ineq).has_value();
}

inline std::optional<std::map<char, int>> stamp_find_violation(const Stamp& s,
                                                               const Inequality& ineq,
                                                               SatMode mode) {
    if (mode == SatMode::Monoid)
        return find_violation(s.target, ineq);
    std::vector<int> domain;
    auto add = [&](int x) {
        for (int y : domain)
            if (y == x)
                return;
        domain.push_back(x);
    };
    for (int img : s.images)
        add(img);
    if (mode == SatMode::Ld)
        add(s.target.identity);
    if (domain.empty())
        return std::nullopt; // empty alphabet: no length-preserving substitution exists
    return detail::search_violation(s.target, ineq, domain);
}

inline bool stamp_satisfies(const Stamp& s, const Inequality& ineq, SatMode mode) {
    return !stamp_find_violation(s, ineq, mode).has_value();
}

/// Builds x^p <= x^q with x^0 meaning the empty term.
inline Inequality power_inequality(int p, int q) {
    Inequality ineq;
    if (p > 0)
        ineq.lhs.factor('x', Exponent::finite(p));
    if (q > 0)
        ineq.rhs.factor('x', Exponent::finite(q));
    return ineq;
}

/// All pairs (p, q) with 0 <= p, q <= bound such that M satisfies x^p <= x^q.
inline std::vector<std::pair<int, int>> enumerate_power_inequalities(const OrderedMonoid& m,
                                                                     int bound) {
    if (bound < 1)
        throw error("enumeration bound must be at least 1");
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) {
            bool ok = true;
            for (int x = 0; x < m.n && ok; ++x)
                ok = m.le(m.pow(x, p), m.pow(x, q));
            if (ok)
                out.emplace_back(p, q);
        }
    return out;
}

} // namespace synmon

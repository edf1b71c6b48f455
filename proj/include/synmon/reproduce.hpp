#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "synmon/closure.hpp"
#include "synmon/dfa.hpp"
#include "synmon/display.hpp"
#include "synmon/downset.hpp"
#include "synmon/epset.hpp"
#include "synmon/ineq.hpp"
#include "synmon/lang_ops.hpp"
#include "synmon/numsemigroup.hpp"
#include "synmon/syntactic.hpp"

namespace synmon::reproduce {

/// One golden computation with its expected outcome, grouped by the
/// acceptance criterion it belongs to. `run` returns pass/fail and fills
/// `detail` with the computed value on failure (and sometimes on success).
struct Check {
    int criterion;
    std::string name;
    std::function<bool(std::string& detail)> run;
};

namespace detail {

/// Shared heavyweight artifacts, computed once per run.
struct Context {
    Alphabet a{"a"};
    Dfa l1, l2, l3;
    SyntacticData s1, s2, s3;
    ClosureFamily f1, f2, f3;

    Context() {
        l1 = compile("1 + a", a);
        l2 = compile("a + a^6 a*", a);
        l3 = compile("a + (a^3 + a^4)(a^7)*", a);
        s1 = transition_monoid(l1);
        s2 = transition_monoid(l2);
        s3 = transition_monoid(l3);
        f1 = lattice_closure({l1}, lattice_quotient_ops());
        f2 = lattice_closure({l2}, lattice_quotient_ops());
        f3 = lattice_closure({l3}, lattice_quotient_ops());
    }

    std::set<std::string> family_keys(const ClosureFamily& f) const {
        std::set<std::string> keys;
        for (const auto& m : f.members)
            keys.insert(canonical_key(m));
        return keys;
    }
};

inline std::string pair_list(const std::vector<std::pair<int, int>>& ps) {
    std::string s;
    for (auto [x, y] : ps)
        s += " " + std::to_string(x) + "<" + std::to_string(y);
    return s.empty() ? " (none)" : s;
}

inline bool sat(const OrderedMonoid& m, const std::string& text) {
    return satisfies(m, parse_inequality(text));
}

/// The syntactic monoid of <a | a^9 = a^2> with the order replaced by
/// equality, i.e. the plain presented monoid; its downsets are arbitrary
/// subsets.
inline OrderedMonoid presented_a9_eq_a2(const Context& ctx) {
    OrderedMonoid m = ctx.s3.monoid;
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            m.leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(m.n) +
                  static_cast<std::size_t>(y)] = (x == y) ? 1 : 0;
    return m;
}

/// a^n(F + a^5 a*) as a regex over {a}.
inline std::string family_regex(int n, const std::set<int>& f) {
    std::string inner;
    for (int k : f)
        inner += "a^" + std::to_string(k) + " + ";
    inner += "a^5 a*";
    return "a^" + std::to_string(n) + " (" + inner + ")";
}

inline std::string set_text(const std::set<int>& f) {
    std::string s = "{";
    for (int k : f)
        s += (s.size() > 1 ? "," : "") + std::to_string(k);
    return s + "}";
}

} // namespace detail

inline std::vector<Check> make_checks() {
    auto ctx = std::make_shared<detail::Context>();
    std::vector<Check> checks;
    auto add = [&](int crit, std::string name, std::function<bool(std::string&)> run) {
        checks.push_back({crit, std::move(name), std::move(run)});
    };

    // --- criterion 1: the language 1 + a ---
    add(1, "syntactic monoid of 1 + a is {1, a, 0} with a^2 = 0", [ctx](std::string& d) {
        const OrderedMonoid& m = ctx->s1.monoid;
        if (m.n != 3) {
            d = "size " + std::to_string(m.n);
            return false;
        }
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                if (m.mul(x, y) != std::min(x + y, 2)) {
                    d = "unexpected product";
                    return false;
                }
        return true;
    });
    add(1, "syntactic order of 1 + a is 0 < a < 1", [ctx](std::string& d) {
        // element indices: 0 = identity, 1 = a, 2 = a^2 (the zero)
        std::vector<std::pair<int, int>> expect = {{1, 0}, {2, 0}, {2, 1}};
        auto got = strict_pairs(ctx->s1.monoid);
        std::sort(got.begin(), got.end());
        if (got != expect) {
            d = "strict pairs:" + detail::pair_list(got);
            return false;
        }
        return true;
    });

    // --- criterion 2: the language a + a^6 a* ---
    add(2, "syntactic monoid of a + a^6 a* is {0..6} with xy = min(x+y, 6)",
        [ctx](std::string& d) {
            const OrderedMonoid& m = ctx->s2.monoid;
            if (m.n != 7) {
                d = "size " + std::to_string(m.n);
                return false;
            }
            for (int x = 0; x < 7; ++x)
                for (int y = 0; y < 7; ++y)
                    if (m.mul(x, y) != std::min(x + y, 6)) {
                        d = "unexpected product";
                        return false;
                    }
            auto idem = monoid_props(m).idempotents;
            if (idem != std::vector<int>{0, 6}) {
                d = "idempotents differ";
                return false;
            }
            return true;
        });
    add(2, "order of a + a^6 a* reduces to the six edges 2<3 3<4 4<5 5<6 0<5 1<6",
        [ctx](std::string& d) {
            auto covers = covering_pairs(ctx->s2.monoid);
            std::sort(covers.begin(), covers.end());
            std::vector<std::pair<int, int>> expect = {{0, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
            if (covers != expect) {
                d = "covers:" + detail::pair_list(covers);
                return false;
            }
            const OrderedMonoid& m = ctx->s2.monoid;
            if (!(m.le(1, 6) && m.le(0, 5) && !m.le(1, 5) && !m.le(6, 1))) {
                d = "pointwise order assertions differ";
                return false;
            }
            return true;
        });

    // --- criterion 3: the language a + (a^3 + a^4)(a^7)* ---
    add(3, "minimal automaton of a + (a^3 + a^4)(a^7)* is the 9-state tail-cycle with finals {1,3,4}",
        [ctx](std::string& d) {
            const Dfa& l = ctx->l3;
            if (l.state_count() != 9 || l.final_states() != std::vector<int>{1, 3, 4}) {
                d = "states " + std::to_string(l.state_count());
                return false;
            }
            for (int q = 0; q < 9; ++q)
                if (l.delta[static_cast<std::size_t>(q)][0] != (q < 8 ? q + 1 : 2)) {
                    d = "transition structure differs";
                    return false;
                }
            return true;
        });
    add(3, "syntactic monoid of a + (a^3 + a^4)(a^7)* satisfies a^9 = a^2", [ctx](std::string& d) {
        const OrderedMonoid& m = ctx->s3.monoid;
        int g = ctx->s3.stamp.images[0];
        if (m.n != 9 || m.pow(g, 9) != m.pow(g, 2)) {
            d = "presentation differs";
            return false;
        }
        return true;
    });
    add(3, "syntactic order of a + (a^3 + a^4)(a^7)* is equality", [ctx](std::string& d) {
        auto pairs = strict_pairs(ctx->s3.monoid);
        if (!pairs.empty()) {
            d = "computed strict pairs:" + detail::pair_list(pairs) +
                " (consistent with the quotient-lattice condition 7-in-F implies 0-in-F, "
                "8-in-F implies 1-in-F)";
            return false;
        }
        return true;
    });

    // --- criterion 4: closure of 1 + a ---
    add(4, "closure of {1 + a} is exactly {0, 1, 1 + a, a*}", [ctx](std::string& d) {
        std::set<std::string> expect;
        for (const char* t : {"0", "1", "1 + a", "a*"})
            expect.insert(canonical_key(compile(t, ctx->a)));
        auto got = ctx->family_keys(ctx->f1);
        if (got != expect) {
            d = "family size " + std::to_string(got.size());
            return false;
        }
        return true;
    });
    add(4, "monoid of 1 + a satisfies xy = yx, x <= 1, x^2 <= x^3", [ctx](std::string& d) {
        const OrderedMonoid& m = ctx->s1.monoid;
        if (!detail::sat(m, "x y = y x") || !detail::sat(m, "x <= 1") ||
            !detail::sat(m, "x^2 <= x^3")) {
            d = "an expected inequality fails";
            return false;
        }
        return true;
    });
    add(4, "monoid of 1 + a fails 1 <= x^q (q in 1..7) and x <= x^q (q in 2..7)",
        [ctx](std::string& d) {
            const OrderedMonoid& m = ctx->s1.monoid;
            for (int q = 1; q <= 7; ++q)
                if (satisfies(m, power_inequality(0, q))) {
                    d = "1 <= x^" + std::to_string(q) + " unexpectedly holds";
                    return false;
                }
            for (int q = 2; q <= 7; ++q)
                if (satisfies(m, power_inequality(1, q))) {
                    d = "x <= x^" + std::to_string(q) + " unexpectedly holds";
                    return false;
                }
            return true;
        });

    // --- criterion 5: closure of a + a^6 a* ---
    add(5, "closure of {a + a^6 a*} equals the reference list of languages", [ctx](std::string& d) {
        std::set<std::string> expect;
        expect.insert(canonical_key(compile("0", ctx->a)));
        for (int i = 0; i <= 6; ++i)
            expect.insert(canonical_key(compile("a^" + std::to_string(i) + " a*", ctx->a)));
        for (int i = 1; i <= 5; ++i)
            expect.insert(canonical_key(compile("1 + a^" + std::to_string(i) + " a*", ctx->a)));
        for (int i = 3; i <= 6; ++i)
            expect.insert(canonical_key(compile("a + a^" + std::to_string(i) + " a*", ctx->a)));
        for (int i = 3; i <= 5; ++i)
            expect.insert(canonical_key(compile("1 + a + a^" + std::to_string(i) + " a*", ctx->a)));
        auto got = ctx->family_keys(ctx->f2);
        if (got != expect) {
            d = "family differs from the list";
            return false;
        }
        return true;
    });
    add(5, "closure of {a + a^6 a*} has exactly 20 members", [ctx](std::string& d) {
        if (ctx->f2.members.size() != 20) {
            d = "computed " + std::to_string(ctx->f2.members.size()) +
                " distinct languages (the reference list entry 1 + a a* equals a*)";
            return false;
        }
        return true;
    });
    add(5, "monoid of a + a^6 a* satisfies xy = yx, 1 <= x^5, x^2 <= x^3, x^6 = x^7",
        [ctx](std::string& d) {
            const OrderedMonoid& m = ctx->s2.monoid;
            for (const char* t : {"x y = y x", "1 <= x^5", "x^2 <= x^3", "x^6 = x^7"})
                if (!detail::sat(m, t)) {
                    d = std::string("fails ") + t;
                    return false;
                }
            return true;
        });
    add(5, "power inequalities of a + a^6 a* with p = 0 are exactly 1 <= x^q for q in {0,5,6,7}",
        [ctx](std::string& d) {
            std::vector<std::pair<int, int>> zero_rows;
            for (auto [p, q] : enumerate_power_inequalities(ctx->s2.monoid, 7))
                if (p == 0)
                    zero_rows.emplace_back(p, q);
            std::vector<std::pair<int, int>> expect = {{0, 0}, {0, 5}, {0, 6}, {0, 7}};
            if (zero_rows != expect) {
                d = "rows:" + detail::pair_list(zero_rows);
                return false;
            }
            return true;
        });

    // --- criterion 6: the a^n(F + a^5 a*) family algebra ---
    // Deterministically seeded draws of (F, G) pairs.
    auto draw_pairs = [] {
        std::mt19937 rng(20240615);
        std::vector<std::pair<std::set<int>, std::set<int>>> pairs;
        for (int i = 0; i < 10; ++i) {
            std::set<int> f, g;
            for (int k = 0; k <= 4; ++k) {
                if (rng() % 2)
                    f.insert(k);
                if (rng() % 2)
                    g.insert(k);
            }
            pairs.emplace_back(f, g);
        }
        return pairs;
    };
    add(6, "union closed form a^n(F + a^5 a*) + a^m(G + a^5 a*) = a^n(F + a^(m-n) G + a^5 a*)",
        [ctx, draw_pairs](std::string& d) {
            for (auto& [f, g] : draw_pairs())
                for (int n = 0; n <= 3; ++n)
                    for (int m = 0; m <= 3; ++m) {
                        const auto& fl = n <= m ? f : g;
                        const auto& gl = n <= m ? g : f;
                        int nl = std::min(n, m), ml = std::max(n, m);
                        Dfa lhs = union_of(compile(detail::family_regex(n, f), ctx->a),
                                           compile(detail::family_regex(m, g), ctx->a));
                        std::set<int> inner = fl;
                        for (int k : gl)
                            inner.insert(ml - nl + k);
                        std::string rhs_text;
                        for (int k : inner)
                            rhs_text += "a^" + std::to_string(k) + " + ";
                        rhs_text = "a^" + std::to_string(nl) + " (" + rhs_text + "a^5 a*)";
                        if (!equivalent(lhs, compile(rhs_text, ctx->a))) {
                            d = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                " F=" + detail::set_text(f) + " G=" + detail::set_text(g);
                            return false;
                        }
                    }
            return true;
        });
    add(6, "product closed form a^n(F + a^5 a*) a^m(G + a^5 a*) = a^(n+m)(FG + a^5 a*)",
        [ctx, draw_pairs](std::string& d) {
            for (auto& [f, g] : draw_pairs())
                for (int n = 0; n <= 3; ++n)
                    for (int m = 0; m <= 3; ++m) {
                        Dfa lhs = shuffle(compile(detail::family_regex(n, f), ctx->a),
                                          compile(detail::family_regex(m, g), ctx->a));
                        std::set<int> fg;
                        for (int x : f)
                            for (int y : g)
                                fg.insert(x + y);
                        std::string rhs_text;
                        for (int k : fg)
                            rhs_text += "a^" + std::to_string(k) + " + ";
                        rhs_text = "a^" + std::to_string(n + m) + " (" + rhs_text + "a^5 a*)";
                        Dfa rhs = compile(rhs_text, ctx->a);
                        if (!equivalent(lhs, rhs)) {
                            d = "counterexample n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                " F=" + detail::set_text(f) + " G=" + detail::set_text(g) +
                                ": lhs = " + display_regex(lhs) + ", rhs = " + display_regex(rhs);
                            return false;
                        }
                    }
            return true;
        });
    add(6, "intersections of a^n(F + a^5 a*) languages agree with pointwise membership",
        [ctx, draw_pairs](std::string& d) {
            for (auto& [f, g] : draw_pairs())
                for (int n = 0; n <= 3; ++n)
                    for (int m = 0; m <= 3; ++m) {
                        Dfa x = compile(detail::family_regex(n, f), ctx->a);
                        Dfa y = compile(detail::family_regex(m, g), ctx->a);
                        Dfa both = intersection_of(x, y);
                        for (int len = 0; len <= 30; ++len) {
                            std::string w(static_cast<std::size_t>(len), 'a');
                            if (both.accepts(w) != (x.accepts(w) && y.accepts(w))) {
                                d = "length " + std::to_string(len);
                                return false;
                            }
                        }
                    }
            return true;
        });

    // --- criterion 7: the quotient lattice of a + (a^3 + a^4)(a^7)* ---
    add(7, "the eight quotient final-state tables of a + (a^3 + a^4)(a^7)*", [ctx](std::string& d) {
        const std::vector<std::vector<int>> table = {
            {0, 2, 3}, {1, 2, 8}, {0, 1, 7, 8}, {0, 6, 7},
            {5, 6},    {4, 5},    {3, 4},       {2, 3},
        };
        for (int j = 1; j <= 8; ++j) {
            // Final states of a^-j L on the 9-state automaton itself: the
            // states from which a^j reaches a final state.
            std::vector<int> fj;
            for (int q = 0; q < 9; ++q)
                if (ctx->l3.accepting[static_cast<std::size_t>(
                        ctx->l3.run(q, std::string(static_cast<std::size_t>(j), 'a')))])
                    fj.push_back(q);
            if (fj != table[static_cast<std::size_t>(j - 1)]) {
                d = "quotient by a^" + std::to_string(j) + " differs";
                return false;
            }
            // And the corresponding language equals the left quotient.
            Dfa lf = ctx->l3;
            lf.accepting.assign(9, false);
            for (int q : fj)
                lf.accepting[static_cast<std::size_t>(q)] = true;
            if (!equivalent(lf, left_quotient(std::string(static_cast<std::size_t>(j), 'a'), ctx->l3))) {
                d = "quotient language mismatch at j=" + std::to_string(j);
                return false;
            }
        }
        return true;
    });
    add(7, "the nine displayed quotient intersections hold as language identities",
        [ctx](std::string& d) {
            auto lang_of = [&](const std::vector<int>& finals) {
                Dfa lf = ctx->l3;
                lf.accepting.assign(9, false);
                for (int q : finals)
                    lf.accepting[static_cast<std::size_t>(q)] = true;
                return canonicalize(lf);
            };
            const std::vector<std::array<std::vector<int>, 3>> rows = {
                {{{0}, {0, 2, 3}, {0, 6, 7}}},       {{{1}, {1, 3, 4}, {1, 2, 8}}},
                {{{2}, {0, 2, 3}, {1, 2, 8}}},       {{{3}, {1, 3, 4}, {0, 2, 3}}},
                {{{4}, {3, 4}, {4, 5}}},             {{{5}, {4, 5}, {5, 6}}},
                {{{6}, {5, 6}, {0, 6, 7}}},          {{{0, 7}, {0, 6, 7}, {0, 1, 7, 8}}},
                {{{1, 8}, {1, 2, 8}, {0, 1, 7, 8}}},
            };
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (!equivalent(lang_of(rows[i][0]),
                                intersection_of(lang_of(rows[i][1]), lang_of(rows[i][2])))) {
                    d = "intersection row " + std::to_string(i + 1);
                    return false;
                }
            return true;
        });
    add(7, "closure of {a + (a^3 + a^4)(a^7)*} has exactly 288 members", [ctx](std::string& d) {
        if (ctx->f3.members.size() != 288) {
            d = "computed " + std::to_string(ctx->f3.members.size());
            return false;
        }
        // Cross-check: the members are exactly the final-state languages
        // whose final set F satisfies 7-in-F => 0-in-F and 8-in-F => 1-in-F.
        std::set<std::string> expect;
        for (int mask = 0; mask < 512; ++mask) {
            bool ok = (!(mask >> 7 & 1) || (mask & 1)) && (!(mask >> 8 & 1) || (mask >> 1 & 1));
            if (!ok)
                continue;
            Dfa lf = ctx->l3;
            lf.accepting.assign(9, false);
            for (int q = 0; q < 9; ++q)
                if (mask >> q & 1)
                    lf.accepting[static_cast<std::size_t>(q)] = true;
            expect.insert(canonical_key(canonicalize(lf)));
        }
        if (ctx->family_keys(ctx->f3) != expect) {
            d = "family differs from the condition-derived list";
            return false;
        }
        return true;
    });
    add(7, "closure of {a + (a^3 + a^4)(a^7)*} is closed under complement", [ctx](std::string& d) {
        for (const auto& m : ctx->f3.members)
            if (!ctx->f3.contains(complement_of(m))) {
                d = "member " + display_regex(m) + " has complement " +
                    display_regex(complement_of(m)) + " outside the family";
                return false;
            }
        return true;
    });
    add(7, "syntactic monoid of a + (a^3 + a^4)(a^7)* satisfies x^2 = x^9", [ctx](std::string& d) {
        if (!detail::sat(ctx->s3.monoid, "x^2 = x^9")) {
            d = "fails";
            return false;
        }
        return true;
    });
    add(7, "511-element power monoid of <a | a^9 = a^2> satisfies xy = yx and x^w = x^(w+7)",
        [ctx](std::string& d) {
            OrderedMonoid pm = downset_monoid(detail::presented_a9_eq_a2(*ctx), false);
            if (pm.n != 511) {
                d = "size " + std::to_string(pm.n);
                return false;
            }
            if (!detail::sat(pm, "x y = y x") || !detail::sat(pm, "x^w = x^(w+7)")) {
                d = "an expected identity fails";
                return false;
            }
            return true;
        });

    // --- criterion 8: downset laws ---
    add(8, "P0(trivial) is isomorphic to U1", [](std::string& d) {
        if (!isomorphic(downset_monoid(trivial_monoid(), true), u1_down())) {
            d = "not isomorphic";
            return false;
        }
        return true;
    });
    add(8, "U1 satisfies xy = yx, x = x^2, x <= 1 and fails 1 <= x", [](std::string& d) {
        OrderedMonoid u = u1_down();
        if (!detail::sat(u, "x y = y x") || !detail::sat(u, "x = x^2") || !detail::sat(u, "x <= 1") ||
            detail::sat(u, "1 <= x")) {
            d = "identity set differs";
            return false;
        }
        return true;
    });
    add(8, "the map (X,1) -> X, (X,0) -> 0 is a quotient morphism for the example monoids",
        [ctx](std::string& d) {
            std::vector<std::pair<std::string, const OrderedMonoid*>> cases = {
                {"trivial", nullptr},
                {"1 + a", &ctx->s1.monoid},
                {"a + a^6 a*", &ctx->s2.monoid},
                {"a + (a^3 + a^4)(a^7)*", &ctx->s3.monoid},
            };
            OrderedMonoid triv = trivial_monoid();
            for (auto& [name, m] : cases)
                if (!quotient_check(m ? *m : triv)) {
                    d = "fails for the monoid of " + name;
                    return false;
                }
            return true;
        });

    // --- criterion 9: numerical semigroups ---
    add(9, "x <= x^(m+1) characterizes membership in <S> for all S within {1..6}, m <= 12",
        [](std::string& d) {
            for (int mask = 1; mask < 64; ++mask) {
                std::vector<std::int64_t> s;
                for (int i = 0; i < 6; ++i)
                    if (mask >> i & 1)
                        s.push_back(i + 1);
                try {
                    vs_characterization(s, 12); // raises on any mismatch
                } catch (const error& e) {
                    d = e.what();
                    return false;
                }
            }
            return true;
        });
    add(9, "monoid of a (a^n)* satisfies x <= x^(m+1) iff n divides m, for n, m <= 8",
        [](std::string& d) {
            Alphabet a("a");
            for (int n = 1; n <= 8; ++n) {
                SyntacticData syn =
                    transition_monoid(compile("a (a^" + std::to_string(n) + ")*", a));
                for (int m = 0; m <= 8; ++m) {
                    bool holds = satisfies(syn.monoid, power_inequality(1, m + 1));
                    if (holds != (m % n == 0)) {
                        d = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                        return false;
                    }
                }
            }
            return true;
        });
    add(9, "equal inequality sets iff equal truncated semigroups, S, T within {1..6}",
        [](std::string& d) {
            struct Row {
                std::vector<bool> sat;
                std::vector<bool> members;
                std::int64_t period;
            };
            std::vector<Row> rows;
            for (int mask = 1; mask < 64; ++mask) {
                std::vector<std::int64_t> s;
                for (int i = 0; i < 6; ++i)
                    if (mask >> i & 1)
                        s.push_back(i + 1);
                Row row;
                NumericalSemigroup nsg = nsg_generate(s);
                row.period = nsg.period;
                for (std::int64_t m = 0; m <= 12; ++m)
                    row.members.push_back(nsg.member(m));
                for (auto [m, holds] : vs_characterization(s, 12))
                    row.sat.push_back(holds);
                rows.push_back(std::move(row));
            }
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    bool same_sat = rows[i].sat == rows[j].sat;
                    bool same_sg =
                        rows[i].members == rows[j].members && rows[i].period == rows[j].period;
                    if (same_sat != same_sg) {
                        d = "pair " + std::to_string(i) + "," + std::to_string(j);
                        return false;
                    }
                }
            return true;
        });

    return checks;
}

struct Report {
    int passed = 0;
    int failed = 0;
};

/// Runs every golden check, printing one status line each.
inline Report run_all(std::ostream& out) {
    Report report;
    for (const auto& check : make_checks()) {
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        out << (ok ? "[PASS] " : "[FAIL] ") << check.name;
        if (!ok && !detail.empty())
            out << "\n       " << detail;
        out << "\n";
        (ok ? report.passed : report.failed)++;
    }
    out << report.passed << " passed, " << report.failed << " failed\n";
    return report;
}

} // namespace synmon::reproduce

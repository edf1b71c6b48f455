#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "synmon/synmon.hpp"

using namespace synmon;
using namespace testsupport;

namespace {
const Alphabet A("a");
const Alphabet AB("ab");

SyntacticData syn_of(const char* text) {
    return transition_monoid(compile(text, A));
}
} // namespace

TEST_CASE("term and inequality parsing") {
    Inequality i = parse_inequality("x y^(w+1) <= x^w y");
    REQUIRE_FALSE(i.equality);
    REQUIRE(i.lhs.factors.size() == 2);
    REQUIRE(i.lhs.factors[1].second == Exponent::omega_plus(1));
    REQUIRE(i.rhs.factors[0].second == Exponent::omega_plus(0));
    REQUIRE(to_string(i) == "x y^(w+1) <= x^w y");

    Inequality eq = parse_inequality("x y = y x");
    REQUIRE(eq.equality);
    REQUIRE(parse_inequality("1 <= x^5").lhs.factors.empty());
    REQUIRE(parse_inequality("x^0 <= x").lhs.factors.empty());

    REQUIRE_THROWS_AS(parse_inequality("x <"), parse_error);
    REQUIRE_THROWS_AS(parse_inequality("x <= x^(w"), parse_error);
    REQUIRE_THROWS_AS(parse_inequality("<= x"), parse_error);
    REQUIRE_THROWS_AS(Exponent::finite(0), error);
    REQUIRE_THROWS_AS(Exponent::omega_plus(-1), error);
}

TEST_CASE("term evaluation") {
    SyntacticData m6 = syn_of("a + a^6 a*");
    std::map<char, int> x1 = {{'x', 1}};
    REQUIRE(eval_term(parse_omega_term("x^w"), m6.monoid, x1) == 6);
    REQUIRE(eval_term(parse_omega_term("1"), m6.monoid, x1) == m6.monoid.identity);

    SyntacticData m9 = syn_of("a + (a^3 + a^4)(a^7)*");
    std::map<char, int> xa = {{'x', m9.stamp.images[0]}};
    REQUIRE(eval_term(parse_omega_term("x^(w+7)"), m9.monoid, xa) ==
            eval_term(parse_omega_term("x^w"), m9.monoid, xa));
    REQUIRE(eval_term(parse_omega_term("x^w"), m9.monoid, xa) == 7);

    REQUIRE_THROWS_AS(eval_term(parse_omega_term("x y"), m6.monoid, x1), error);
}

TEST_CASE("satisfaction in the worked monoids") {
    SyntacticData m1 = syn_of("1 + a");
    REQUIRE(satisfies(m1.monoid, parse_inequality("x <= 1")));
    REQUIRE(satisfies(m1.monoid, parse_inequality("x^2 <= x^3")));
    for (int q = 1; q <= 6; ++q)
        REQUIRE_FALSE(satisfies(m1.monoid, power_inequality(0, q)));

    SyntacticData m6 = syn_of("a + a^6 a*");
    for (const char* t : {"x y = y x", "1 <= x^5", "x^2 <= x^3", "x^6 = x^7"})
        REQUIRE(satisfies(m6.monoid, parse_inequality(t)));

    auto witness = find_violation(m6.monoid, parse_inequality("1 <= x^2"));
    REQUIRE(witness.has_value());
    REQUIRE(witness->at('x') == 1); // identity <= a^2 fails at x = a
}

TEST_CASE("stamp satisfaction modes") {
    SECTION("x = x holds in every mode") {
        SyntacticData syn = syn_of("a + a^6 a*");
        for (SatMode mode : {SatMode::Monoid, SatMode::Lp, SatMode::Ld})
            REQUIRE(stamp_satisfies(syn.stamp, parse_inequality("x = x"), mode));
    }
    SECTION("letter-image quantification for 1 <= x^5") {
        // Only substitution is x -> eta(a) = 1, and identity <= 5 holds.
        SyntacticData syn = syn_of("a + a^6 a*");
        REQUIRE(stamp_satisfies(syn.stamp, parse_inequality("1 <= x^5"), SatMode::Lp));
        REQUIRE(stamp_satisfies(syn.stamp, parse_inequality("1 <= x^5"), SatMode::Monoid));
    }
    SECTION("an lp-satisfying stamp that is not ld-satisfying") {
        // Stamp a, b -> 1 onto the chain monoid of a^2 a*; the extra
        // length-decreasing substitutions (a variable mapped to the empty
        // word, i.e. the identity) break the inequality.
        SyntacticData chain = syn_of("a^2 a*");
        Stamp st = make_stamp(AB, chain.monoid, {chain.stamp.images[0], chain.stamp.images[0]});
        Inequality ineq = parse_inequality("x y^(w+1) <= x^w y");
        REQUIRE(stamp_satisfies(st, ineq, SatMode::Lp));
        REQUIRE_FALSE(stamp_satisfies(st, ineq, SatMode::Ld));
        REQUIRE_FALSE(stamp_satisfies(st, ineq, SatMode::Monoid));
        // The violating substitution erases x: y^(w+1) <= y fails.
        auto witness = stamp_find_violation(st, ineq, SatMode::Ld);
        REQUIRE(witness.has_value());
        REQUIRE(witness->at('x') == chain.monoid.identity);
    }
    SECTION("a brute-force search over small stamps finds such a witness") {
        bool found = false;
        for (const char* text : {"1 + a", "a a*", "a^2 a*", "a + a^3 a*"}) {
            SyntacticData syn = syn_of(text);
            Stamp st = make_stamp(AB, syn.monoid, {syn.stamp.images[0], syn.stamp.images[0]});
            Inequality ineq = parse_inequality("x y^(w+1) <= x^w y");
            if (stamp_satisfies(st, ineq, SatMode::Lp) && !stamp_satisfies(st, ineq, SatMode::Ld))
                found = true;
        }
        REQUIRE(found);
    }
    SECTION("mode monotonicity") {
        std::mt19937 rng(79);
        const char* ineqs[] = {"x <= 1", "1 <= x", "x^2 <= x^3", "x y = y x", "x^w = x^(w+1)",
                               "x y^(w+1) <= x^w y"};
        for (int i = 0; i < 20; ++i) {
            SyntacticData syn = transition_monoid(random_dfa(rng, AB, 4));
            Inequality ineq = parse_inequality(ineqs[rng() % 6]);
            bool monoid_sat = stamp_satisfies(syn.stamp, ineq, SatMode::Monoid);
            bool lp = stamp_satisfies(syn.stamp, ineq, SatMode::Lp);
            bool ld = stamp_satisfies(syn.stamp, ineq, SatMode::Ld);
            if (monoid_sat) {
                REQUIRE(lp);
                REQUIRE(ld);
            }
            if (ld)
                REQUIRE(lp); // ld quantifies over a superset of assignments
        }
    }
}

TEST_CASE("power inequality enumeration") {
    SECTION("a + a^6 a* with bound 7") {
        SyntacticData syn = syn_of("a + a^6 a*");
        std::vector<std::pair<int, int>> zero;
        for (auto [p, q] : enumerate_power_inequalities(syn.monoid, 7))
            if (p == 0)
                zero.emplace_back(p, q);
        REQUIRE(zero == std::vector<std::pair<int, int>>{{0, 0}, {0, 5}, {0, 6}, {0, 7}});
    }
    SECTION("the trivial monoid satisfies every pair") {
        REQUIRE(enumerate_power_inequalities(trivial_monoid(), 3).size() == 16);
    }
    SECTION("1 + a with bound 3") {
        SyntacticData syn = syn_of("1 + a");
        auto pairs = enumerate_power_inequalities(syn.monoid, 3);
        // all pairs except p in {0,1} with q > p
        std::vector<std::pair<int, int>> expect;
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                if (!(p <= 1 && q > p))
                    expect.emplace_back(p, q);
        REQUIRE(pairs == expect);
    }
}

TEST_CASE("omega power laws") {
    std::mt19937 rng(83);
    std::vector<OrderedMonoid> monoids = {syn_of("a + a^6 a*").monoid,
                                          syn_of("a + (a^3 + a^4)(a^7)*").monoid};
    for (int i = 0; i < 8; ++i)
        monoids.push_back(transition_monoid(random_dfa(rng, AB, 4)).monoid);
    for (const auto& m : monoids)
        for (int x = 0; x < m.n; ++x) {
            int w = m.omega(x);
            REQUIRE(m.mul(w, w) == w);
            for (long k = 0; k <= 2 * m.n; ++k) {
                REQUIRE(m.omega_power(x, k) == m.mul(w, m.pow(x, k)));
                REQUIRE(m.omega_power(x, k) == m.mul(m.pow(x, k), w));
            }
        }
}

TEST_CASE("divisibility law for a (a^n)*") {
    for (int n = 1; n <= 8; ++n) {
        SyntacticData syn = transition_monoid(
            compile("a (a^" + std::to_string(n) + ")*", A));
        for (int m = 0; m <= 8; ++m)
            REQUIRE(satisfies(syn.monoid, power_inequality(1, m + 1)) == (m % n == 0));
    }
}

TEST_CASE("aperiodicity is equivalent to the omega identity") {
    std::mt19937 rng(89);
    for (int i = 0; i < 15; ++i) {
        OrderedMonoid m = transition_monoid(random_dfa(rng, AB, 4)).monoid;
        REQUIRE(monoid_props(m).aperiodic == satisfies(m, parse_inequality("x^w = x^(w+1)")));
    }
}

TEST_CASE("variable cap") {
    REQUIRE_THROWS_AS(satisfies(trivial_monoid(), parse_inequality("w x y z = z y x w")), error);
}

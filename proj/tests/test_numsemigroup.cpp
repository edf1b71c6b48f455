#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "synmon/synmon.hpp"

using namespace synmon;

namespace {
const Alphabet A("a");
} // namespace

TEST_CASE("semigroup generated by {3, 5}") {
    NumericalSemigroup nsg = nsg_generate({3, 5});
    std::vector<std::int64_t> members;
    for (std::int64_t n = 0; n <= 12; ++n)
        if (nsg.member(n))
            members.push_back(n);
    REQUIRE(members == std::vector<std::int64_t>{0, 3, 5, 6, 8, 9, 10, 11, 12});
    REQUIRE(nsg.minimal_generators == std::vector<std::int64_t>{3, 5});
    REQUIRE(nsg.conductor.has_value());
    REQUIRE(*nsg.conductor == 8);
}

TEST_CASE("the empty set generates {0}") {
    NumericalSemigroup nsg = nsg_generate({});
    REQUIRE(nsg.member(0));
    for (std::int64_t n = 1; n <= 10; ++n)
        REQUIRE_FALSE(nsg.member(n));
    REQUIRE_FALSE(nsg.conductor.has_value());
    REQUIRE(nsg.minimal_generators.empty());
}

TEST_CASE("gcd 2 generators") {
    NumericalSemigroup nsg = nsg_generate({4, 6});
    for (std::int64_t n = 0; n <= 30; ++n) {
        bool expect = n == 0 || (n % 2 == 0 && n >= 4);
        REQUIRE(nsg.member(n) == expect);
    }
    REQUIRE(nsg.minimal_generators == std::vector<std::int64_t>{4, 6});
    REQUIRE_FALSE(nsg.conductor.has_value());
    REQUIRE(nsg.period == 2);
}

TEST_CASE("brute-force membership agreement") {
    // Independent oracle: iterate sums of generators up to the bound.
    std::vector<std::vector<std::int64_t>> cases = {{3, 5}, {4, 6}, {2, 7}, {5}, {1}, {6, 9, 20}};
    for (const auto& s : cases) {
        NumericalSemigroup nsg = nsg_generate(s);
        std::int64_t bound = 100;
        std::vector<bool> oracle(static_cast<std::size_t>(bound) + 1, false);
        oracle[0] = true;
        for (std::int64_t n = 1; n <= bound; ++n)
            for (std::int64_t g : s)
                if (n >= g && oracle[static_cast<std::size_t>(n - g)]) {
                    oracle[static_cast<std::size_t>(n)] = true;
                    break;
                }
        for (std::int64_t n = 0; n <= bound; ++n)
            REQUIRE(nsg.member(n) == oracle[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("minimal generators regenerate the semigroup") {
    for (int mask = 1; mask < 64; ++mask) {
        std::vector<std::int64_t> s;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1)
                s.push_back(i + 1);
        NumericalSemigroup nsg = nsg_generate(s);
        NumericalSemigroup regen = nsg_generate(nsg.minimal_generators);
        for (std::int64_t n = 0; n <= 40; ++n)
            REQUIRE(nsg.member(n) == regen.member(n));
    }
}

TEST_CASE("the language of a numerical semigroup") {
    REQUIRE(equivalent(build_ls({4}), compile("a (a^4)*", A)));
    REQUIRE(equivalent(build_ls({}), compile("a", A)));
    Dfa l35 = build_ls({3, 5});
    NumericalSemigroup nsg = nsg_generate({3, 5});
    for (int n = 0; n <= 30; ++n)
        REQUIRE(l35.accepts(std::string(static_cast<std::size_t>(n), 'a')) ==
                (n >= 1 && nsg.member(n - 1)));
}

TEST_CASE("inequality characterization") {
    SECTION("S = {3, 5} at m = 4") {
        auto rows = vs_characterization({3, 5}, 12);
        REQUIRE(rows[4] == std::pair<std::int64_t, bool>{4, false});
        REQUIRE(rows[3] == std::pair<std::int64_t, bool>{3, true});
        REQUIRE(rows[8] == std::pair<std::int64_t, bool>{8, true});
    }
    SECTION("S = {1} satisfies everything") {
        for (auto [m, holds] : vs_characterization({1}, 12))
            REQUIRE(holds);
    }
    SECTION("S = {n} holds exactly at multiples") {
        for (std::int64_t n = 1; n <= 6; ++n)
            for (auto [m, holds] : vs_characterization({n}, 12))
                REQUIRE(holds == (m % n == 0));
    }
}

TEST_CASE("satisfied exponents form an additive submonoid") {
    for (int mask = 1; mask < 64; ++mask) {
        std::vector<std::int64_t> s;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1)
                s.push_back(i + 1);
        auto rows = vs_characterization(s, 12);
        for (auto [m1, h1] : rows)
            for (auto [m2, h2] : rows) {
                if (!h1 || !h2 || m1 + m2 > 12)
                    continue;
                REQUIRE(rows[static_cast<std::size_t>(m1 + m2)].second);
            }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "synmon/synmon.hpp"

using namespace synmon;
using namespace testsupport;

namespace {
const Alphabet A("a");
const Alphabet AB("ab");
} // namespace

TEST_CASE("automaton JSON round trip") {
    Dfa d = compile("a + a^6 a*", A);
    nlohmann::json j = to_json(d);
    REQUIRE(j["states"] == 7);
    REQUIRE(j["initial"] == 0);
    REQUIRE(j["finals"] == nlohmann::json::array({1, 6}));
    REQUIRE(j["alphabet"] == nlohmann::json::array({"a"}));
    REQUIRE(j["delta"].size() == 7);
    REQUIRE(dfa_from_json(j) == d);

    std::mt19937 rng(109);
    for (int i = 0; i < 20; ++i) {
        Dfa r = random_dfa(rng, AB, 5);
        REQUIRE(dfa_from_json(to_json(r)) == r);
    }
}

TEST_CASE("automaton JSON validation") {
    nlohmann::json j = to_json(compile("a*", A));
    j["finals"] = nlohmann::json::array({7});
    REQUIRE_THROWS_AS(dfa_from_json(j), error);
    j = to_json(compile("a*", A));
    j["delta"][0][0] = 5;
    REQUIRE_THROWS_AS(dfa_from_json(j), error);
    j = to_json(compile("a*", A));
    j["alphabet"] = nlohmann::json::array({"ab"});
    REQUIRE_THROWS_AS(dfa_from_json(j), error);
}

TEST_CASE("monoid JSON round trip") {
    OrderedMonoid m = transition_monoid(compile("a + a^6 a*", A)).monoid;
    nlohmann::json j = to_json(m);
    REQUIRE(j["n"] == 7);
    REQUIRE(j["identity"] == 0);
    REQUIRE(j["mult"][1][1] == 2);
    REQUIRE(j["leq"][0][5] == true);
    REQUIRE(j["leq"][1][5] == false);
    REQUIRE(monoid_from_json(j) == m);
}

TEST_CASE("monoid JSON validation rejects broken tables") {
    OrderedMonoid m = u1_down();
    nlohmann::json j = to_json(m);
    j["mult"][0][0] = 1; // breaks the zero law and associativity checks
    REQUIRE_THROWS_AS(monoid_from_json(j), error);
    j = to_json(m);
    j["leq"][1][0] = true; // breaks antisymmetry
    REQUIRE_THROWS_AS(monoid_from_json(j), error);
    j = to_json(m);
    j["n"] = 3;
    REQUIRE_THROWS_AS(monoid_from_json(j), error);
}

TEST_CASE("DOT emission") {
    OrderedMonoid m = transition_monoid(compile("a + a^6 a*", A)).monoid;
    std::string hasse = hasse_dot(m);
    // exactly the six covering edges appear
    REQUIRE(hasse.find("n2 -> n3") != std::string::npos);
    REQUIRE(hasse.find("n0 -> n5") != std::string::npos);
    REQUIRE(hasse.find("n1 -> n6") != std::string::npos);
    REQUIRE(hasse.find("n1 -> n5") == std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = hasse.find(" -> "); at != std::string::npos;
         at = hasse.find(" -> ", at + 1))
        ++edges;
    REQUIRE(edges == 6);

    std::string dfa_dot = to_dot(compile("1 + a", A));
    REQUIRE(dfa_dot.find("doublecircle") != std::string::npos);
    REQUIRE(dfa_dot.find("init -> q0") != std::string::npos);
}

TEST_CASE("display round trips through the parser") {
    std::mt19937 rng(113);
    for (int i = 0; i < 25; ++i) {
        Dfa l = random_dfa(rng, AB, 4);
        REQUIRE(equivalent(compile(display_regex(l), AB), l));
    }
    for (int i = 0; i < 25; ++i) {
        Dfa l = random_unary(rng);
        REQUIRE(equivalent(compile(display_regex(l), A), l));
    }
    REQUIRE(display_regex(compile("a + a^6 a*", A)) == "a + a^6 a*");
}

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "synmon/regex.hpp"

using namespace synmon;

TEST_CASE("regex grammar covers the worked examples") {
    Alphabet a("a");

    Regex r = parse_regex("a + a^6 a*", a);
    REQUIRE(r.kind == Regex::Kind::Union);
    REQUIRE(r.children[0].kind == Regex::Kind::Symbol);
    REQUIRE(r.children[1].kind == Regex::Kind::Concat);
    REQUIRE(r.children[1].children[0].kind == Regex::Kind::Power);
    REQUIRE(r.children[1].children[0].exponent == 6);
    REQUIRE(r.children[1].children[1].kind == Regex::Kind::Star);

    REQUIRE(parse_regex("1", a).kind == Regex::Kind::Epsilon);
    REQUIRE(parse_regex("0", a).kind == Regex::Kind::Empty);

    Regex nested = parse_regex("a + (a^3 + a^4)(a^7)*", a);
    REQUIRE(nested.kind == Regex::Kind::Union);
    REQUIRE(nested.children[1].kind == Regex::Kind::Concat);
    REQUIRE(nested.children[1].children[0].kind == Regex::Kind::Union);
    REQUIRE(nested.children[1].children[1].kind == Regex::Kind::Star);
}

TEST_CASE("regex errors carry positions") {
    Alphabet ab("ab");
    REQUIRE_THROWS_AS(parse_regex("a + ", ab), parse_error);
    REQUIRE_THROWS_AS(parse_regex("(a + b", ab), parse_error);
    REQUIRE_THROWS_AS(parse_regex("a^", ab), parse_error);
    REQUIRE_THROWS_AS(parse_regex("a c", ab), parse_error);
    try {
        parse_regex("ab c", ab);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        REQUIRE(e.position == 3);
    }
}

TEST_CASE("reserved characters cannot be alphabet symbols") {
    REQUIRE_THROWS_AS(Alphabet("a+"), error);
    REQUIRE_THROWS_AS(Alphabet("01"), error);
    REQUIRE_THROWS_AS(Alphabet("aa"), error);
}

TEST_CASE("to_string parses back to the same regex language") {
    std::mt19937 rng(7);
    Alphabet ab("ab");
    for (int i = 0; i < 40; ++i) {
        Regex r = testsupport::random_regex(rng, ab, 3);
        Regex back = parse_regex(to_string(r), ab);
        for (const std::string& w : testsupport::all_words(ab, 5))
            REQUIRE(testsupport::regex_matches(r, w) == testsupport::regex_matches(back, w));
    }
}

TEST_CASE("power expansion agrees with the definitional matcher") {
    Alphabet a("a");
    Regex r = parse_regex("(a + a^2)^3", a);
    Regex expanded = expand_powers(r);
    for (const std::string& w : testsupport::all_words(a, 8))
        REQUIRE(testsupport::regex_matches(r, w) == testsupport::regex_matches(expanded, w));
    REQUIRE(testsupport::regex_matches(r, "aaa"));
    REQUIRE(testsupport::regex_matches(r, "aaaaaa"));
    REQUIRE_FALSE(testsupport::regex_matches(r, "aa"));
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "synmon/cli.hpp"
#include "synmon/json_io.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = synmon::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("syn emits the min(x+y,6) table as JSON") {
    CliResult r = run_cli({"syn", "--alphabet", "a", "--regex", "a + a^6 a*", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["n"] == 7);
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
            REQUIRE(j["mult"][static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                    std::min(x + y, 6));
    // the emitted monoid validates against the schema reader
    REQUIRE(synmon::monoid_from_json(j).n == 7);
}

TEST_CASE("check verdicts with witnesses") {
    CliResult r = run_cli({"check", "--alphabet", "a", "--regex", "a + a^6 a*", "--ineq",
                           "1 <= x^5", "--ineq", "x <= x^2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("1 <= x^5: true") != std::string::npos);
    REQUIRE(r.out.find("x <= x^2: false") != std::string::npos);
    REQUIRE(r.out.find("x = a") != std::string::npos);
}

TEST_CASE("check reads monoids from JSON files") {
    std::string path = "trivial_monoid_test.json";
    {
        std::ofstream f(path);
        f << synmon::to_json(synmon::trivial_monoid()).dump();
    }
    CliResult r = run_cli({"check", "--monoid", path, "--ineq", "x <= 1"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("x <= 1: true") != std::string::npos);
}

TEST_CASE("check modes that need a stamp reject file input") {
    std::string path = "u1_monoid_test.json";
    {
        std::ofstream f(path);
        f << synmon::to_json(synmon::u1_down()).dump();
    }
    CliResult r = run_cli({"check", "--monoid", path, "--ineq", "x = x", "--mode", "lp"});
    std::remove(path.c_str());
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("lp") != std::string::npos);
}

TEST_CASE("closure counting and expectations") {
    CliResult ok = run_cli({"closure", "--alphabet", "a", "--regex", "1 + a", "--expect-count", "4"});
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out.find("members: 4") != std::string::npos);

    CliResult listed = run_cli({"closure", "--alphabet", "a", "--regex", "1 + a", "--list"});
    REQUIRE(listed.code == 0);
    REQUIRE(listed.out.find("1 + a") != std::string::npos);
    REQUIRE(listed.out.find("a*") != std::string::npos);

    // The 19/20 discrepancy: the computed family has 19 members.
    CliResult mismatch = run_cli(
        {"closure", "--alphabet", "a", "--regex", "a + a^6 a*", "--expect-count", "20"});
    REQUIRE(mismatch.code == 1);
    REQUIRE(mismatch.err.find("19") != std::string::npos);
    CliResult match = run_cli(
        {"closure", "--alphabet", "a", "--regex", "a + a^6 a*", "--expect-count", "19"});
    REQUIRE(match.code == 0);
}

TEST_CASE("shuffle, rename and invhom subcommands") {
    CliResult sh = run_cli({"shuffle", "--alphabet1", "a", "--regex1", "(a^2)*", "--alphabet2",
                            "b", "--regex2", "b (b^2)*", "--json"});
    REQUIRE(sh.code == 0);
    nlohmann::json j = nlohmann::json::parse(sh.out);
    REQUIRE(j["alphabet"] == nlohmann::json::array({"a", "b"}));
    REQUIRE(j["states"] == 4);

    CliResult rn = run_cli({"rename", "--alphabet", "ab", "--regex", "(a b)*", "--map", "a:a,b:a"});
    REQUIRE(rn.code == 0);
    REQUIRE(rn.out.find("(a^2)*") != std::string::npos);

    CliResult ih = run_cli({"invhom", "--alphabet", "ab", "--regex", "(a b)*", "--map", "c:ab"});
    REQUIRE(ih.code == 0);
    REQUIRE(ih.out.find("c*") != std::string::npos);
}

TEST_CASE("decompose subcommand") {
    CliResult r = run_cli({"decompose", "--alphabet", "ab", "--regex", "(a b + b a)*"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("terms:") != std::string::npos);
}

TEST_CASE("numsg subcommand") {
    CliResult r = run_cli({"numsg", "--gens", "3,5", "--check-ineq", "6"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("minimal generators: 3 5") != std::string::npos);
    REQUIRE(r.out.find("conductor: 8") != std::string::npos);
    REQUIRE(r.out.find("m=4: x <= x^5 is not satisfied") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run_cli({"bogus"}).code == 2);
    REQUIRE(run_cli({}).code == 2);
    REQUIRE(run_cli({"closure", "--alphabet", "a"}).code == 2);
}

TEST_CASE("computation errors exit with code 1") {
    CliResult r = run_cli({"syn", "--alphabet", "a", "--regex", "a + b"});
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("error") != std::string::npos);
    REQUIRE(run_cli({"decompose", "--alphabet", "ab", "--regex", "a b"}).code == 1);
}

TEST_CASE("deterministic output") {
    CliResult a = run_cli({"syn", "--alphabet", "a", "--regex", "a + a^6 a*", "--json"});
    CliResult b = run_cli({"syn", "--alphabet", "a", "--regex", "a + a^6 a*", "--json"});
    REQUIRE(a.out == b.out);
    CliResult da = run_cli({"order", "--alphabet", "a", "--regex", "a + a^6 a*", "--dot"});
    CliResult db = run_cli({"order", "--alphabet", "a", "--regex", "a + a^6 a*", "--dot"});
    REQUIRE(da.out == db.out);
    REQUIRE(da.out.find("->") != std::string::npos);
}

TEST_CASE("downset subcommand") {
    CliResult u1 = run_cli({"downset", "--u1"});
    REQUIRE(u1.code == 0);
    REQUIRE(u1.out.find("elements: 2") != std::string::npos);

    CliResult dm = run_cli({"downset", "--alphabet", "a", "--regex", "1 + a", "--empty", "--json"});
    REQUIRE(dm.code == 0);
    nlohmann::json j = nlohmann::json::parse(dm.out);
    REQUIRE(j["n"] == 4); // downsets of the 3-chain plus the empty set

    CliResult qc = run_cli({"downset", "--alphabet", "a", "--regex", "1 + a", "--quotient-check"});
    REQUIRE(qc.code == 0);
    REQUIRE(qc.out.find("passed") != std::string::npos);
}

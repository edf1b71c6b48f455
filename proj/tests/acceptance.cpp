// Acceptance suite: runs each acceptance criterion and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "synmon/reproduce.hpp"
#include "synmon/synmon.hpp"

using namespace synmon;
using namespace testsupport;

namespace {

struct CriterionResult {
    std::string title;
    std::vector<std::string> failures;
};

const Alphabet A("a");
const Alphabet AB("ab");

void expect(CriterionResult& c, bool ok, const std::string& what) {
    if (!ok)
        c.failures.push_back(what);
}

// ---- criterion 10: property suites ----

void property_shuffle_via_renaming(CriterionResult& c) {
    std::mt19937 rng(211);
    Alphabet B("abAB");
    Morphism pi0 = make_morphism(B, AB, {"a", "b", "", ""});
    Morphism pi1 = make_morphism(B, AB, {"", "", "a", "b"});
    Morphism pi = make_morphism(B, AB, {"a", "b", "a", "b"});
    for (int i = 0; i < 20; ++i) {
        Dfa l0 = random_dfa(rng, AB, 4);
        Dfa l1 = random_dfa(rng, AB, 4);
        Dfa lhs = shuffle(l0, l1);
        Dfa rhs = rename_image(
            intersection_of(inverse_morphism(l0, pi0), inverse_morphism(l1, pi1)), pi);
        expect(c, equivalent(lhs, rhs), "shuffle-via-renaming instance " + std::to_string(i));
    }
}

void property_componentwise_intersection(CriterionResult& c) {
    std::mt19937 rng(223);
    for (int i = 0; i < 20; ++i) {
        Dfa l1 = random_unary(rng, 'a'), m1 = random_unary(rng, 'a');
        Dfa l2 = random_unary(rng, 'b'), m2 = random_unary(rng, 'b');
        bool ok = equivalent(intersection_of(shuffle(l1, l2), shuffle(m1, m2)),
                             shuffle(intersection_of(l1, m1), intersection_of(l2, m2)));
        expect(c, ok, "componentwise intersection instance " + std::to_string(i));
    }
}

void property_ld_inverse_distributes(CriterionResult& c) {
    std::mt19937 rng(227);
    Alphabet cd("cd");
    const char* ld_images[] = {"", "c", "d"};
    Dfa eps_cd = compile("1", cd);
    for (int i = 0; i < 20; ++i) {
        Dfa l1 = shuffle(eps_cd, random_unary(rng, 'c'));
        Dfa l2 = shuffle(eps_cd, random_unary(rng, 'd'));
        Morphism alpha = make_morphism(AB, cd, {ld_images[rng() % 3], ld_images[rng() % 3]});
        bool ok = equivalent(inverse_morphism(shuffle(l1, l2), alpha),
                             shuffle(inverse_morphism(l1, alpha), inverse_morphism(l2, alpha)));
        expect(c, ok, "length-decreasing inverse instance " + std::to_string(i));
    }
}

void property_spreading_preimage(CriterionResult& c) {
    std::mt19937 rng(229);
    for (int i = 0; i < 20; ++i) {
        int k = 2 + static_cast<int>(rng() % 2);
        std::string letters = k == 2 ? "cd" : "cde";
        Alphabet C(letters);
        std::vector<Dfa> parts;
        for (int j = 0; j < k; ++j)
            parts.push_back(random_unary(rng, letters[static_cast<std::size_t>(j)]));
        Dfa sh = parts[0];
        for (int j = 1; j < k; ++j)
            sh = shuffle(sh, parts[static_cast<std::size_t>(j)]);
        Morphism beta = make_morphism(A, C, {letters});
        Dfa lhs = inverse_morphism(sh, beta);
        Dfa rhs = compile("a*", A);
        for (int j = 0; j < k; ++j) {
            std::string cj(1, letters[static_cast<std::size_t>(j)]);
            Morphism beta_j = make_morphism(A, Alphabet(cj), {cj});
            rhs = intersection_of(rhs, inverse_morphism(parts[static_cast<std::size_t>(j)], beta_j));
        }
        expect(c, equivalent(lhs, rhs), "spreading preimage instance " + std::to_string(i));
    }
}

void property_decomposition_roundtrip(CriterionResult& c) {
    std::mt19937 rng(233);
    int done = 0;
    for (int i = 0; done < 10 && i < 200; ++i) {
        Dfa l = shuffle(random_unary(rng, 'a'), random_unary(rng, 'b'));
        SyntacticData syn = transition_monoid(l);
        if (!monoid_props(syn.monoid).commutative || syn.monoid.n > 20)
            continue;
        Decomposition dec = decompose_commutative(l);
        expect(c, equivalent(dec.union_language(l.alphabet), l),
               "decomposition round-trip instance " + std::to_string(done));
        ++done;
    }
    expect(c, done == 10, "found ten commutative decomposition instances");
}

void property_membership_oracles(CriterionResult& c) {
    std::mt19937 rng(239);
    auto words = all_words(AB, 6);
    int instances = 0;
    for (int i = 0; i < 50; ++i) {
        // compile against the definitional matcher
        Regex r = random_regex(rng, AB, 3);
        Dfa compiled = compile(r, AB);
        Dfa x = random_dfa(rng, AB, 4);
        Dfa y = random_dfa(rng, AB, 4);
        Dfa u = union_of(x, y), n = intersection_of(x, y), df = difference_of(x, y),
            cp = complement_of(x);
        std::string quot = words[rng() % 7]; // a word of length <= 2
        Dfa lq = left_quotient(quot, x), rq = right_quotient(quot, x);
        Dfa sh = shuffle(x, y);
        Morphism phi = make_morphism(AB, AB, {rng() % 2 ? "a" : "b", rng() % 2 ? "a" : "b"});
        Dfa ri = rename_image(x, phi);
        const char* images[] = {"", "a", "b", "ab", "ba"};
        Morphism psi = make_morphism(AB, AB, {images[rng() % 5], images[rng() % 5]});
        Dfa iv = inverse_morphism(x, psi);
        bool equal = equivalent(x, y);

        for (const std::string& w : words) {
            bool ok = compiled.accepts(w) == regex_matches(r, w) &&
                      u.accepts(w) == (x.accepts(w) || y.accepts(w)) &&
                      n.accepts(w) == (x.accepts(w) && y.accepts(w)) &&
                      df.accepts(w) == (x.accepts(w) && !y.accepts(w)) &&
                      cp.accepts(w) == !x.accepts(w) &&
                      lq.accepts(w) == x.accepts(quot + w) &&
                      rq.accepts(w) == x.accepts(w + quot) &&
                      sh.accepts(w) == shuffle_member(x, y, w) &&
                      ri.accepts(w) == rename_member(x, phi, w) &&
                      iv.accepts(w) == x.accepts(psi.apply(w)) &&
                      (!equal || x.accepts(w) == y.accepts(w));
            if (!ok) {
                expect(c, false, "membership oracle instance " + std::to_string(i) + " word '" + w + "'");
                break;
            }
            if (x.accepts(w) != y.accepts(w) && equal) {
                expect(c, false, "equivalence contradicted at word '" + w + "'");
                break;
            }
        }
        ++instances;
    }
    expect(c, instances == 50, "ran fifty membership oracle instances");
}

} // namespace

int main() {
    std::map<int, CriterionResult> results;
    results[1].title = "syntactic monoid and order of 1 + a";
    results[2].title = "syntactic monoid and order of a + a^6 a*";
    results[3].title = "minimal automaton, monoid and order of a + (a^3 + a^4)(a^7)*";
    results[4].title = "four-language closure of 1 + a and its inequalities";
    results[5].title = "twenty-language closure of a + a^6 a* and its inequality basis";
    results[6].title = "closed forms of the a^n(F + a^5 a*) family algebra";
    results[7].title = "quotient lattice of a + (a^3 + a^4)(a^7)* and its power monoid";
    results[8].title = "downset monoid laws";
    results[9].title = "numerical semigroup characterizations";
    results[10].title = "property suites (renaming, componentwise laws, decomposition, oracles)";

    for (const auto& check : reproduce::make_checks()) {
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok)
            results[check.criterion].failures.push_back(
                check.name + (detail.empty() ? "" : " [" + detail + "]"));
    }

    property_shuffle_via_renaming(results[10]);
    property_componentwise_intersection(results[10]);
    property_ld_inverse_distributes(results[10]);
    property_spreading_preimage(results[10]);
    property_decomposition_roundtrip(results[10]);
    property_membership_oracles(results[10]);

    int failed = 0;
    for (const auto& [num, result] : results) {
        bool ok = result.failures.empty();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << num << ": " << result.title
                  << "\n";
        for (const std::string& f : result.failures)
            std::cout << "       - " << f << "\n";
        failed += ok ? 0 : 1;
    }
    std::cout << (10 - failed) << " of 10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}

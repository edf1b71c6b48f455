#pragma once

#include <set>
#include <utility>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/epset.hpp"
#include "synmon/errors.hpp"
#include "synmon/lang_ops.hpp"
#include "synmon/ordered_monoid.hpp"
#include "synmon/syntactic.hpp"

namespace synmon {

/// One shuffle of unary languages, one component per alphabet letter in
/// alphabet order.
struct ShuffleTerm {
    std::vector<std::pair<char, EPSet>> components;
};

struct Decomposition {
    std::vector<ShuffleTerm> terms;

    Dfa term_language(std::size_t i) const {
        const auto& parts = terms[i].components;
        if (parts.empty())
            return universal_language(Alphabet("")); // the term 1 over the empty alphabet
        Dfa acc = from_epset(parts[0].second, parts[0].first);
        for (std::size_t j = 1; j < parts.size(); ++j)
            acc = shuffle(acc, from_epset(parts[j].second, parts[j].first));
        return acc;
    }

    Dfa union_language(const Alphabet& alphabet) const {
        Dfa acc = empty_language(alphabet);
        for (std::size_t i = 0; i < terms.size(); ++i)
            acc = union_of(acc, term_language(i));
        return acc;
    }
};

namespace detail {

/// Powers of a single element with their exponent structure: powers[i] is
/// g^i, the sequence enters a cycle of length `cycle` at exponent `tail`.
struct MonogenicPowers {
    std::vector<int> powers;
    std::int64_t tail = 0;
    std::int64_t cycle = 1;

    /// Exponent set { n : g^n = m } as an eventually periodic set.
    EPSet exponents_of(int m) const {
        EPSet e;
        e.threshold = tail;
        e.period = cycle;
        for (std::int64_t n = 0; n < tail; ++n)
            if (powers[static_cast<std::size_t>(n)] == m)
                e.exceptions.insert(n);
        for (std::int64_t i = 0; i < cycle; ++i)
            if (powers[static_cast<std::size_t>(tail + i)] == m)
                e.residues.insert((tail + i) % cycle);
        return canonical_epset(e);
    }
};

inline MonogenicPowers monogenic_powers(const OrderedMonoid& m, int g) {
    MonogenicPowers out;
    std::vector<int> first_seen(static_cast<std::size_t>(m.n), -1);
    int x = m.identity;
    std::int64_t i = 0;
    while (first_seen[static_cast<std::size_t>(x)] < 0) {
        first_seen[static_cast<std::size_t>(x)] = static_cast<int>(i);
        out.powers.push_back(x);
        x = m.mul(x, g);
        ++i;
    }
    out.tail = first_seen[static_cast<std::size_t>(x)];
    out.cycle = i - out.tail;
    return out;
}

} // namespace detail

/// Writes a commutative language as a union of shuffles of unary languages.
/// Through the syntactic stamp, a word is in L iff the per-letter images
/// (eta(a)^{count of a}) multiply into the syntactic image, so one shuffle
/// term is emitted per tuple of per-letter submonoid elements whose product
/// lies in the image. The recombined union is verified against the input.
inline Decomposition decompose_commutative(const Dfa& language, std::size_t term_cap = 10000) {
    SyntacticData syn = transition_monoid(language);
    const OrderedMonoid& m = syn.monoid;
    if (!monoid_props(m).commutative)
        throw error("decomposition requires a commutative syntactic monoid");
    const Alphabet& alphabet = syn.stamp.alphabet;
    const int k = alphabet.size();

    std::vector<detail::MonogenicPowers> letter_powers;
    std::vector<std::vector<int>> letter_elems; // distinct powers per letter
    for (int c = 0; c < k; ++c) {
        letter_powers.push_back(detail::monogenic_powers(m, syn.stamp.images[static_cast<std::size_t>(c)]));
        std::set<int> distinct(letter_powers.back().powers.begin(), letter_powers.back().powers.end());
        letter_elems.emplace_back(distinct.begin(), distinct.end());
    }

    // suffix_products[c]: every product of one element from each of the
    // letters c..k-1, used to prune tuples that cannot reach the image.
    std::vector<std::set<int>> suffix_products(static_cast<std::size_t>(k) + 1);
    suffix_products[static_cast<std::size_t>(k)].insert(m.identity);
    for (int c = k - 1; c >= 0; --c)
        for (int e : letter_elems[static_cast<std::size_t>(c)])
            for (int s : suffix_products[static_cast<std::size_t>(c) + 1])
                suffix_products[static_cast<std::size_t>(c)].insert(m.mul(e, s));

    std::vector<char> in_image(static_cast<std::size_t>(m.n), 0);
    for (int p : syn.image)
        in_image[static_cast<std::size_t>(p)] = 1;

    Decomposition out;
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    auto reachable = [&](int prefix, int c) {
        for (int s : suffix_products[static_cast<std::size_t>(c)])
            if (in_image[static_cast<std::size_t>(m.mul(prefix, s))])
                return true;
        return false;
    };
    auto emit = [&](const std::vector<int>& chosen) {
        if (out.terms.size() >= term_cap)
            throw cap_error("decomposition exceeded the term cap");
        ShuffleTerm term;
        for (int c = 0; c < k; ++c)
            term.components.emplace_back(
                alphabet.symbol(c),
                letter_powers[static_cast<std::size_t>(c)].exponents_of(chosen[static_cast<std::size_t>(c)]));
        out.terms.push_back(std::move(term));
    };
    auto search = [&](auto&& self, int c, int prefix) -> void {
        if (c == k) {
            if (in_image[static_cast<std::size_t>(prefix)])
                emit(tuple);
            return;
        }
        for (int e : letter_elems[static_cast<std::size_t>(c)]) {
            int next = m.mul(prefix, e);
            if (!reachable(next, c + 1))
                continue;
            tuple[static_cast<std::size_t>(c)] = e;
            self(self, c + 1, next);
        }
    };
    search(search, 0, m.identity);

    Dfa recombined = out.terms.empty() ? empty_language(alphabet) : out.union_language(alphabet);
    if (!equivalent(recombined, language))
        throw error("decomposition failed to recombine to the input language");
    return out;
}

} // namespace synmon

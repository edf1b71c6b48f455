#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/morphism.hpp"
#include "synmon/nfa.hpp"
#include "synmon/regex.hpp"

namespace synmon {

/// Canonical minimal automaton of a regex (Glushkov + subset construction +
/// Hopcroft).
inline Dfa compile(const Regex& r, const Alphabet& alphabet, int state_cap = 0) {
    return canonicalize(determinize(glushkov(r, alphabet, state_cap), state_cap));
}

inline Dfa compile(std::string_view text, const Alphabet& alphabet, int state_cap = 0) {
    return compile(parse_regex(text, alphabet), alphabet, state_cap);
}

namespace detail {

template <typename AcceptCombine>
Dfa product_automaton(const Dfa& a, const Dfa& b, AcceptCombine accept) {
    if (a.alphabet != b.alphabet)
        throw error("boolean operations require equal alphabets");
    const int k = a.alphabet.size();
    const int nb = b.state_count();
    auto encode = [nb](int p, int q) { return p * nb + q; };

    Dfa out;
    out.alphabet = a.alphabet;
    out.initial = encode(a.initial, b.initial);
    out.delta.assign(static_cast<std::size_t>(a.state_count()) * static_cast<std::size_t>(nb),
                     std::vector<int>(static_cast<std::size_t>(k)));
    out.accepting.assign(out.delta.size(), false);
    for (int p = 0; p < a.state_count(); ++p) {
        for (int q = 0; q < nb; ++q) {
            int s = encode(p, q);
            for (int c = 0; c < k; ++c)
                out.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] =
                    encode(a.delta[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)],
                           b.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)]);
            out.accepting[static_cast<std::size_t>(s)] =
                accept(a.accepting[static_cast<std::size_t>(p)], b.accepting[static_cast<std::size_t>(q)]);
        }
    }
    return canonicalize(out);
}

} // namespace detail

inline Dfa union_of(const Dfa& a, const Dfa& b) {
    return detail::product_automaton(a, b, [](bool x, bool y) { return x || y; });
}

inline Dfa intersection_of(const Dfa& a, const Dfa& b) {
    return detail::product_automaton(a, b, [](bool x, bool y) { return x && y; });
}

inline Dfa difference_of(const Dfa& a, const Dfa& b) {
    return detail::product_automaton(a, b, [](bool x, bool y) { return x && !y; });
}

inline Dfa complement_of(const Dfa& a) {
    Dfa out = a;
    for (std::size_t q = 0; q < out.accepting.size(); ++q)
        out.accepting[q] = !out.accepting[q];
    return canonicalize(out);
}

/// Left quotient u^{-1}L = { w : uw in L }; right quotient Lu^{-1} = { w : wu in L }.
inline Dfa left_quotient(std::string_view u, const Dfa& l) {
    Dfa out = l;
    out.initial = l.run(l.initial, u);
    return canonicalize(out);
}

inline Dfa right_quotient(std::string_view u, const Dfa& l) {
    Dfa out = l;
    for (int q = 0; q < l.state_count(); ++q)
        out.accepting[static_cast<std::size_t>(q)] =
            l.accepting[static_cast<std::size_t>(l.run(q, u))];
    return canonicalize(out);
}

/// Shuffle product: all interleavings of a word of `a` with a word of `b`.
/// The result lives over the union of the two alphabets; a pair state moves
/// in either component, which makes the product nondeterministic.
inline Dfa shuffle(const Dfa& a, const Dfa& b, int state_cap = 0) {
    Alphabet merged = Alphabet::merged(a.alphabet, b.alphabet);
    const int nb = b.state_count();
    auto encode = [nb](int p, int q) { return p * nb + q; };

    Nfa nfa;
    nfa.alphabet = merged;
    nfa.resize(a.state_count() * nb);
    nfa.initial = {encode(a.initial, b.initial)};
    for (int p = 0; p < a.state_count(); ++p) {
        for (int q = 0; q < nb; ++q) {
            int s = encode(p, q);
            for (int c = 0; c < merged.size(); ++c) {
                char symbol = merged.symbol(c);
                int ca = a.alphabet.index_of(symbol);
                if (ca >= 0)
                    nfa.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)].push_back(
                        encode(a.delta[static_cast<std::size_t>(p)][static_cast<std::size_t>(ca)], q));
                int cb = b.alphabet.index_of(symbol);
                if (cb >= 0)
                    nfa.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)].push_back(
                        encode(p, b.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(cb)]));
            }
            if (a.accepting[static_cast<std::size_t>(p)] && b.accepting[static_cast<std::size_t>(q)])
                nfa.finals.push_back(s);
        }
    }
    return canonicalize(determinize(nfa, state_cap));
}

/// Image of L under a length-preserving morphism: relabel each transition,
/// then determinize and minimize over the target alphabet.
inline Dfa rename_image(const Dfa& l, const Morphism& phi, int state_cap = 0) {
    if (!phi.length_preserving())
        throw error("rename_image requires a length-preserving morphism");
    if (phi.source != l.alphabet)
        throw error("morphism source alphabet does not match the language alphabet");

    Nfa nfa;
    nfa.alphabet = phi.target;
    nfa.resize(l.state_count());
    nfa.initial = {l.initial};
    for (int q = 0; q < l.state_count(); ++q) {
        for (int c = 0; c < l.alphabet.size(); ++c)
            nfa.add_transition(q, phi.images[static_cast<std::size_t>(c)][0],
                               l.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)]);
        if (l.accepting[static_cast<std::size_t>(q)])
            nfa.finals.push_back(q);
    }
    return canonicalize(determinize(nfa, state_cap));
}

/// Preimage of L under an arbitrary morphism phi: A* -> B*. The automaton
/// keeps the states of L and reads phi(a) in one step: delta'(q, a) is the
/// state reached from q along the word phi(a).
inline Dfa inverse_morphism(const Dfa& l, const Morphism& phi) {
    if (phi.target != l.alphabet)
        throw error("morphism target alphabet does not match the language alphabet");

    Dfa out;
    out.alphabet = phi.source;
    out.initial = l.initial;
    out.accepting = l.accepting;
    out.delta.assign(static_cast<std::size_t>(l.state_count()),
                     std::vector<int>(static_cast<std::size_t>(phi.source.size())));
    for (int q = 0; q < l.state_count(); ++q)
        for (int c = 0; c < phi.source.size(); ++c)
            out.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] =
                l.run(q, phi.images[static_cast<std::size_t>(c)]);
    return canonicalize(out);
}

/// Language equality through canonical-form identity.
inline bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw error("equivalence requires equal alphabets");
    return canonicalize(a) == canonicalize(b);
}

} // namespace synmon

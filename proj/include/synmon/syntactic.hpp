#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/ordered_monoid.hpp"
#include "synmon/stamp.hpp"

namespace synmon {

/// Syntactic monoid of a language together with its syntactic stamp and the
/// syntactic image P (the set of elements whose preimage lies in L).
struct SyntacticData {
    OrderedMonoid monoid; // carries the syntactic order
    Stamp stamp;          // letter -> element of `monoid`
    std::vector<int> image; // P, sorted

    bool in_image(int x) const {
        for (int p : image)
            if (p == x)
                return true;
        return false;
    }
};

namespace detail {

/// leq[u][v] iff for all x, y: x u y in P implies x v y in P. Row bitsets
/// over y make the pair test a subset check: for every x, the y-row of xu
/// must be contained in the y-row of xv.
inline std::vector<char> syntactic_leq(const OrderedMonoid& m, const std::vector<char>& in_p) {
    const int n = m.n;
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> prow(static_cast<std::size_t>(n) * words, 0);
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
            if (in_p[static_cast<std::size_t>(m.mul(z, y))])
                prow[static_cast<std::size_t>(z) * words + static_cast<std::size_t>(y) / 64] |=
                    std::uint64_t{1} << (y % 64);

    std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                const std::uint64_t* ru = &prow[static_cast<std::size_t>(m.mul(x, u)) * words];
                const std::uint64_t* rv = &prow[static_cast<std::size_t>(m.mul(x, v)) * words];
                for (std::size_t w = 0; w < words; ++w)
                    if (ru[w] & ~rv[w]) {
                        ok = false;
                        break;
                    }
            }
            if (ok)
                leq[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(v)] = 1;
        }
    return leq;
}

} // namespace detail

/// Transition monoid of the minimal automaton of L: elements are the state
/// transformations of words, discovered breadth-first so that element indices
/// follow the shortlex order of shortest representatives (identity first).
/// The returned monoid already carries the syntactic order.
inline SyntacticData transition_monoid(const Dfa& language, int size_cap = 5000) {
    Dfa d = canonicalize(language);
    const int ns = d.state_count();
    const int k = d.alphabet.size();

    std::vector<std::vector<int>> letter(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(ns)));
    for (int c = 0; c < k; ++c)
        for (int q = 0; q < ns; ++q)
            letter[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] =
                d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];

    std::map<std::vector<int>, int> id_of;
    std::vector<std::vector<int>> elems;
    std::vector<std::string> reps;
    auto intern = [&](std::vector<int> f, const std::string& rep) {
        auto it = id_of.find(f);
        if (it != id_of.end())
            return it->second;
        int id = static_cast<int>(elems.size());
        if (id >= size_cap)
            throw cap_error("transition monoid exceeded the size cap of " + std::to_string(size_cap));
        id_of.emplace(f, id);
        elems.push_back(std::move(f));
        reps.push_back(rep);
        return id;
    };

    std::vector<int> ident(static_cast<std::size_t>(ns));
    for (int q = 0; q < ns; ++q)
        ident[static_cast<std::size_t>(q)] = q;
    intern(std::move(ident), "");

    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<int> cur = elems[i]; // copy: elems may reallocate
        std::string rep = reps[i];
        for (int c = 0; c < k; ++c) {
            std::vector<int> next(static_cast<std::size_t>(ns));
            for (int q = 0; q < ns; ++q)
                next[static_cast<std::size_t>(q)] = letter[static_cast<std::size_t>(c)]
                    [static_cast<std::size_t>(cur[static_cast<std::size_t>(q)])];
            intern(std::move(next), rep + d.alphabet.symbol(c));
        }
    }

    const int n = static_cast<int>(elems.size());
    OrderedMonoid m;
    m.n = n;
    m.identity = 0;
    m.names.reserve(elems.size());
    for (const auto& r : reps)
        m.names.push_back(compact_word(r));
    m.mult.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            // The transformation of a word uv applies u's map first.
            std::vector<int> comp(static_cast<std::size_t>(ns));
            for (int q = 0; q < ns; ++q)
                comp[static_cast<std::size_t>(q)] = elems[static_cast<std::size_t>(v)]
                    [static_cast<std::size_t>(elems[static_cast<std::size_t>(u)][static_cast<std::size_t>(q)])];
            m.mult[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v)] = id_of.at(comp);
        }

    std::vector<char> in_p(static_cast<std::size_t>(n), 0);
    std::vector<int> image;
    for (int x = 0; x < n; ++x)
        if (d.accepting[static_cast<std::size_t>(
                elems[static_cast<std::size_t>(x)][static_cast<std::size_t>(d.initial)])]) {
            in_p[static_cast<std::size_t>(x)] = 1;
            image.push_back(x);
        }

    m.leq = detail::syntactic_leq(m, in_p);

    std::vector<int> stamp_images;
    for (int c = 0; c < k; ++c)
        stamp_images.push_back(id_of.at(letter[static_cast<std::size_t>(c)]));
    Stamp stamp{d.alphabet, m, std::move(stamp_images), true};
    return SyntacticData{std::move(m), std::move(stamp), std::move(image)};
}

/// Recomputes the syntactic order of S from its multiplication table and
/// image; the result equals S.monoid for data produced by transition_monoid.
inline OrderedMonoid syntactic_order(const SyntacticData& s) {
    OrderedMonoid m = s.monoid;
    std::vector<char> in_p(static_cast<std::size_t>(m.n), 0);
    for (int p : s.image)
        in_p[static_cast<std::size_t>(p)] = 1;
    m.leq = detail::syntactic_leq(m, in_p);
    return m;
}

} // namespace synmon

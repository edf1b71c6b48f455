#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synmon/alphabet.hpp"
#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/ordered_monoid.hpp"

namespace synmon {

/// Morphism from a free monoid onto a finite ordered monoid, given by the
/// image of each letter. `surjective` is computed at construction: the letter
/// images must generate the whole target.
struct Stamp {
    Alphabet alphabet;
    OrderedMonoid target;
    std::vector<int> images; // indexed like alphabet symbols
    bool surjective = false;

    int eval(std::string_view word) const {
        int m = target.identity;
        for (char a : word) {
            int c = alphabet.index_of(a);
            if (c < 0)
                throw error(std::string("letter '") + a + "' is not in the stamp's alphabet");
            m = target.mul(m, images[static_cast<std::size_t>(c)]);
        }
        return m;
    }
};

/// Compact display form of a word: runs of one letter become powers, so
/// "aaaaa" prints as "a^5" and "" as "1".
inline std::string compact_word(const std::string& word) {
    if (word.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i])
            ++j;
        if (!out.empty())
            out += ' ';
        out += word[i];
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline bool images_generate(const OrderedMonoid& m, const std::vector<int>& images) {
    std::vector<char> seen(static_cast<std::size_t>(m.n), 0);
    std::vector<int> stack = {m.identity};
    seen[static_cast<std::size_t>(m.identity)] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int g : images) {
            int y = m.mul(x, g);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == m.n;
}

inline Stamp make_stamp(Alphabet alphabet, OrderedMonoid target, std::vector<int> images) {
    if (static_cast<int>(images.size()) != alphabet.size())
        throw error("stamp needs exactly one image per letter");
    for (int g : images)
        if (g < 0 || g >= target.n)
            throw error("stamp image out of range");
    bool surj = images_generate(target, images);
    return Stamp{std::move(alphabet), std::move(target), std::move(images), surj};
}

/// Restricted direct product of two stamps over the same alphabet: the target
/// is the submonoid of M1 x M2 generated by the paired letter images, under
/// the product order. Elements are numbered by shortlex of a shortest
/// generating word, so the pair of identities is element 0.
inline Stamp restricted_product(const Stamp& s1, const Stamp& s2, int size_cap = 5000) {
    if (s1.alphabet != s2.alphabet)
        throw error("restricted product requires stamps over the same alphabet");
    const OrderedMonoid& m1 = s1.target;
    const OrderedMonoid& m2 = s2.target;
    const int k = s1.alphabet.size();

    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>> elems;
    std::vector<std::string> reps;
    auto intern = [&](std::pair<int, int> p, const std::string& rep) {
        auto it = id_of.find(p);
        if (it != id_of.end())
            return it->second;
        int id = static_cast<int>(elems.size());
        if (id >= size_cap)
            throw cap_error("restricted product exceeded the monoid size cap");
        id_of.emplace(p, id);
        elems.push_back(p);
        reps.push_back(rep);
        return id;
    };

    intern({m1.identity, m2.identity}, "");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        auto [x1, x2] = elems[i];
        std::string rep = reps[i];
        for (int c = 0; c < k; ++c)
            intern({m1.mul(x1, s1.images[static_cast<std::size_t>(c)]),
                    m2.mul(x2, s2.images[static_cast<std::size_t>(c)])},
                   rep + s1.alphabet.symbol(c));
    }

    OrderedMonoid prod;
    prod.n = static_cast<int>(elems.size());
    prod.identity = 0;
    prod.mult.resize(static_cast<std::size_t>(prod.n) * static_cast<std::size_t>(prod.n));
    prod.leq.resize(prod.mult.size());
    for (int x = 0; x < prod.n; ++x)
        for (int y = 0; y < prod.n; ++y) {
            auto [x1, x2] = elems[static_cast<std::size_t>(x)];
            auto [y1, y2] = elems[static_cast<std::size_t>(y)];
            prod.mult[static_cast<std::size_t>(x) * static_cast<std::size_t>(prod.n) +
                      static_cast<std::size_t>(y)] =
                id_of.at({m1.mul(x1, y1), m2.mul(x2, y2)});
            prod.leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(prod.n) +
                     static_cast<std::size_t>(y)] =
                (m1.le(x1, y1) && m2.le(x2, y2)) ? 1 : 0;
        }
    prod.names.reserve(elems.size());
    for (const auto& r : reps)
        prod.names.push_back(compact_word(r));

    std::vector<int> images;
    for (int c = 0; c < k; ++c)
        images.push_back(id_of.at({s1.images[static_cast<std::size_t>(c)],
                                   s2.images[static_cast<std::size_t>(c)]}));
    return Stamp{s1.alphabet, std::move(prod), std::move(images), true};
}

/// Language phi^{-1}(P) as a canonical automaton: states are target elements,
/// reading a letter multiplies by its image.
inline Dfa recognized_language(const Stamp& s, const std::vector<int>& accepted) {
    Dfa d;
    d.alphabet = s.alphabet;
    d.initial = s.target.identity;
    d.delta.assign(static_cast<std::size_t>(s.target.n),
                   std::vector<int>(static_cast<std::size_t>(s.alphabet.size())));
    d.accepting.assign(static_cast<std::size_t>(s.target.n), false);
    for (int x = 0; x < s.target.n; ++x)
        for (int c = 0; c < s.alphabet.size(); ++c)
            d.delta[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] =
                s.target.mul(x, s.images[static_cast<std::size_t>(c)]);
    for (int p : accepted) {
        if (p < 0 || p >= s.target.n)
            throw error("accepted element out of range");
        d.accepting[static_cast<std::size_t>(p)] = true;
    }
    return canonicalize(d);
}

/// BFS interning gives shortlex-minimal representatives because shorter words
/// are dequeued before longer ones and symbols are scanned in alphabet order.
inline std::vector<std::string> shortest_representatives(const Stamp& s) {
    std::vector<std::string> rep(static_cast<std::size_t>(s.target.n));
    std::vector<char> seen(static_cast<std::size_t>(s.target.n), 0);
    std::vector<int> queue = {s.target.identity};
    seen[static_cast<std::size_t>(s.target.identity)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int c = 0; c < s.alphabet.size(); ++c) {
            int y = s.target.mul(x, s.images[static_cast<std::size_t>(c)]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                rep[static_cast<std::size_t>(y)] = rep[static_cast<std::size_t>(x)] + s.alphabet.symbol(c);
                queue.push_back(y);
            }
        }
    }
    return rep;
}

} // namespace synmon

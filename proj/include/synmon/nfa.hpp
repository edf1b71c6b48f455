#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "synmon/alphabet.hpp"
#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/regex.hpp"

namespace synmon {

/// Nondeterministic automaton without epsilon moves.
struct Nfa {
    Alphabet alphabet;
    int states = 0;
    std::vector<std::vector<std::vector<int>>> delta; // [state][symbol] -> successors
    std::vector<int> initial;
    std::vector<int> finals;

    void resize(int n) {
        states = n;
        delta.assign(static_cast<std::size_t>(n),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(alphabet.size())));
    }

    void add_transition(int from, char symbol, int to) {
        int s = alphabet.index_of(symbol);
        if (s < 0)
            throw error(std::string("transition symbol '") + symbol + "' is not in the alphabet");
        delta[static_cast<std::size_t>(from)][static_cast<std::size_t>(s)].push_back(to);
    }
};

namespace detail {

struct GlushkovSets {
    bool nullable = false;
    std::vector<int> first, last;
};

/// Standard position-automaton recursion; `follow` is indexed by position.
inline GlushkovSets glushkov_walk(const Regex& r, std::vector<char>& position_symbol,
                                  std::vector<std::vector<int>>& follow) {
    auto merge = [](std::vector<int>& into, const std::vector<int>& from) {
        into.insert(into.end(), from.begin(), from.end());
    };
    switch (r.kind) {
    case Regex::Kind::Empty:
        return {};
    case Regex::Kind::Epsilon:
        return {true, {}, {}};
    case Regex::Kind::Symbol: {
        int p = static_cast<int>(position_symbol.size());
        position_symbol.push_back(r.symbol);
        follow.emplace_back();
        return {false, {p}, {p}};
    }
    case Regex::Kind::Union: {
        GlushkovSets a = glushkov_walk(r.children[0], position_symbol, follow);
        GlushkovSets b = glushkov_walk(r.children[1], position_symbol, follow);
        GlushkovSets out;
        out.nullable = a.nullable || b.nullable;
        out.first = std::move(a.first);
        merge(out.first, b.first);
        out.last = std::move(a.last);
        merge(out.last, b.last);
        return out;
    }
    case Regex::Kind::Concat: {
        GlushkovSets a = glushkov_walk(r.children[0], position_symbol, follow);
        GlushkovSets b = glushkov_walk(r.children[1], position_symbol, follow);
        for (int p : a.last)
            merge(follow[static_cast<std::size_t>(p)], b.first);
        GlushkovSets out;
        out.nullable = a.nullable && b.nullable;
        out.first = std::move(a.first);
        if (a.nullable)
            merge(out.first, b.first);
        out.last = std::move(b.last);
        if (b.nullable)
            merge(out.last, a.last);
        return out;
    }
    case Regex::Kind::Star: {
        GlushkovSets a = glushkov_walk(r.children[0], position_symbol, follow);
        for (int p : a.last)
            merge(follow[static_cast<std::size_t>(p)], a.first);
        return {true, std::move(a.first), std::move(a.last)};
    }
    case Regex::Kind::Power:
        throw error("power nodes must be expanded before automaton construction");
    }
    throw error("corrupt regex node");
}

} // namespace detail

/// Glushkov position automaton of a regex: one state per symbol occurrence
/// plus a fresh initial state, no epsilon transitions.
inline Nfa glushkov(const Regex& r, const Alphabet& alphabet, int position_cap = 0) {
    if (position_cap <= 0)
        position_cap = default_state_cap();
    Regex expanded = expand_powers(r);
    std::vector<char> position_symbol;
    std::vector<std::vector<int>> follow;
    detail::GlushkovSets sets = detail::glushkov_walk(expanded, position_symbol, follow);
    if (static_cast<int>(position_symbol.size()) >= position_cap)
        throw cap_error("regex is too large: position count exceeds the state cap");

    Nfa nfa;
    nfa.alphabet = alphabet;
    nfa.resize(static_cast<int>(position_symbol.size()) + 1);
    nfa.initial = {0};
    for (int p : sets.first)
        nfa.add_transition(0, position_symbol[static_cast<std::size_t>(p)], p + 1);
    for (std::size_t p = 0; p < follow.size(); ++p)
        for (int q : follow[p])
            nfa.add_transition(static_cast<int>(p) + 1, position_symbol[static_cast<std::size_t>(q)], q + 1);
    for (int p : sets.last)
        nfa.finals.push_back(p + 1);
    if (sets.nullable)
        nfa.finals.push_back(0);
    std::sort(nfa.finals.begin(), nfa.finals.end());
    nfa.finals.erase(std::unique(nfa.finals.begin(), nfa.finals.end()), nfa.finals.end());
    return nfa;
}

/// Subset construction. The result is total: the empty subset acts as sink.
inline Dfa determinize(const Nfa& nfa, int state_cap = 0) {
    if (state_cap <= 0)
        state_cap = default_state_cap();
    const int k = nfa.alphabet.size();

    std::map<std::vector<int>, int> subset_id;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        auto it = subset_id.find(s);
        if (it != subset_id.end())
            return it->second;
        int id = static_cast<int>(subsets.size());
        if (id >= state_cap)
            throw cap_error("determinization exceeded the state cap of " + std::to_string(state_cap));
        subset_id.emplace(s, id);
        subsets.push_back(std::move(s));
        return id;
    };

    std::vector<int> nfa_finals = nfa.finals;
    std::sort(nfa_finals.begin(), nfa_finals.end());

    Dfa dfa;
    dfa.alphabet = nfa.alphabet;
    dfa.initial = intern(nfa.initial);
    // `subsets` grows while rows are filled in; the loop runs to the fixpoint.
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        dfa.delta.emplace_back(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
            std::vector<int> next;
            for (int s : subsets[q]) {
                const auto& out = nfa.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
                next.insert(next.end(), out.begin(), out.end());
            }
            dfa.delta[q][static_cast<std::size_t>(c)] = intern(std::move(next));
        }
    }
    dfa.accepting.assign(subsets.size(), false);
    for (std::size_t q = 0; q < subsets.size(); ++q)
        for (int s : subsets[q])
            if (std::binary_search(nfa_finals.begin(), nfa_finals.end(), s))
                dfa.accepting[q] = true;
    return dfa;
}

} // namespace synmon

#pragma once

#include <algorithm>
#include <deque>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "synmon/alphabet.hpp"
#include "synmon/errors.hpp"

namespace synmon {

/// Deterministic automaton with a total transition function over a declared
/// alphabet. The canonical form used throughout the library is the minimal
/// total automaton with states numbered breadth-first from the initial state,
/// exploring symbols in alphabet order. Two canonical automata over the same
/// alphabet recognize the same language iff they compare equal.
struct Dfa {
    Alphabet alphabet;
    int initial = 0;
    std::vector<std::vector<int>> delta; // [state][symbol index]
    std::vector<bool> accepting;

    int state_count() const { return static_cast<int>(delta.size()); }

    int run(int from, std::string_view word) const {
        int q = from;
        for (char a : word) {
            int c = alphabet.index_of(a);
            if (c < 0)
                throw error(std::string("word contains '") + a + "', which is not in the alphabet");
            q = delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
        }
        return q;
    }

    bool accepts(std::string_view word) const {
        return accepting[static_cast<std::size_t>(run(initial, word))];
    }

    std::vector<int> final_states() const {
        std::vector<int> out;
        for (int q = 0; q < state_count(); ++q)
            if (accepting[static_cast<std::size_t>(q)])
                out.push_back(q);
        return out;
    }

    bool operator==(const Dfa&) const = default;
};

/// Structural sanity check; throws on malformed tables. Used when automata
/// come from files rather than from library constructions.
inline void validate_dfa(const Dfa& d) {
    const int n = d.state_count();
    if (n == 0)
        throw error("automaton must have at least one state");
    if (d.initial < 0 || d.initial >= n)
        throw error("initial state out of range");
    if (static_cast<int>(d.accepting.size()) != n)
        throw error("accepting vector size does not match the state count");
    for (const auto& row : d.delta) {
        if (static_cast<int>(row.size()) != d.alphabet.size())
            throw error("transition row width does not match the alphabet");
        for (int t : row)
            if (t < 0 || t >= n)
                throw error("transition target out of range");
    }
}

inline Dfa empty_language(const Alphabet& a) {
    Dfa d;
    d.alphabet = a;
    d.initial = 0;
    d.delta = {std::vector<int>(static_cast<std::size_t>(a.size()), 0)};
    d.accepting = {false};
    return d;
}

inline Dfa universal_language(const Alphabet& a) {
    Dfa d = empty_language(a);
    d.accepting[0] = true;
    return d;
}

namespace detail {

/// Hopcroft partition refinement on a total automaton whose states are all
/// reachable. Returns the block index of every state; blocks are the classes
/// of the coarsest congruence separating accepting from rejecting states.
inline std::vector<int> hopcroft_blocks(const Dfa& d) {
    const int n = d.state_count();
    const int k = d.alphabet.size();

    std::vector<std::vector<std::vector<int>>> inv(
        static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(k)));
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < k; ++c)
            inv[static_cast<std::size_t>(d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)])]
               [static_cast<std::size_t>(c)].push_back(q);

    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> acc, rej;
        for (int q = 0; q < n; ++q)
            (d.accepting[static_cast<std::size_t>(q)] ? acc : rej).push_back(q);
        if (!rej.empty())
            blocks.push_back(std::move(rej));
        if (!acc.empty())
            blocks.push_back(std::move(acc));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int q : blocks[b])
                block_of[static_cast<std::size_t>(q)] = static_cast<int>(b);
    }
    if (blocks.size() < 2)
        return block_of;

    std::deque<std::pair<int, int>> work;
    std::vector<std::vector<char>> queued;
    auto push = [&](int b, int c) {
        if (!queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
            queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = 1;
            work.emplace_back(b, c);
        }
    };
    queued.assign(2, std::vector<char>(static_cast<std::size_t>(k), 0));
    for (int c = 0; c < k; ++c) {
        push(0, c);
        push(1, c);
    }

    while (!work.empty()) {
        auto [a, c] = work.front();
        work.pop_front();
        queued[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = 0;

        // Group the c-preimage of block a by current block. Determinism of
        // delta guarantees each state appears at most once.
        std::unordered_map<int, std::vector<int>> hit;
        for (int q : blocks[static_cast<std::size_t>(a)])
            for (int p : inv[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)])
                hit[block_of[static_cast<std::size_t>(p)]].push_back(p);

        for (auto& [b, moved] : hit) {
            auto& old_block = blocks[static_cast<std::size_t>(b)];
            if (moved.size() == old_block.size())
                continue; // the whole block maps into a; nothing to split

            int b2 = static_cast<int>(blocks.size());
            std::vector<char> is_moved(static_cast<std::size_t>(n), 0);
            for (int p : moved)
                is_moved[static_cast<std::size_t>(p)] = 1;
            std::vector<int> rest;
            rest.reserve(old_block.size() - moved.size());
            for (int p : old_block)
                if (!is_moved[static_cast<std::size_t>(p)])
                    rest.push_back(p);
            old_block = std::move(rest);
            for (int p : moved)
                block_of[static_cast<std::size_t>(p)] = b2;
            blocks.push_back(std::move(moved));
            queued.emplace_back(static_cast<std::size_t>(k), 0);

            for (int c2 = 0; c2 < k; ++c2) {
                if (queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(c2)]) {
                    push(b2, c2);
                } else {
                    int smaller = blocks[static_cast<std::size_t>(b)].size() <=
                                          blocks[static_cast<std::size_t>(b2)].size()
                                      ? b
                                      : b2;
                    push(smaller, c2);
                }
            }
        }
    }
    return block_of;
}

} // namespace detail

/// Minimal automaton in canonical numbering (breadth-first from the initial
/// state, symbols in alphabet order). Hopcroft refinement after discarding
/// unreachable states.
inline Dfa canonicalize(const Dfa& d) {
    const int k = d.alphabet.size();

    // Restrict to reachable states, already in BFS order.
    std::vector<int> order;
    std::vector<int> newid(static_cast<std::size_t>(d.state_count()), -1);
    order.push_back(d.initial);
    newid[static_cast<std::size_t>(d.initial)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int c = 0; c < k; ++c) {
            int t = d.delta[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(c)];
            if (newid[static_cast<std::size_t>(t)] < 0) {
                newid[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    Dfa reach;
    reach.alphabet = d.alphabet;
    reach.initial = 0;
    reach.delta.assign(order.size(), std::vector<int>(static_cast<std::size_t>(k)));
    reach.accepting.assign(order.size(), false);
    for (std::size_t q = 0; q < order.size(); ++q) {
        for (int c = 0; c < k; ++c)
            reach.delta[q][static_cast<std::size_t>(c)] = newid[static_cast<std::size_t>(
                d.delta[static_cast<std::size_t>(order[q])][static_cast<std::size_t>(c)])];
        reach.accepting[q] = d.accepting[static_cast<std::size_t>(order[q])];
    }

    std::vector<int> block_of = detail::hopcroft_blocks(reach);

    // Renumber the quotient blocks breadth-first. The partition is a
    // congruence, so any representative of a block gives the same successors.
    int nblocks = 0;
    for (int b : block_of)
        nblocks = std::max(nblocks, b + 1);
    std::vector<int> rep(static_cast<std::size_t>(nblocks), -1);
    for (int q = reach.state_count() - 1; q >= 0; --q)
        rep[static_cast<std::size_t>(block_of[static_cast<std::size_t>(q)])] = q;

    std::vector<int> bnew(static_cast<std::size_t>(nblocks), -1);
    std::vector<int> border;
    int b0 = block_of[0];
    bnew[static_cast<std::size_t>(b0)] = 0;
    border.push_back(b0);
    for (std::size_t i = 0; i < border.size(); ++i) {
        int r = rep[static_cast<std::size_t>(border[i])];
        for (int c = 0; c < k; ++c) {
            int tb = block_of[static_cast<std::size_t>(
                reach.delta[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])];
            if (bnew[static_cast<std::size_t>(tb)] < 0) {
                bnew[static_cast<std::size_t>(tb)] = static_cast<int>(border.size());
                border.push_back(tb);
            }
        }
    }

    Dfa out;
    out.alphabet = d.alphabet;
    out.initial = 0;
    out.delta.assign(border.size(), std::vector<int>(static_cast<std::size_t>(k)));
    out.accepting.assign(border.size(), false);
    for (std::size_t i = 0; i < border.size(); ++i) {
        int r = rep[static_cast<std::size_t>(border[i])];
        for (int c = 0; c < k; ++c)
            out.delta[i][static_cast<std::size_t>(c)] = bnew[static_cast<std::size_t>(block_of[
                static_cast<std::size_t>(reach.delta[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])])];
        out.accepting[i] = reach.accepting[static_cast<std::size_t>(r)];
    }
    return out;
}

} // namespace synmon

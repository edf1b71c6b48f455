#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/epset.hpp"

namespace synmon {

namespace detail {

/// Regex fragment with its outermost operator precedence:
/// 0 = union, 1 = concatenation, 2 = atom/postfix.
struct RxPiece {
    std::string text;
    int prec = 2;

    std::string at_least(int p) const { return prec < p ? "(" + text + ")" : text; }
};

inline std::optional<RxPiece> rx_alt(const std::optional<RxPiece>& a,
                                     const std::optional<RxPiece>& b) {
    if (!a)
        return b;
    if (!b)
        return a;
    if (a->text == b->text)
        return a;
    return RxPiece{a->text + " + " + b->text, 0};
}

inline std::optional<RxPiece> rx_cat(const std::optional<RxPiece>& a,
                                     const std::optional<RxPiece>& b) {
    if (!a || !b)
        return std::nullopt;
    if (a->text == "1")
        return b;
    if (b->text == "1")
        return a;
    return RxPiece{a->at_least(1) + " " + b->at_least(2), 1};
}

inline std::optional<RxPiece> rx_star(const std::optional<RxPiece>& a) {
    if (!a || a->text == "1")
        return RxPiece{"1", 2};
    return RxPiece{a->at_least(2) + "*", 2};
}

inline std::string unary_power(std::int64_t k) {
    if (k == 0)
        return "1";
    if (k == 1)
        return "a";
    return "a^" + std::to_string(k);
}

} // namespace detail

/// Unary language rendered in the "exceptions + tails" style, e.g.
/// "a + a^6 a*" or "a (a^7)*".
inline std::string display_epset(const EPSet& in, char letter = 'a') {
    EPSet e = canonical_epset(in);
    std::vector<std::string> pieces;
    for (std::int64_t x : e.exceptions)
        pieces.push_back(detail::unary_power(x));
    for (std::int64_t r = 0; r < e.period; ++r) {
        if (!e.residues.count(r))
            continue;
        std::int64_t n0 = e.threshold + ((r - e.threshold) % e.period + e.period) % e.period;
        std::string tail = e.period == 1 ? "a*" : "(a^" + std::to_string(e.period) + ")*";
        pieces.push_back(n0 == 0 ? tail : detail::unary_power(n0) + " " + tail);
    }
    if (pieces.empty())
        return "0";
    std::string out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        out += " + " + pieces[i];
    if (letter != 'a')
        for (char& c : out)
            if (c == 'a')
                c = letter;
    return out;
}

/// Regex for an arbitrary automaton by state elimination. Unary languages go
/// through the eventually periodic form, which reads much better.
inline std::string display_regex(const Dfa& language) {
    Dfa d = canonicalize(language);
    if (d.alphabet.size() == 1)
        return display_epset(to_epset(d), d.alphabet.symbol(0));

    using detail::RxPiece;
    const int n = d.state_count();
    const int src = n, dst = n + 1;
    std::vector<std::vector<std::optional<RxPiece>>> edge(
        static_cast<std::size_t>(n) + 2,
        std::vector<std::optional<RxPiece>>(static_cast<std::size_t>(n) + 2));
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < d.alphabet.size(); ++c) {
            int t = d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
            edge[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] =
                detail::rx_alt(edge[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)],
                               RxPiece{std::string(1, d.alphabet.symbol(c)), 2});
        }
    edge[static_cast<std::size_t>(src)][static_cast<std::size_t>(d.initial)] = RxPiece{"1", 2};
    for (int q : d.final_states())
        edge[static_cast<std::size_t>(q)][static_cast<std::size_t>(dst)] = RxPiece{"1", 2};

    for (int s = n - 1; s >= 0; --s) {
        auto loop = detail::rx_star(edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)]);
        for (int i = 0; i <= dst; ++i) {
            if (i == s)
                continue;
            const auto& in = edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
            if (!in)
                continue;
            for (int j = 0; j <= dst; ++j) {
                if (j == s)
                    continue;
                const auto& out = edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
                if (!out)
                    continue;
                edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = detail::rx_alt(
                    edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    detail::rx_cat(detail::rx_cat(in, loop), out));
            }
        }
    }
    const auto& result = edge[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)];
    return result ? result->text : "0";
}

} // namespace synmon

#pragma once

#include <string>

#include "synmon/dfa.hpp"
#include "synmon/ordered_monoid.hpp"

namespace synmon {

inline std::string to_dot(const Dfa& d) {
    std::string out = "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
    for (int q = 0; q < d.state_count(); ++q) {
        out += "  q" + std::to_string(q) + " [shape=" +
               (d.accepting[static_cast<std::size_t>(q)] ? "doublecircle" : "circle") +
               ", label=\"" + std::to_string(q) + "\"];\n";
    }
    out += "  init -> q" + std::to_string(d.initial) + ";\n";
    for (int q = 0; q < d.state_count(); ++q) {
        // Merge parallel edges into one label.
        for (int t = 0; t < d.state_count(); ++t) {
            std::string label;
            for (int c = 0; c < d.alphabet.size(); ++c)
                if (d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] == t) {
                    if (!label.empty())
                        label += ",";
                    label += d.alphabet.symbol(c);
                }
            if (!label.empty())
                out += "  q" + std::to_string(q) + " -> q" + std::to_string(t) + " [label=\"" +
                       label + "\"];\n";
        }
    }
    return out + "}\n";
}

/// Hasse diagram of the order: only covering edges are drawn, pointing from
/// the smaller to the larger element.
inline std::string hasse_dot(const OrderedMonoid& m) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=none];\n";
    for (int x = 0; x < m.n; ++x)
        out += "  n" + std::to_string(x) + " [label=\"" + m.name_of(x) + "\"];\n";
    for (auto [x, y] : covering_pairs(m))
        out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    return out + "}\n";
}

} // namespace synmon

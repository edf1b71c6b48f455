#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/ordered_monoid.hpp"

namespace synmon {

// Dfa schema: {alphabet: ["a", ...], states: n, initial: i, finals: [..],
// delta: [[..]]} with one row per state and one column per symbol index.
inline nlohmann::json to_json(const Dfa& d) {
    nlohmann::json j;
    j["alphabet"] = nlohmann::json::array();
    for (char c : d.alphabet.symbols())
        j["alphabet"].push_back(std::string(1, c));
    j["states"] = d.state_count();
    j["initial"] = d.initial;
    j["finals"] = d.final_states();
    j["delta"] = d.delta;
    return j;
}

inline Dfa dfa_from_json(const nlohmann::json& j) {
    Dfa d;
    std::string symbols;
    for (const auto& s : j.at("alphabet")) {
        std::string sym = s.get<std::string>();
        if (sym.size() != 1)
            throw error("alphabet entries must be single characters");
        symbols += sym;
    }
    d.alphabet = Alphabet(symbols);
    int states = j.at("states").get<int>();
    d.initial = j.at("initial").get<int>();
    d.delta = j.at("delta").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(d.delta.size()) != states)
        throw error("delta row count does not match the state count");
    d.accepting.assign(static_cast<std::size_t>(states), false);
    for (int q : j.at("finals").get<std::vector<int>>()) {
        if (q < 0 || q >= states)
            throw error("final state out of range");
        d.accepting[static_cast<std::size_t>(q)] = true;
    }
    validate_dfa(d);
    return d;
}

// OrderedMonoid schema: {n, identity, mult: [[..]], leq: [[bool]], names: [..]}.
inline nlohmann::json to_json(const OrderedMonoid& m) {
    nlohmann::json j;
    j["n"] = m.n;
    j["identity"] = m.identity;
    auto mult = nlohmann::json::array();
    auto leq = nlohmann::json::array();
    for (int x = 0; x < m.n; ++x) {
        auto mrow = nlohmann::json::array();
        auto lrow = nlohmann::json::array();
        for (int y = 0; y < m.n; ++y) {
            mrow.push_back(m.mul(x, y));
            lrow.push_back(m.le(x, y));
        }
        mult.push_back(std::move(mrow));
        leq.push_back(std::move(lrow));
    }
    j["mult"] = std::move(mult);
    j["leq"] = std::move(leq);
    if (!m.names.empty())
        j["names"] = m.names;
    return j;
}

inline OrderedMonoid monoid_from_json(const nlohmann::json& j) {
    OrderedMonoid m;
    m.n = j.at("n").get<int>();
    m.identity = j.at("identity").get<int>();
    auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
    auto leq = j.at("leq").get<std::vector<std::vector<bool>>>();
    if (static_cast<int>(mult.size()) != m.n || static_cast<int>(leq.size()) != m.n)
        throw error("table row count does not match n");
    for (int x = 0; x < m.n; ++x) {
        if (static_cast<int>(mult[static_cast<std::size_t>(x)].size()) != m.n ||
            static_cast<int>(leq[static_cast<std::size_t>(x)].size()) != m.n)
            throw error("table row width does not match n");
        for (int y = 0; y < m.n; ++y) {
            m.mult.push_back(mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
            m.leq.push_back(leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ? 1 : 0);
        }
    }
    if (j.contains("names"))
        m.names = j.at("names").get<std::vector<std::string>>();
    require_valid(m);
    return m;
}

} // namespace synmon

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "synmon/dfa.hpp"
#include "synmon/errors.hpp"
#include "synmon/lang_ops.hpp"

namespace synmon {

enum class ClosureOp { Union, Intersect, Complement, LeftQuotient, RightQuotient };

inline const std::set<ClosureOp>& lattice_quotient_ops() {
    static const std::set<ClosureOp> ops = {ClosureOp::Union, ClosureOp::Intersect,
                                            ClosureOp::LeftQuotient, ClosureOp::RightQuotient};
    return ops;
}

/// Serialization of a canonical automaton, used as a dedup key.
inline std::string canonical_key(const Dfa& d) {
    std::string key = std::to_string(d.state_count());
    key += '|';
    for (const auto& row : d.delta)
        for (int t : row) {
            key += std::to_string(t);
            key += ',';
        }
    key += '|';
    for (bool b : d.accepting)
        key += b ? '1' : '0';
    return key;
}

/// Family of canonical automata closed under the declared operations.
struct ClosureFamily {
    std::vector<Dfa> members; // sorted by canonical key
    std::vector<Dfa> generators;
    std::set<ClosureOp> ops;

    bool contains(const Dfa& language) const {
        std::string key = canonical_key(canonicalize(language));
        for (const auto& m : members)
            if (canonical_key(m) == key)
                return true;
        return false;
    }
};

/// Least family containing the generators, the empty language and the full
/// language, closed under the declared operations. Word quotients follow from
/// single-letter quotients by composition, so only letter quotients are
/// applied. Saturation runs breadth-first by generation, processing unions
/// first, then intersections, then complements and quotients.
inline ClosureFamily lattice_closure(const std::vector<Dfa>& generators,
                                     const std::set<ClosureOp>& ops, std::size_t cap = 100000) {
    if (generators.empty())
        throw error("lattice closure needs at least one generator");
    Alphabet alphabet = generators.front().alphabet;
    for (const auto& g : generators)
        if (g.alphabet != alphabet)
            throw error("closure generators must share one alphabet");

    std::map<std::string, std::size_t> index_of;
    std::vector<Dfa> members;
    auto add = [&](const Dfa& canon) {
        std::string key = canonical_key(canon);
        if (index_of.count(key))
            return false;
        if (members.size() >= cap)
            throw cap_error("closure family exceeded the cap of " + std::to_string(cap));
        index_of.emplace(std::move(key), members.size());
        members.push_back(canon);
        return true;
    };

    add(empty_language(alphabet));
    add(universal_language(alphabet));
    std::vector<Dfa> canonical_gens;
    for (const auto& g : generators) {
        Dfa c = canonicalize(g);
        canonical_gens.push_back(c);
        add(c);
    }

    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < members.size(); ++i)
        frontier.push_back(i);

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        auto emit = [&](const Dfa& canon) {
            if (add(canon))
                next.push_back(members.size() - 1);
        };
        // Binary operations pair each frontier member with the whole family;
        // both operations are commutative, so older pairs are already done.
        if (ops.count(ClosureOp::Union))
            for (std::size_t i : frontier)
                for (std::size_t j = 0; j < members.size(); ++j)
                    emit(union_of(members[i], members[j]));
        if (ops.count(ClosureOp::Intersect))
            for (std::size_t i : frontier)
                for (std::size_t j = 0; j < members.size(); ++j)
                    emit(intersection_of(members[i], members[j]));
        if (ops.count(ClosureOp::Complement))
            for (std::size_t i : frontier)
                emit(complement_of(members[i]));
        if (ops.count(ClosureOp::LeftQuotient))
            for (std::size_t i : frontier)
                for (char a : alphabet.symbols())
                    emit(left_quotient(std::string(1, a), members[i]));
        if (ops.count(ClosureOp::RightQuotient))
            for (std::size_t i : frontier)
                for (char a : alphabet.symbols())
                    emit(right_quotient(std::string(1, a), members[i]));
        frontier = std::move(next);
    }

    // The generation passes above can miss pairs formed inside one
    // generation by a later op kind; full passes close any gap.
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (ops.count(ClosureOp::Union))
                    grew |= add(union_of(members[i], members[j]));
                if (ops.count(ClosureOp::Intersect))
                    grew |= add(intersection_of(members[i], members[j]));
            }
            if (ops.count(ClosureOp::Complement))
                grew |= add(complement_of(members[i]));
            for (char a : alphabet.symbols()) {
                if (ops.count(ClosureOp::LeftQuotient))
                    grew |= add(left_quotient(std::string(1, a), members[i]));
                if (ops.count(ClosureOp::RightQuotient))
                    grew |= add(right_quotient(std::string(1, a), members[i]));
            }
        }
    }

    ClosureFamily out;
    out.ops = ops;
    out.generators = std::move(canonical_gens);
    out.members.reserve(members.size());
    for (const auto& [key, idx] : index_of)
        out.members.push_back(members[idx]);
    return out;
}

/// One-step soundness check: applying any declared operation to members must
/// stay inside the family.
inline bool closed_under(const ClosureFamily& f, ClosureOp op) {
    std::set<std::string> keys;
    for (const auto& m : f.members)
        keys.insert(canonical_key(m));
    auto inside = [&](const Dfa& d) { return keys.count(canonical_key(d)) > 0; };
    const Alphabet& alphabet = f.members.front().alphabet;

    for (const auto& x : f.members) {
        switch (op) {
        case ClosureOp::Complement:
            if (!inside(complement_of(x)))
                return false;
            break;
        case ClosureOp::LeftQuotient:
        case ClosureOp::RightQuotient:
            for (char a : alphabet.symbols()) {
                Dfa q = op == ClosureOp::LeftQuotient ? left_quotient(std::string(1, a), x)
                                                      : right_quotient(std::string(1, a), x);
                if (!inside(q))
                    return false;
            }
            break;
        case ClosureOp::Union:
        case ClosureOp::Intersect:
            for (const auto& y : f.members) {
                Dfa z = op == ClosureOp::Union ? union_of(x, y) : intersection_of(x, y);
                if (!inside(z))
                    return false;
            }
            break;
        }
    }
    return true;
}

} // namespace synmon

#pragma once

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/errors.hpp"

namespace synmon {

/// Finite ordered set of single-character symbols. The declaration order is
/// the canonical symbol indexing used by every transition table in the
/// library. Characters reserved by the regex grammar cannot be symbols.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view symbols) {
        for (char c : symbols) {
            if (is_reserved(c))
                throw error(std::string("reserved character cannot be an alphabet symbol: '") + c + "'");
            if (contains(c))
                throw error(std::string("duplicate symbol in alphabet: '") + c + "'");
            symbols_.push_back(c);
        }
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    char symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::vector<char>& symbols() const { return symbols_; }

    int index_of(char c) const {
        for (int i = 0; i < size(); ++i)
            if (symbols_[static_cast<std::size_t>(i)] == c)
                return i;
        return -1;
    }

    bool contains(char c) const { return index_of(c) >= 0; }

    std::string to_string() const { return std::string(symbols_.begin(), symbols_.end()); }

    bool operator==(const Alphabet&) const = default;

    /// Union of two alphabets: symbols of `a` in their order, then the
    /// symbols of `b` not already present, in `b`'s order. merged(a, a) == a.
    static Alphabet merged(const Alphabet& a, const Alphabet& b) {
        Alphabet out = a;
        for (char c : b.symbols_)
            if (!out.contains(c))
                out.symbols_.push_back(c);
        return out;
    }

    static bool is_reserved(char c) {
        return c == '0' || c == '1' || c == '+' || c == '*' || c == '^' ||
               c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

private:
    std::vector<char> symbols_;
};

/// State cap used by determinization and regex compilation; the environment
/// variable SYNMON_STATE_CAP overrides the built-in default of 10000.
inline int default_state_cap() {
    if (const char* env = std::getenv("SYNMON_STATE_CAP")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 10000;
}

} // namespace synmon

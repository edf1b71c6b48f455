#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synmon/alphabet.hpp"
#include "synmon/errors.hpp"

namespace synmon {

/// Regular expression AST. `0` is the empty language, `1` the empty word,
/// `+` union, juxtaposition concatenation, `*` star and `^k` a k-fold power.
struct Regex {
    enum class Kind { Empty, Epsilon, Symbol, Union, Concat, Star, Power };

    Kind kind = Kind::Empty;
    char symbol = '\0';          // Kind::Symbol
    int exponent = 0;            // Kind::Power
    std::vector<Regex> children; // Union/Concat: >= 2, Star/Power: exactly 1

    static Regex empty() { return {Kind::Empty, '\0', 0, {}}; }
    static Regex epsilon() { return {Kind::Epsilon, '\0', 0, {}}; }
    static Regex sym(char c) { return {Kind::Symbol, c, 0, {}}; }
    static Regex star(Regex e) { return {Kind::Star, '\0', 0, {std::move(e)}}; }
    static Regex power(Regex e, int k) { return {Kind::Power, '\0', k, {std::move(e)}}; }

    static Regex unite(Regex a, Regex b) {
        return {Kind::Union, '\0', 0, {std::move(a), std::move(b)}};
    }
    static Regex concat(Regex a, Regex b) {
        return {Kind::Concat, '\0', 0, {std::move(a), std::move(b)}};
    }
};

namespace detail {

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        Regex r = parse_union();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return r;
    }

private:
    // union := concat ('+' concat)*
    Regex parse_union() {
        Regex r = parse_concat();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                r = Regex::unite(std::move(r), parse_concat());
            } else {
                return r;
            }
        }
    }

    // concat := postfix+
    Regex parse_concat() {
        Regex r = parse_postfix();
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == '+' || text_[pos_] == ')')
                return r;
            r = Regex::concat(std::move(r), parse_postfix());
        }
    }

    // postfix := atom ('*' | '^' nat)*
    Regex parse_postfix() {
        Regex r = parse_atom();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                r = Regex::star(std::move(r));
            } else if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                r = Regex::power(std::move(r), parse_nat());
            } else {
                return r;
            }
        }
    }

    Regex parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("expected '0', '1', a symbol or '('", pos_);
        char c = text_[pos_];
        if (c == '0') {
            ++pos_;
            return Regex::empty();
        }
        if (c == '1') {
            ++pos_;
            return Regex::epsilon();
        }
        if (c == '(') {
            std::size_t open = pos_++;
            Regex r = parse_union();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw parse_error("unbalanced '('", open);
            ++pos_;
            return r;
        }
        if (alphabet_.contains(c)) {
            ++pos_;
            return Regex::sym(c);
        }
        throw parse_error(std::string("symbol '") + c + "' is not in the alphabet", pos_);
    }

    int parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected an exponent after '^'", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

inline int precedence(Regex::Kind k) {
    switch (k) {
    case Regex::Kind::Union: return 0;
    case Regex::Kind::Concat: return 1;
    default: return 2;
    }
}

inline void print_regex(const Regex& r, std::string& out, int parent_prec) {
    int prec = precedence(r.kind);
    bool paren = prec < parent_prec;
    if (paren)
        out += '(';
    switch (r.kind) {
    case Regex::Kind::Empty: out += '0'; break;
    case Regex::Kind::Epsilon: out += '1'; break;
    case Regex::Kind::Symbol: out += r.symbol; break;
    case Regex::Kind::Union:
        print_regex(r.children[0], out, 0);
        out += " + ";
        print_regex(r.children[1], out, 0);
        break;
    case Regex::Kind::Concat:
        print_regex(r.children[0], out, 1);
        print_regex(r.children[1], out, 2); // right operand needs parens if a union or concat
        break;
    case Regex::Kind::Star:
        print_regex(r.children[0], out, 3);
        out += '*';
        break;
    case Regex::Kind::Power:
        print_regex(r.children[0], out, 3);
        out += '^';
        out += std::to_string(r.exponent);
        break;
    }
    if (paren)
        out += ')';
}

} // namespace detail

inline Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return detail::RegexParser(text, alphabet).parse();
}

inline std::string to_string(const Regex& r) {
    std::string out;
    detail::print_regex(r, out, 0);
    return out;
}

/// Rewrites every power node into a chain of concatenations (x^0 becomes 1).
inline Regex expand_powers(const Regex& r) {
    switch (r.kind) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
    case Regex::Kind::Symbol:
        return r;
    case Regex::Kind::Union:
        return Regex::unite(expand_powers(r.children[0]), expand_powers(r.children[1]));
    case Regex::Kind::Concat:
        return Regex::concat(expand_powers(r.children[0]), expand_powers(r.children[1]));
    case Regex::Kind::Star:
        return Regex::star(expand_powers(r.children[0]));
    case Regex::Kind::Power: {
        if (r.exponent == 0)
            return Regex::epsilon();
        Regex base = expand_powers(r.children[0]);
        Regex out = base;
        for (int i = 1; i < r.exponent; ++i)
            out = Regex::concat(std::move(out), base);
        return out;
    }
    }
    throw error("corrupt regex node");
}

} // namespace synmon

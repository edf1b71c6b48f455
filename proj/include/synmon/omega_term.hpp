#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/errors.hpp"

namespace synmon {

/// Exponent of an omega-term factor: either a finite power k >= 1 or
/// omega + k with k >= 0 (k = 0 is the plain omega power).
struct Exponent {
    enum class Kind { Finite, OmegaPlus };

    Kind kind = Kind::Finite;
    long k = 1;

    static Exponent finite(long k) {
        if (k < 1)
            throw error("finite exponents must be at least 1");
        return {Kind::Finite, k};
    }
    static Exponent omega_plus(long k) {
        if (k < 0)
            throw error("omega + k requires k >= 0");
        return {Kind::OmegaPlus, k};
    }

    bool operator==(const Exponent&) const = default;
};

/// Product of variable powers; the empty factor list is the term 1.
struct OmegaTerm {
    std::vector<std::pair<char, Exponent>> factors;

    std::vector<char> variables() const {
        std::vector<char> out;
        for (const auto& [v, e] : factors)
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        return out;
    }

    OmegaTerm& factor(char v, Exponent e) {
        factors.emplace_back(v, e);
        return *this;
    }

    bool operator==(const OmegaTerm&) const = default;
};

/// u <= v, or u = v (shorthand for both directions).
struct Inequality {
    OmegaTerm lhs, rhs;
    bool equality = false;

    std::vector<char> variables() const {
        std::vector<char> out = lhs.variables();
        for (char v : rhs.variables())
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        return out;
    }
};

namespace detail {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Inequality parse_inequality() {
        Inequality out;
        out.lhs = parse_term();
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '<' && text_[pos_ + 1] == '=') {
            pos_ += 2;
            out.equality = false;
        } else if (pos_ < text_.size() && text_[pos_] == '=') {
            ++pos_;
            out.equality = true;
        } else {
            throw parse_error("expected '<=' or '='", pos_);
        }
        out.rhs = parse_term();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return out;
    }

    OmegaTerm parse_whole_term() {
        OmegaTerm t = parse_term();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return t;
    }

private:
    OmegaTerm parse_term() {
        OmegaTerm t;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size())
                break;
            char c = text_[pos_];
            if (c == '1') {
                ++pos_;
                any = true;
                continue; // the empty product contributes no factor
            }
            if (!std::isalpha(static_cast<unsigned char>(c)))
                break;
            ++pos_;
            Exponent e = Exponent::finite(1);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                e = parse_exponent();
            }
            // x^0 contributes the identity, i.e. no factor.
            if (!(e.kind == Exponent::Kind::Finite && e.k == 0))
                t.factor(c, e);
            any = true;
        }
        if (!any)
            throw parse_error("expected a term", pos_);
        return t;
    }

    Exponent parse_exponent() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            return Exponent::omega_plus(0);
        }
        if (pos_ < text_.size() && text_[pos_] == '(') {
            std::size_t open = pos_++;
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'w')
                throw parse_error("expected 'w' after '('", pos_);
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '+')
                throw parse_error("expected '+' in '(w+k)'", pos_);
            ++pos_;
            long k = parse_nat();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw parse_error("unbalanced '(' in exponent", open);
            ++pos_;
            return Exponent::omega_plus(k);
        }
        long k = parse_nat();
        if (k == 0)
            return {Exponent::Kind::Finite, 0}; // normalized away by the caller
        return Exponent::finite(k);
    }

    long parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected a number", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Inequality parse_inequality(std::string_view text) {
    return detail::TermParser(text).parse_inequality();
}

inline OmegaTerm parse_omega_term(std::string_view text) {
    return detail::TermParser(text).parse_whole_term();
}

inline std::string to_string(const OmegaTerm& t) {
    if (t.factors.empty())
        return "1";
    std::string out;
    for (const auto& [v, e] : t.factors) {
        if (!out.empty())
            out += ' ';
        out += v;
        if (e.kind == Exponent::Kind::Finite) {
            if (e.k != 1)
                out += "^" + std::to_string(e.k);
        } else if (e.k == 0) {
            out += "^w";
        } else {
            out += "^(w+" + std::to_string(e.k) + ")";
        }
    }
    return out;
}

inline std::string to_string(const Inequality& i) {
    return to_string(i.lhs) + (i.equality ? " = " : " <= ") + to_string(i.rhs);
}

} // namespace synmon

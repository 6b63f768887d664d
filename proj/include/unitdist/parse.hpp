#pragma once

#include "unitdist/biquad.hpp"
#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unitdist {

// Exact literal grammar:
//   RAT  := INT | INT "/" POSINT
//   ELEM := RAT (("+"|"-") RAT "*" "sqrt(" INT ")")*
// Whitespace is insignificant. As a convenience the leading term may itself
// be a sqrt term, and a coefficient of 1 may be omitted ("sqrt(3)").
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos) +
                             " (expected grammar: RAT := INT | INT \"/\" POSINT; "
                             "ELEM := RAT ((\"+\"|\"-\") RAT \"*\" \"sqrt(\" INT \")\")*)"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct ParsedTerm {
    Rat coef;
    long long radicand;  // 1 for a plain rational term
};

namespace detail_parse {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) { ++i_; return true; }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s_.substr(i_, w.size()) == w) { i_ += w.size(); return true; }
        return false;
    }
    std::size_t pos() const { return i_; }

    Int parse_uint() {
        skip_ws();
        std::size_t start = i_;
        std::string digits;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            digits.push_back(s_[i_]);
            ++i_;
        }
        if (digits.empty()) throw ParseError("expected an integer", start);
        return Int(digits);
    }

    // Unsigned RAT (sign is handled by the caller via separators).
    Rat parse_rat_unsigned() {
        Int num = parse_uint();
        if (eat('/')) {
            std::size_t dpos = pos();
            Int den = parse_uint();
            if (den == 0) throw ParseError("denominator must be positive", dpos);
            return make_rat(num, den);
        }
        return Rat(num);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace detail_parse

inline std::vector<ParsedTerm> parse_elem_terms(std::string_view text) {
    detail_parse::Cursor c(text);
    std::vector<ParsedTerm> terms;
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (c.eat('-')) sign = -1;
            else c.eat('+');
        } else {
            if (c.done()) break;
            if (c.eat('-')) sign = -1;
            else if (c.eat('+')) sign = 1;
            else throw ParseError("expected '+' or '-' between terms", c.pos());
        }
        first = false;

        auto parse_radicand = [&c]() -> long long {
            std::size_t rpos = c.pos();
            bool neg = c.eat('-');
            Int r = c.parse_uint();
            if (!c.eat(')')) throw ParseError("expected ')'", c.pos());
            if (r > std::numeric_limits<long long>::max())
                throw ParseError("radicand too large", rpos);
            long long v = static_cast<long long>(r);
            return neg ? -v : v;
        };

        Rat coef;
        long long radicand = 1;
        if (c.eat_word("sqrt(")) {
            coef = 1;
            radicand = parse_radicand();
        } else {
            coef = c.parse_rat_unsigned();
            if (c.eat('*')) {
                if (!c.eat_word("sqrt(")) throw ParseError("expected \"sqrt(\"", c.pos());
                radicand = parse_radicand();
            }
        }
        if (radicand == 0) throw ParseError("radicand must be nonzero", c.pos());
        terms.push_back({Rat(sign) * coef, radicand});
    }
    if (terms.empty()) throw ParseError("empty element", 0);
    if (!c.done()) throw ParseError("trailing characters", c.pos());
    return terms;
}

inline Rat parse_rat_elem(std::string_view text) {
    Rat out = 0;
    for (const auto& t : parse_elem_terms(text)) {
        if (t.radicand != 1)
            throw ParseError("sqrt term not allowed in a rational element", 0);
        out += t.coef;
    }
    return out;
}

inline QuadElem parse_quad_elem(std::string_view text, long long m) {
    Rat a = 0, b = 0;
    for (const auto& t : parse_elem_terms(text)) {
        if (t.radicand == 1) a += t.coef;
        else if (t.radicand == m) b += t.coef;
        else
            throw ParseError("radicand " + std::to_string(t.radicand) +
                             " does not match the field (expected sqrt(" + std::to_string(m) + "))", 0);
    }
    return QuadElem{m, a, b};
}

inline BiQuadElem parse_biquad_elem(std::string_view text, long long m1, long long m2) {
    Rat a = 0, b = 0, c = 0, d = 0;
    long long m3 = m1 * m2;
    for (const auto& t : parse_elem_terms(text)) {
        if (t.radicand == 1) a += t.coef;
        else if (t.radicand == m1) b += t.coef;
        else if (t.radicand == m2) c += t.coef;
        else if (t.radicand == m3) d += t.coef;
        else
            throw ParseError("radicand " + std::to_string(t.radicand) +
                             " does not match the field (expected sqrt of " + std::to_string(m1) +
                             ", " + std::to_string(m2) + " or " + std::to_string(m3) + ")", 0);
    }
    return BiQuadElem{m1, m2, a, b, c, d};
}

// ---- canonical serialization (round-trips through the parser) ----

inline std::string serialize_rat(const Rat& r) {
    std::string out = rat_num(r).str();
    if (rat_den(r) != 1) out += "/" + rat_den(r).str();
    return out;
}

namespace detail_parse {

inline void append_sqrt_term(std::string& out, const Rat& coef, long long radicand) {
    if (coef == 0) return;
    if (out.empty()) {
        if (coef < 0) out += "-";
    } else {
        out += coef < 0 ? "-" : "+";
    }
    Rat mag = coef < 0 ? -coef : coef;
    out += serialize_rat(mag) + "*sqrt(" + std::to_string(radicand) + ")";
}

}  // namespace detail_parse

inline std::string serialize_quad(const QuadElem& x) {
    std::string out;
    if (x.a != 0) out += serialize_rat(x.a);
    detail_parse::append_sqrt_term(out, x.b, x.m);
    return out.empty() ? "0" : out;
}

inline std::string serialize_biquad(const BiQuadElem& x) {
    std::string out;
    if (x.a != 0) out += serialize_rat(x.a);
    detail_parse::append_sqrt_term(out, x.b, x.m1);
    detail_parse::append_sqrt_term(out, x.c, x.m2);
    detail_parse::append_sqrt_term(out, x.d, x.m1 * x.m2);
    return out.empty() ? "0" : out;
}

template <typename Elem, typename SerializeFn>
std::string serialize_point(const std::vector<Elem>& coords, SerializeFn ser) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += "; ";
        out += ser(coords[i]);
    }
    return out;
}

inline std::string serialize_point(const std::vector<Rat>& p) {
    return serialize_point(p, [](const Rat& r) { return serialize_rat(r); });
}
inline std::string serialize_point(const std::vector<QuadElem>& p) {
    return serialize_point(p, [](const QuadElem& x) { return serialize_quad(x); });
}
inline std::string serialize_point(const std::vector<BiQuadElem>& p) {
    return serialize_point(p, [](const BiQuadElem& x) { return serialize_biquad(x); });
}

// Split a point line on ";" into coordinate strings.
inline std::vector<std::string> split_coordinates(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace unitdist

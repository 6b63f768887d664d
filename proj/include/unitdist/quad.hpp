#pragma once

#include "unitdist/numtheory.hpp"
#include "unitdist/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

namespace unitdist {

enum class ArithOp { Add, Sub, Mul, Div };

inline bool is_squarefree(long long m) {
    if (m == 0) return false;
    long long n = m < 0 ? -m : m;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// Element a + b*sqrt(m) of Q(sqrt m), m squarefree, m not in {0, 1}.
struct QuadElem {
    long long m;
    Rat a;
    Rat b;

    QuadElem(long long m_, Rat a_, Rat b_) : m(m_), a(std::move(a_)), b(std::move(b_)) {
        if (m == 0 || m == 1 || !is_squarefree(m))
            throw std::invalid_argument("QuadElem: m must be squarefree and not 0 or 1");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) = default;
};

inline void require_same_field(const QuadElem& x, const QuadElem& y) {
    if (x.m != y.m)
        throw std::invalid_argument("quad elements live in different fields");
}

inline QuadElem quad_conj(const QuadElem& x) { return {x.m, x.a, -x.b}; }

inline Rat quad_norm(const QuadElem& x) { return x.a * x.a - Rat(x.m) * x.b * x.b; }

inline QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    require_same_field(x, y);
    return {x.m, x.a + y.a, x.b + y.b};
}

inline QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    require_same_field(x, y);
    return {x.m, x.a - y.a, x.b - y.b};
}

inline QuadElem operator-(const QuadElem& x) { return {x.m, -x.a, -x.b}; }

inline QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    require_same_field(x, y);
    return {x.m, x.a * y.a + Rat(x.m) * x.b * y.b, x.a * y.b + x.b * y.a};
}

inline QuadElem operator*(const Rat& c, const QuadElem& x) { return {x.m, c * x.a, c * x.b}; }

inline QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    require_same_field(x, y);
    if (y.is_zero()) throw std::invalid_argument("quad division by zero");
    Rat n = quad_norm(y);
    // n = y * conj(y) is nonzero since m is not a rational square.
    QuadElem num = x * quad_conj(y);
    return {x.m, num.a / n, num.b / n};
}

inline QuadElem quad_arith(const QuadElem& x, const QuadElem& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw std::logic_error("unreachable");
}

// Square root of a nonzero rational r inside Q(sqrt m), if it exists:
// r is a square there iff r or r/m is a square in Q.
inline std::optional<QuadElem> is_square_rational_in_quad(const Rat& r, long long m) {
    if (r == 0) throw std::invalid_argument("is_square_rational_in_quad: r must be nonzero");
    if (auto s = rational_sqrt(r)) return QuadElem{m, *s, 0};
    if (auto s = rational_sqrt(r / Rat(m))) return QuadElem{m, 0, *s};
    return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << x.a << " + " << x.b << "*sqrt(" << x.m << ")";
}

}  // namespace unitdist

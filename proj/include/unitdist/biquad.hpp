#pragma once

#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace unitdist {

// Element a + b*e1 + c*e2 + d*e3 of Q(sqrt m1, sqrt m2), with e1 = sqrt(m1),
// e2 = sqrt(m2), e3 = e1*e2. Requires m1, m2 distinct squarefree integers > 1
// with m1*m2 not a perfect square, so the basis {1, e1, e2, e3} is honest.
struct BiQuadElem {
    long long m1;
    long long m2;
    Rat a, b, c, d;

    BiQuadElem(long long m1_, long long m2_, Rat a_, Rat b_, Rat c_, Rat d_)
        : m1(m1_), m2(m2_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (m1 <= 1 || m2 <= 1 || m1 == m2 || !is_squarefree(m1) || !is_squarefree(m2))
            throw std::invalid_argument("BiQuadElem: m1, m2 must be distinct squarefree integers > 1");
        if (is_perfect_square(Int(m1) * m2))
            throw std::invalid_argument("BiQuadElem: m1*m2 must not be a perfect square");
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend bool operator==(const BiQuadElem& x, const BiQuadElem& y) = default;
};

inline void require_same_field(const BiQuadElem& x, const BiQuadElem& y) {
    if (x.m1 != y.m1 || x.m2 != y.m2)
        throw std::invalid_argument("biquad elements live in different fields");
}

inline BiQuadElem operator+(const BiQuadElem& x, const BiQuadElem& y) {
    require_same_field(x, y);
    return {x.m1, x.m2, x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

inline BiQuadElem operator-(const BiQuadElem& x, const BiQuadElem& y) {
    require_same_field(x, y);
    return {x.m1, x.m2, x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline BiQuadElem operator-(const BiQuadElem& x) {
    return {x.m1, x.m2, -x.a, -x.b, -x.c, -x.d};
}

inline BiQuadElem operator*(const BiQuadElem& x, const BiQuadElem& y) {
    require_same_field(x, y);
    Rat m1(x.m1), m2(x.m2);
    // e1^2 = m1, e2^2 = m2, e3^2 = m1*m2, e1*e2 = e3, e1*e3 = m1*e2, e2*e3 = m2*e1.
    Rat a = x.a * y.a + m1 * x.b * y.b + m2 * x.c * y.c + m1 * m2 * x.d * y.d;
    Rat b = x.a * y.b + x.b * y.a + m2 * (x.c * y.d + x.d * y.c);
    Rat c = x.a * y.c + x.c * y.a + m1 * (x.b * y.d + x.d * y.b);
    Rat d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
    return {x.m1, x.m2, a, b, c, d};
}

inline BiQuadElem operator*(const Rat& s, const BiQuadElem& x) {
    return {x.m1, x.m2, s * x.a, s * x.b, s * x.c, s * x.d};
}

// Galois conjugates: sigma flips sqrt(m1), tau flips sqrt(m2).
inline BiQuadElem biquad_sigma(const BiQuadElem& x) { return {x.m1, x.m2, x.a, -x.b, x.c, -x.d}; }
inline BiQuadElem biquad_tau(const BiQuadElem& x) { return {x.m1, x.m2, x.a, x.b, -x.c, -x.d}; }
inline BiQuadElem biquad_sigmatau(const BiQuadElem& x) { return {x.m1, x.m2, x.a, -x.b, -x.c, x.d}; }

// Rational norm: product of x with its three nontrivial conjugates.
inline Rat biquad_norm(const BiQuadElem& x) {
    BiQuadElem n = x * biquad_sigma(x) * biquad_tau(x) * biquad_sigmatau(x);
    // The product is Galois-fixed, hence rational.
    if (n.b != 0 || n.c != 0 || n.d != 0)
        throw std::logic_error("biquad_norm: product of conjugates not rational");
    return n.a;
}

inline BiQuadElem operator/(const BiQuadElem& x, const BiQuadElem& y) {
    require_same_field(x, y);
    if (y.is_zero()) throw std::invalid_argument("biquad division by zero");
    BiQuadElem cofactor = biquad_sigma(y) * biquad_tau(y) * biquad_sigmatau(y);
    Rat n = biquad_norm(y);
    if (n == 0)
        throw std::invalid_argument("biquad division by an element of norm zero");
    return (Rat(1) / n) * (x * cofactor);
}

inline BiQuadElem biquad_arith(const BiQuadElem& x, const BiQuadElem& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw std::logic_error("unreachable");
}

inline std::ostream& operator<<(std::ostream& os, const BiQuadElem& x) {
    return os << x.a << " + " << x.b << "*sqrt(" << x.m1 << ") + " << x.c << "*sqrt(" << x.m2
              << ") + " << x.d << "*sqrt(" << Int(x.m1) * x.m2 << ")";
}

}  // namespace unitdist

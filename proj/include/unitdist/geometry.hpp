#pragma once

#include "unitdist/biquad.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/numtheory.hpp"
#include "unitdist/parse.hpp"
#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitdist {

// Diagonal quadratic form q(x) = sum c_i x_i^2.
struct DiagForm {
    std::vector<long long> coeffs;

    explicit DiagForm(std::vector<long long> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("form must have dimension >= 1");
        for (long long ci : coeffs)
            if (ci == 0) throw std::invalid_argument("form coefficients must be nonzero");
    }

    int dim() const { return static_cast<int>(coeffs.size()); }

    static DiagForm euclidean(int d) { return DiagForm(std::vector<long long>(d, 1)); }
    static DiagForm lorentz() { return DiagForm({1, -1}); }
};

// ---- scalar glue shared by the exact builders ----

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline QuadElem zero_like(const QuadElem& x) { return {x.m, 0, 0}; }
inline QuadElem one_like(const QuadElem& x) { return {x.m, 1, 0}; }
inline BiQuadElem zero_like(const BiQuadElem& x) { return {x.m1, x.m2, 0, 0, 0, 0}; }
inline BiQuadElem one_like(const BiQuadElem& x) { return {x.m1, x.m2, 1, 0, 0, 0}; }

inline Rat scale(long long c, const Rat& x) { return Rat(c) * x; }
inline QuadElem scale(long long c, const QuadElem& x) { return Rat(c) * x; }
inline BiQuadElem scale(long long c, const BiQuadElem& x) { return Rat(c) * x; }

template <typename K>
using PointT = std::vector<K>;

template <typename K>
K form_value(const DiagForm& form, const PointT<K>& v) {
    if (static_cast<int>(v.size()) != form.dim())
        throw std::invalid_argument("point dimension does not match the form");
    K acc = zero_like(v[0]);
    for (std::size_t i = 0; i < v.size(); ++i) acc = acc + scale(form.coeffs[i], v[i] * v[i]);
    return acc;
}

// ---- finite-field graphs ----

// All offset vectors delta in F_p^d with q(delta) = 1, lexicographic order.
inline std::vector<std::vector<long long>> unit_sphere_fp(long long p, int d, const DiagForm& form) {
    if (!is_prime(p)) throw std::invalid_argument("unit_sphere_fp: p must be prime");
    if (form.dim() != d) throw std::invalid_argument("unit_sphere_fp: form dimension mismatch");
    std::vector<std::vector<long long>> sphere;
    std::vector<long long> v(d, 0);
    while (true) {
        long long q = 0;
        for (int i = 0; i < d; ++i)
            q = (q + (form.coeffs[i] % p + p) * (v[i] * v[i] % p)) % p;
        if (q % p == 1) sphere.push_back(v);
        int i = d - 1;
        while (i >= 0 && v[i] == p - 1) { v[i] = 0; --i; }
        if (i < 0) break;
        ++v[i];
    }
    return sphere;
}

// Unit-distance graph on F_p^d: vertices in lexicographic order, x ~ x' iff
// q(x' - x) = 1. Vertex index of (x_1, ..., x_d) is its rank in lex order.
inline UGraph build_fp_graph(long long p, int d, const DiagForm& form,
                             long long budget = 1'000'000) {
    if (!is_prime(p)) throw std::invalid_argument("build_fp_graph: p must be prime");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= p;
        if (size > budget) throw std::invalid_argument("build_fp_graph: p^d exceeds budget");
    }
    auto sphere = unit_sphere_fp(p, d, form);
    UGraph g(static_cast<int>(size));
    g.labels.resize(size);
    std::vector<long long> x(d, 0);
    for (long long idx = 0; idx < size; ++idx) {
        std::string label;
        for (int i = 0; i < d; ++i) label += (i ? "," : "") + std::to_string(x[i]);
        g.labels[idx] = label;
        for (const auto& delta : sphere) {
            long long nidx = 0;
            for (int i = 0; i < d; ++i) nidx = nidx * p + (x[i] + delta[i]) % p;
            if (idx < nidx) g.add_edge(static_cast<int>(idx), static_cast<int>(nidx));
        }
        int i = d - 1;
        while (i >= 0 && x[i] == p - 1) { x[i] = 0; --i; }
        if (i >= 0) ++x[i];
    }
    g.finalize();
    return g;
}

// ---- exact graphs over number-field points ----

template <typename K>
UGraph build_exact_graph(const std::vector<PointT<K>>& points, const DiagForm& form) {
    UGraph g(static_cast<int>(points.size()));
    g.labels.reserve(points.size());
    for (const auto& pt : points) g.labels.push_back(serialize_point(pt));
    if (points.empty()) return g;
    K one = one_like(points[0][0]);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            PointT<K> delta;
            delta.reserve(points[i].size());
            for (std::size_t t = 0; t < points[i].size(); ++t)
                delta.push_back(points[j][t] - points[i][t]);
            if (form_value(form, delta) == one)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    g.finalize();
    return g;
}

// Rational parametrization of the unit circle: t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
template <typename K>
PointT<K> circle_param(const K& t) {
    K one = one_like(t);
    K den = one + t * t;
    if (den == zero_like(t))
        throw std::invalid_argument("circle_param: 1 + t^2 = 0");
    K x = (one - t * t) / den;
    K y = (t + t) / den;
    return {x, y};
}

// 2x2 matrix over the scalar field, row-major.
template <typename K>
struct Mat2 {
    K a, b, c, d;  // rows (a b; c d)

    PointT<K> apply(const PointT<K>& v) const {
        if (v.size() != 2) throw std::invalid_argument("Mat2::apply expects dimension 2");
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }

    Mat2<K> transpose() const { return {a, c, b, d}; }
};

// Rotation taking a unit vector v to (1, 0): rows (v1 v2; -v2 v1).
// Preserves x1^2 + x2^2 and has determinant 1.
template <typename K>
Mat2<K> rotate_to_e1(const PointT<K>& v) {
    if (v.size() != 2) throw std::invalid_argument("rotate_to_e1 expects dimension 2");
    K one = one_like(v[0]);
    if (!(v[0] * v[0] + v[1] * v[1] == one))
        throw std::invalid_argument("rotate_to_e1: vector is not on the unit circle");
    return Mat2<K>{v[0], v[1], zero_like(v[0]) - v[1], v[0]};
}

}  // namespace unitdist

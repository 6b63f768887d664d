#pragma once

#include "unitdist/biquad.hpp"
#include "unitdist/f11_table.hpp"
#include "unitdist/geometry.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/numtheory.hpp"
#include "unitdist/parse.hpp"
#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"
#include "unitdist/valuation.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitdist {

// ---- prime specifications ----

enum class FieldKind { Q, Quad, BiQuad };

struct FieldDesc {
    FieldKind kind = FieldKind::Q;
    long long m = 0;          // Quad
    long long m1 = 0, m2 = 0; // BiQuad
};

enum class PrimeKind {
    Ramified,        // p | m exactly once; residue a + b sqrt(m) -> a mod p
    Split,           // m a nonzero square mod p; sqrt(m) -> Hensel root
    BiQuadRamified,  // p | m2, m1 a square mod p; sqrt(m1) -> root, sqrt(m2) -> 0
    ModSquare,       // rationals taken mod p^2
};

struct PrimeSpec {
    long long p = 0;
    FieldDesc field;
    PrimeKind kind = PrimeKind::ModSquare;
    long long root = 0;  // Split: s0 for sqrt(m); BiQuadRamified: s0 for sqrt(m1)
};

inline PrimeSpec prime_spec_ramified(long long m, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("prime spec: p must be prime");
    if (m % p != 0 || (m / p) % p == 0)
        throw std::invalid_argument("ramified spec requires p to divide m exactly once");
    return {p, {FieldKind::Quad, m, 0, 0}, PrimeKind::Ramified, 0};
}

inline PrimeSpec prime_spec_split(long long m, long long p,
                                  std::optional<long long> root = std::nullopt) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("split spec: p must be an odd prime");
    if (legendre(Int(m), p) != 1)
        throw std::invalid_argument("split spec requires m to be a nonzero square mod p");
    long long s0;
    if (root) {
        s0 = ((*root % p) + p) % p;
        if (mod_mul(s0, s0, p) != mod_reduce(Int(m), p))
            throw std::invalid_argument("split spec: root is not a square root of m mod p");
    } else {
        s0 = static_cast<long long>(hensel_sqrt(Int(m), p, 1));
    }
    return {p, {FieldKind::Quad, m, 0, 0}, PrimeKind::Split, s0};
}

inline PrimeSpec prime_spec_biquad_ramified(long long m1, long long m2, long long p,
                                            std::optional<long long> root = std::nullopt) {
    if (!is_prime(p)) throw std::invalid_argument("prime spec: p must be prime");
    if (m2 % p != 0 || (m2 / p) % p == 0)
        throw std::invalid_argument("biquad ramified spec requires p to divide m2 exactly once");
    if (legendre(Int(m1), p) != 1)
        throw std::invalid_argument("biquad ramified spec requires m1 to be a square mod p");
    long long s0;
    if (root) {
        s0 = ((*root % p) + p) % p;
        if (mod_mul(s0, s0, p) != mod_reduce(Int(m1), p))
            throw std::invalid_argument("biquad spec: root is not a square root of m1 mod p");
    } else {
        s0 = static_cast<long long>(hensel_sqrt(Int(m1), p, 1));
    }
    return {p, {FieldKind::BiQuad, 0, m1, m2}, PrimeKind::BiQuadRamified, s0};
}

inline PrimeSpec prime_spec_mod_square(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("prime spec: p must be prime");
    return {p, {FieldKind::Q, 0, 0, 0}, PrimeKind::ModSquare, 0};
}

// ---- anisotropy tests ----

inline bool anisotropic_fp(const DiagForm& form, long long p, long long budget = 1'000'000) {
    long long size = 1;
    for (int i = 0; i < form.dim(); ++i) {
        size *= p;
        if (size > budget) throw std::invalid_argument("anisotropic_fp: p^d exceeds budget");
    }
    std::vector<long long> v(form.dim(), 0);
    for (long long idx = 0; idx < size; ++idx) {
        long long q = 0;
        bool zero = true;
        for (int i = 0; i < form.dim(); ++i) {
            q = (q + (form.coeffs[i] % p + p) * (v[i] * v[i] % p)) % p;
            if (v[i] != 0) zero = false;
        }
        if (!zero && q == 0) return false;
        int i = form.dim() - 1;
        while (i >= 0 && v[i] == p - 1) { v[i] = 0; --i; }
        if (i >= 0) ++v[i];
    }
    return true;
}

// No solution of q(z) = 0 mod p^2 except with every z_i divisible by p.
inline bool anisotropic_mod_p2(const DiagForm& form, long long p, long long budget = 1'000'000) {
    long long p2 = p * p;
    long long size = 1;
    for (int i = 0; i < form.dim(); ++i) {
        size *= p2;
        if (size > budget) throw std::invalid_argument("anisotropic_mod_p2: p^(2d) exceeds budget");
    }
    std::vector<long long> v(form.dim(), 0);
    for (long long idx = 0; idx < size; ++idx) {
        long long q = 0;
        bool all_divisible = true;
        for (int i = 0; i < form.dim(); ++i) {
            q = (q + (form.coeffs[i] % p2 + p2) * (v[i] * v[i] % p2)) % p2;
            if (v[i] % p != 0) all_divisible = false;
        }
        if (!all_divisible && q == 0) return false;
        int i = form.dim() - 1;
        while (i >= 0 && v[i] == p2 - 1) { v[i] = 0; --i; }
        if (i >= 0) ++v[i];
    }
    return true;
}

// ---- choice-free coset representatives ----

inline Int int_mod_inv(Int a, const Int& m) {
    Int t = 0, new_t = 1;
    Int r = m, new_r = a % m;
    if (new_r < 0) new_r += m;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("int_mod_inv: not invertible");
    if (t < 0) t += m;
    return t;
}

// Representative of r modulo p-integral rationals: c / p^k with
// 0 <= c < p^k and k = -v_p(r); zero when r is already integral.
inline Rat class_representative(const Rat& r, long long p) {
    HalfVal v = rat_val(r, p);
    if (v.is_infinity() || v >= HalfVal::from_int(0)) return 0;
    long long k = -v.twice() / 2;
    Int pk = boost::multiprecision::pow(Int(p), static_cast<unsigned>(k));
    // r = A / (p^k B) in lowest terms; c = A * B^{-1} mod p^k.
    Int A = rat_num(r);
    Int B = rat_den(r) / pk;
    Int c = A % pk * int_mod_inv(B, pk) % pk;
    if (c < 0) c += pk;
    return make_rat(c, pk);
}

namespace detail_reduce {

// Hensel principal part: a rational congruent to a + b sqrt(m) modulo
// integral elements of the split-prime completion.
inline Rat split_principal_part(const QuadElem& x, long long p, long long root) {
    if (x.b == 0) return x.a;
    long long vb = rat_val(Rat(x.b), p).twice() / 2;
    int k = vb >= 0 ? 1 : static_cast<int>(-vb) + 1;
    Int sk = hensel_sqrt(Int(x.m), p, k, root);
    return x.a + x.b * Rat(sk);
}

}  // namespace detail_reduce

// Representative variants per prime specification. The result is always an
// element of the same field whose difference from r is integral at that prime.
inline QuadElem class_representative(const QuadElem& x, const PrimeSpec& spec) {
    if (spec.field.kind != FieldKind::Quad || spec.field.m != x.m)
        throw std::invalid_argument("class_representative: spec field mismatch");
    switch (spec.kind) {
        case PrimeKind::Ramified:
            if (spec.p == 2 && x.m == 2) {
                // Representative modulo { v >= -1/2 }: the b-part only needs
                // 2b to be integral.
                Rat rep_a = class_representative(x.a, 2);
                Rat rep_b = class_representative(Rat(2) * x.b, 2) / Rat(2);
                return {x.m, rep_a, rep_b};
            }
            return {x.m, class_representative(x.a, spec.p), class_representative(x.b, spec.p)};
        case PrimeKind::Split: {
            Rat pp = detail_reduce::split_principal_part(x, spec.p, spec.root);
            return {x.m, class_representative(pp, spec.p), 0};
        }
        default:
            throw std::invalid_argument("class_representative: unsupported spec kind for a quad element");
    }
}

// ---- residue-field reduction ----

namespace detail_reduce {

[[noreturn]] inline void non_integral(std::size_t coord, const std::string& val) {
    throw std::invalid_argument("coordinate " + std::to_string(coord + 1) +
                                " is not integral at the prime (valuation " + val + ")");
}

}  // namespace detail_reduce

// Rationals mod p^2 (ModSquare specs).
inline std::vector<long long> reduce_point(const PointT<Rat>& x, const PrimeSpec& spec) {
    if (spec.kind != PrimeKind::ModSquare || spec.field.kind != FieldKind::Q)
        throw std::invalid_argument("reduce_point: rational points need a ModSquare spec");
    long long p2 = spec.p * spec.p;
    std::vector<long long> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        HalfVal v = rat_val(x[i], spec.p);
        if (!v.is_infinity() && v < HalfVal::from_int(0))
            detail_reduce::non_integral(i, v.str());
        long long den = mod_reduce(rat_den(x[i]), p2);
        out.push_back(mod_mul(mod_reduce(rat_num(x[i]), p2), mod_inv(den, p2), p2));
    }
    return out;
}

inline std::vector<long long> reduce_point(const PointT<QuadElem>& x, const PrimeSpec& spec) {
    if (spec.field.kind != FieldKind::Quad)
        throw std::invalid_argument("reduce_point: spec does not describe a quadratic field");
    std::vector<long long> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].m != spec.field.m)
            throw std::invalid_argument("reduce_point: coordinate field mismatch");
        if (spec.kind == PrimeKind::Ramified) {
            HalfVal v = quad_val_ramified(x[i], spec.p);
            if (!v.is_infinity() && v < HalfVal::from_int(0))
                detail_reduce::non_integral(i, v.str());
            out.push_back(x[i].a == 0 ? 0 : rat_mod(x[i].a, spec.p));
        } else if (spec.kind == PrimeKind::Split) {
            HalfVal v = quad_val_split(x[i], spec.p, spec.root);
            if (!v.is_infinity() && v < HalfVal::from_int(0))
                detail_reduce::non_integral(i, v.str());
            Rat pp = detail_reduce::split_principal_part(x[i], spec.p, spec.root);
            out.push_back(pp == 0 ? 0 : rat_mod(pp, spec.p));
        } else {
            throw std::invalid_argument("reduce_point: unsupported spec kind for quad coordinates");
        }
    }
    return out;
}

inline std::vector<long long> reduce_point(const PointT<BiQuadElem>& x, const PrimeSpec& spec) {
    if (spec.kind != PrimeKind::BiQuadRamified || spec.field.kind != FieldKind::BiQuad)
        throw std::invalid_argument("reduce_point: biquad points need a BiQuadRamified spec");
    std::vector<long long> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].m1 != spec.field.m1 || x[i].m2 != spec.field.m2)
            throw std::invalid_argument("reduce_point: coordinate field mismatch");
        for (const Rat* comp : {&x[i].a, &x[i].b, &x[i].c, &x[i].d}) {
            HalfVal v = rat_val(*comp, spec.p);
            if (!v.is_infinity() && v < HalfVal::from_int(0))
                detail_reduce::non_integral(i, v.str());
        }
        long long u = x[i].a == 0 ? 0 : rat_mod(x[i].a, spec.p);
        long long w = x[i].b == 0 ? 0 : rat_mod(x[i].b, spec.p);
        out.push_back((u + mod_mul(w, spec.root, spec.p)) % spec.p);
    }
    return out;
}

// ---- edge integrality: the soundness condition behind the oracles, as a check ----

namespace detail_reduce {

inline HalfVal coordinate_valuation(const Rat& r, const PrimeSpec& spec) {
    return rat_val(r, spec.p);
}
inline HalfVal coordinate_valuation(const QuadElem& x, const PrimeSpec& spec) {
    if (spec.kind == PrimeKind::Ramified) return quad_val_ramified(x, spec.p);
    if (spec.kind == PrimeKind::Split) return quad_val_split(x, spec.p, spec.root);
    throw std::invalid_argument("no valuation for this spec kind on quad elements");
}
inline HalfVal coordinate_valuation(const BiQuadElem& x, const PrimeSpec& spec) {
    // Componentwise rational bound, sufficient for the ramified biquad use.
    HalfVal v = HalfVal::infinity();
    for (const Rat* comp : {&x.a, &x.b, &x.c, &x.d}) v = min(v, rat_val(*comp, spec.p));
    return v;
}

}  // namespace detail_reduce

// True iff every coordinate of x' - x is integral at the given prime; the threshold
// drops to -1/2 for the ramified prime of Q(sqrt 2), where unit vectors may
// have half-integral valuation.
template <typename K>
bool edge_integrality_check(const PointT<K>& x, const PointT<K>& x2, const PrimeSpec& spec) {
    if (x.size() != x2.size()) throw std::invalid_argument("dimension mismatch");
    PointT<K> delta;
    delta.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) delta.push_back(x2[i] - x[i]);
    DiagForm form = DiagForm::euclidean(static_cast<int>(x.size()));
    if (!(form_value(form, delta) == one_like(delta[0])))
        throw std::invalid_argument("edge_integrality_check: pair is not at unit distance");
    HalfVal threshold = HalfVal::from_int(0);
    if (spec.kind == PrimeKind::Ramified && spec.p == 2 && spec.field.m == 2)
        threshold = HalfVal::from_half(-1);
    for (const K& c : delta) {
        HalfVal v = detail_reduce::coordinate_valuation(c, spec);
        if (v < threshold) return false;
    }
    return true;
}

// ---- residue colorings and total coloring oracles ----

enum class OracleId { Q2COLOR, SQRT2_2COLOR, SQRT3_3COLOR, SQRT7_3COLOR, SQRTNEG5_3COLOR, BIQUAD_5COLOR };

inline int oracle_colors(OracleId id) {
    switch (id) {
        case OracleId::Q2COLOR:
        case OracleId::SQRT2_2COLOR: return 2;
        case OracleId::SQRT3_3COLOR:
        case OracleId::SQRT7_3COLOR:
        case OracleId::SQRTNEG5_3COLOR: return 3;
        case OracleId::BIQUAD_5COLOR: return 5;
    }
    throw std::logic_error("unreachable");
}

inline PrimeSpec oracle_spec(OracleId id) {
    switch (id) {
        case OracleId::Q2COLOR: return prime_spec_mod_square(2);
        case OracleId::SQRT2_2COLOR: return prime_spec_ramified(2, 2);
        case OracleId::SQRT3_3COLOR: return prime_spec_ramified(3, 3);
        case OracleId::SQRT7_3COLOR: return prime_spec_split(7, 3, 2);
        case OracleId::SQRTNEG5_3COLOR: return prime_spec_split(-5, 3, 2);
        case OracleId::BIQUAD_5COLOR: return prime_spec_biquad_ramified(3, 11, 11, 5);
    }
    throw std::logic_error("unreachable");
}

// Klein-four coordinate classes for the Q(sqrt 2) quotient: after dropping
// the representative, a coordinate a + b sqrt(2) has v >= -1/2; its class is
// (a mod 2, 2b mod 2) encoded 0, 1, U, V as 0..3.
inline int sqrt2_coordinate_class(const QuadElem& y) {
    long long eps = y.a == 0 ? 0 : rat_mod(y.a, 2);
    Rat twob = Rat(2) * y.b;
    long long del = twob == 0 ? 0 : rat_mod(twob, 2);
    return static_cast<int>(eps + 2 * del);
}

inline const char* sqrt2_class_name(int cls) {
    static const char* names[4] = {"0", "1", "U", "V"};
    return names[cls];
}

// Proper 2-coloring of the 16-vertex quotient graph, indexed by the classes
// of the two coordinates.
inline constexpr int kSqrt2QuotientColor[4][4] = {
    {0, 1, 1, 0},
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {1, 0, 0, 1},
};

struct OracleTrace {
    std::vector<std::string> representative;  // per coordinate
    std::vector<std::string> reduced;         // residue point / classes
    int color = 0;
};

inline int color_oracle(OracleId id, const PointT<Rat>& x, OracleTrace* trace = nullptr) {
    if (id != OracleId::Q2COLOR)
        throw std::invalid_argument("this oracle does not take rational points");
    if (x.size() != 2) throw std::invalid_argument("oracle expects dimension 2");
    PrimeSpec spec = oracle_spec(id);
    PointT<Rat> shifted;
    for (const Rat& c : x) {
        Rat rep = class_representative(c, spec.p);
        if (trace) trace->representative.push_back(serialize_rat(rep));
        shifted.push_back(c - rep);
    }
    auto residues = reduce_point(shifted, spec);  // mod 4
    int color = static_cast<int>((residues[0] + residues[1]) % 2);
    if (trace) {
        for (long long r : residues) trace->reduced.push_back(std::to_string(r));
        trace->color = color;
    }
    return color;
}

inline int color_oracle(OracleId id, const PointT<QuadElem>& x, OracleTrace* trace = nullptr) {
    if (x.size() != 2) throw std::invalid_argument("oracle expects dimension 2");
    PrimeSpec spec = oracle_spec(id);
    if (spec.field.kind != FieldKind::Quad || x[0].m != spec.field.m || x[1].m != spec.field.m)
        throw std::invalid_argument("point field does not match the oracle");
    if (id == OracleId::SQRT2_2COLOR) {
        int cls[2];
        for (int i = 0; i < 2; ++i) {
            QuadElem rep = class_representative(x[i], spec);
            if (trace) trace->representative.push_back(serialize_quad(rep));
            cls[i] = sqrt2_coordinate_class(x[i] - rep);
        }
        int color = kSqrt2QuotientColor[cls[0]][cls[1]];
        if (trace) {
            trace->reduced.push_back(sqrt2_class_name(cls[0]));
            trace->reduced.push_back(sqrt2_class_name(cls[1]));
            trace->color = color;
        }
        return color;
    }
    if (id != OracleId::SQRT3_3COLOR && id != OracleId::SQRT7_3COLOR &&
        id != OracleId::SQRTNEG5_3COLOR)
        throw std::invalid_argument("this oracle does not take quadratic-field points");
    PointT<QuadElem> shifted;
    for (const QuadElem& c : x) {
        QuadElem rep = class_representative(c, spec);
        if (trace) trace->representative.push_back(serialize_quad(rep));
        shifted.push_back(c - rep);
    }
    auto residues = reduce_point(shifted, spec);
    int color = static_cast<int>((residues[0] + residues[1]) % 3);
    if (trace) {
        for (long long r : residues) trace->reduced.push_back(std::to_string(r));
        trace->color = color;
    }
    return color;
}

inline int color_oracle(OracleId id, const PointT<BiQuadElem>& x, OracleTrace* trace = nullptr) {
    if (id != OracleId::BIQUAD_5COLOR)
        throw std::invalid_argument("this oracle does not take biquadratic points");
    if (x.size() != 2) throw std::invalid_argument("oracle expects dimension 2");
    PrimeSpec spec = oracle_spec(id);
    if (x[0].m1 != spec.field.m1 || x[0].m2 != spec.field.m2 ||
        x[1].m1 != spec.field.m1 || x[1].m2 != spec.field.m2)
        throw std::invalid_argument("point field does not match the oracle");
    // Partial domain: components must already be 11-integral; no
    // representative subtraction is performed.
    auto residues = reduce_point(x, spec);
    int color = kF11Table[residues[0]][residues[1]];
    if (trace) {
        trace->representative = {"0", "0"};
        for (long long r : residues) trace->reduced.push_back(std::to_string(r));
        trace->color = color;
    }
    return color;
}

// ---- reduction as a graph homomorphism ----

struct HomReport {
    UGraph source;
    UGraph image;
    std::vector<int> vertex_map;       // source index -> image index
    std::size_t edges_checked = 0;
    std::size_t violations = 0;        // unit edges whose images are non-adjacent mod p
};

template <typename K>
HomReport reduce_graph_hom(const std::vector<PointT<K>>& points, const PrimeSpec& spec,
                           const DiagForm& form) {
    HomReport rep;
    rep.source = build_exact_graph(points, form);
    std::vector<std::vector<long long>> residues;
    residues.reserve(points.size());
    for (const auto& pt : points) residues.push_back(reduce_point(pt, spec));

    std::map<std::vector<long long>, int> index_of;
    for (const auto& r : residues)
        index_of.emplace(r, 0);
    int next = 0;
    for (auto& [key, idx] : index_of) idx = next++;

    rep.image = UGraph(next);
    rep.image.labels.resize(next);
    for (const auto& [key, idx] : index_of) {
        std::string label;
        for (std::size_t i = 0; i < key.size(); ++i)
            label += (i ? "," : "") + std::to_string(key[i]);
        rep.image.labels[idx] = label;
    }
    rep.vertex_map.reserve(points.size());
    for (const auto& r : residues) rep.vertex_map.push_back(index_of.at(r));

    // Residues live mod p, except for ModSquare specs where they live mod p^2
    // and the edge condition is likewise taken mod p^2.
    long long modulus = spec.kind == PrimeKind::ModSquare ? spec.p * spec.p : spec.p;
    for (auto [i, j] : rep.source.edges) {
        ++rep.edges_checked;
        long long q = 0;
        for (std::size_t t = 0; t < residues[i].size(); ++t) {
            long long d = (residues[j][t] - residues[i][t]) % modulus;
            q = (q + (form.coeffs[t] % modulus + modulus) * (d * d % modulus)) % modulus;
        }
        if (q != 1) {
            ++rep.violations;
        } else if (rep.vertex_map[i] != rep.vertex_map[j]) {
            rep.image.add_edge(rep.vertex_map[i], rep.vertex_map[j]);
        }
    }
    rep.image.finalize();
    return rep;
}

}  // namespace unitdist

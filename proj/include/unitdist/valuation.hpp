#pragma once

#include "unitdist/halfval.hpp"
#include "unitdist/numtheory.hpp"
#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"

#include <optional>
#include <stdexcept>

namespace unitdist {

// p-adic valuation on Q, as a HalfVal (always integer-valued here).
inline HalfVal rat_val(const Rat& r, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("rat_val: p must be prime");
    if (r == 0) return HalfVal::infinity();
    return HalfVal::from_int(int_val(rat_num(r), p) - int_val(rat_den(r), p));
}

// Valuation at the ramified prime above p, normalized so v(sqrt m) = 1/2.
// Requires p to divide m exactly once; then v(a + b sqrt m) =
// min(v_p(a), v_p(b) + 1/2), and the two arguments are never equal.
inline HalfVal quad_val_ramified(const QuadElem& x, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("quad_val_ramified: p must be prime");
    if (x.m % p != 0 || (x.m / p) % p == 0)
        throw std::invalid_argument("quad_val_ramified: p must divide m exactly once");
    HalfVal va = HalfVal::infinity();
    HalfVal vb = HalfVal::infinity();
    if (x.a != 0) va = rat_val(x.a, p);
    if (x.b != 0) vb = HalfVal::from_half(rat_val(x.b, p).twice() + 1);
    return min(va, vb);
}

// Valuation at a degree-1 prime above p where m splits (m a nonzero square
// mod p, p odd). The prime is selected by the residue s0 of sqrt(m) mod p;
// by default s0 is the least root in {1, ..., p-1}. Computed as
// v_p(a + b*s_k) for a Hensel lift s_k of s0, escalating the precision k
// until the answer is certainly unaffected by the remaining error, which
// happens as soon as v_p(a + b*s_k) < v_p(b) + k.
inline HalfVal quad_val_split(const QuadElem& x, long long p,
                              std::optional<long long> root_mod_p = std::nullopt,
                              int precision_cap = 1 << 20) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("quad_val_split: p must be an odd prime");
    if (legendre(Int(x.m), p) != 1)
        throw std::invalid_argument("quad_val_split: m must be a nonzero square mod p");
    if (x.is_zero()) return HalfVal::infinity();
    if (x.b == 0) return rat_val(x.a, p);

    long long vb = rat_val(Rat(x.b), p).twice() / 2;
    int k = vb >= 0 ? 1 : static_cast<int>(-vb) + 1;
    while (true) {
        Int s = hensel_sqrt(Int(x.m), p, k, root_mod_p);
        Rat approx = x.a + x.b * Rat(s);
        if (approx != 0) {
            long long v = rat_val(approx, p).twice() / 2;
            if (v < vb + k) return HalfVal::from_int(v);
        }
        if (k >= precision_cap)
            throw std::runtime_error("quad_val_split: precision cap exceeded");
        k *= 2;
    }
}

}  // namespace unitdist

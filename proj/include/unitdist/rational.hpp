#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace unitdist {

// Exact scalars. Rat is kept in lowest terms with positive denominator by
// the backend, which is exactly the canonical form we require.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

// Floor square root; exactness must be checked by the caller.
inline Int int_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("int_sqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = int_sqrt(n);
    return r * r == n;
}

// Exact rational square root, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = rat_num(r), d = rat_den(r);
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return make_rat(int_sqrt(n), int_sqrt(d));
}

// ---- modular helpers over word-sized moduli ----

// Reduce an arbitrary-precision integer into [0, m).
inline long long mod_reduce(const Int& a, long long m) {
    if (m <= 0) throw std::invalid_argument("nonpositive modulus");
    Int r = a % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
}

inline long long mod_mul(long long a, long long b, long long m) {
    return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

inline long long mod_pow(long long base, long long exp, long long m) {
    long long result = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline long long mod_inv(long long a, long long m) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = a % m;
    if (new_r < 0) new_r += m;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("mod_inv: argument not invertible");
    if (t < 0) t += m;
    return t;
}

// Residue of a p-integral rational mod p.
inline long long rat_mod(const Rat& r, long long p) {
    long long den = mod_reduce(rat_den(r), p);
    if (den == 0)
        throw std::invalid_argument("rat_mod: denominator divisible by modulus");
    long long num = mod_reduce(rat_num(r), p);
    return mod_mul(num, mod_inv(den, p), p);
}

}  // namespace unitdist

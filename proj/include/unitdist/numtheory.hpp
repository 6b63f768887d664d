#pragma once

#include "unitdist/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unitdist {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin; these bases cover all 64-bit inputs.
    long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        long long x = mod_pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Legendre symbol (a/p) for odd prime p: 0, 1, or -1.
inline int legendre(const Int& a, long long p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    long long r = mod_reduce(a, p);
    if (r == 0) return 0;
    long long s = mod_pow(r, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

// Exponent of p in n (n != 0).
inline long long int_val(Int n, long long p) {
    if (n == 0) throw std::invalid_argument("int_val of zero");
    long long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// Trial-division factorization, adequate for the word-sized inputs used here.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n <= 0) throw std::invalid_argument("factorize expects a positive integer");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long long squarefree_part(long long n) {
    if (n == 0) throw std::invalid_argument("squarefree_part of zero");
    long long sign = n < 0 ? -1 : 1;
    long long m = n < 0 ? -n : n;
    long long out = 1;
    for (auto [p, e] : factorize(m))
        if (e % 2 == 1) out *= p;
    return sign * out;
}

// Square roots of n mod an odd prime p, via Tonelli-Shanks. Empty if n is a
// non-residue; {0} if p | n.
inline std::vector<long long> sqrt_mod_p(const Int& n, long long p) {
    long long a = mod_reduce(n, p);
    if (a == 0) return {0};
    if (legendre(a, p) != 1) return {};
    long long root;
    if (p % 4 == 3) {
        root = mod_pow(a, (p + 1) / 4, p);
    } else {
        long long q = p - 1;
        int s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        long long z = 2;
        while (legendre(z, p) != -1) ++z;
        long long m = s;
        long long c = mod_pow(z, q, p);
        long long t = mod_pow(a, q, p);
        root = mod_pow(a, (q + 1) / 2, p);
        while (t != 1) {
            long long i = 0, tt = t;
            while (tt != 1) { tt = mod_mul(tt, tt, p); ++i; }
            long long b = mod_pow(c, 1LL << (m - i - 1), p);
            root = mod_mul(root, b, p);
            c = mod_mul(b, b, p);
            t = mod_mul(t, c, p);
            m = i;
        }
    }
    long long other = p - root;
    if (root > other) std::swap(root, other);
    if (root == other) return {root};
    return {root, other};
}

// Hensel lift: square root of n mod p^k, for odd p not dividing n, starting
// from a chosen residue mod p (default: the smaller of the two roots). The
// returned value lies in [0, p^k) and its mod-p reduction is the chosen seed.
inline Int hensel_sqrt(const Int& n, long long p, int k,
                       std::optional<long long> root_mod_p = std::nullopt) {
    if (k < 1) throw std::invalid_argument("hensel_sqrt: k must be >= 1");
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("hensel_sqrt: p must be an odd prime");
    if (mod_reduce(n, p) == 0)
        throw std::invalid_argument("hensel_sqrt: p divides n");
    auto roots = sqrt_mod_p(n, p);
    if (roots.empty())
        throw std::invalid_argument("hensel_sqrt: n is not a square mod p");
    long long seed = roots.front();
    if (root_mod_p) {
        long long want = *root_mod_p % p;
        if (want < 0) want += p;
        bool ok = false;
        for (long long r : roots)
            if (r == want) { seed = r; ok = true; }
        if (!ok) throw std::invalid_argument("hensel_sqrt: given residue is not a root mod p");
    }
    Int x = seed;
    Int pk = p;
    for (int i = 1; i < k; ++i) {
        Int next_pk = pk * p;
        // x' = x - (x^2 - n) / (2x) mod p^(i+1)
        Int f = (x * x - n) % next_pk;
        if (f < 0) f += next_pk;
        Int inv2x = mod_inv(mod_reduce(2 * x, p), p);
        Int t = (f / pk) * inv2x % p;
        x = (x - t * pk) % next_pk;
        if (x < 0) x += next_pk;
        pk = next_pk;
    }
    return x;
}

// Quadratic-residue test for a in {3, 11} via the closed-form congruence
// conditions, instead of Euler's criterion. Requires q odd prime, q not
// dividing a.
inline bool residue_rule(long long a, long long q) {
    if (q == 2 || !is_prime(q))
        throw std::invalid_argument("residue_rule: q must be an odd prime");
    if (q % a == 0)
        throw std::invalid_argument("residue_rule: q divides a (ramified case)");
    if (a == 3) {
        long long r = q % 12;
        return r == 1 || r == 11;
    }
    if (a == 11) {
        long long r = q % 44;
        for (long long c : {1LL, 9LL, 5LL, 7LL, 19LL})
            if (r == c || r == 44 - c) return true;
        return false;
    }
    throw std::invalid_argument("residue_rule: only a = 3 and a = 11 supported");
}

enum class QrStatus { Residue, NonResidue, Ramified };

inline const char* qr_status_str(QrStatus s) {
    switch (s) {
        case QrStatus::Residue: return "residue";
        case QrStatus::NonResidue: return "nonresidue";
        case QrStatus::Ramified: return "ramified";
    }
    return "?";
}

struct PrimePredicateReport {
    long long p = 0;
    bool mod4_is_3 = false;
    std::vector<std::pair<long long, QrStatus>> qr;  // status per requested value
};

// Enumerates the odd primes p <= limit that satisfy every requested
// criterion: p = 3 (mod 4) when asked, and each listed a a nonzero square
// mod p. A prime dividing a counts as failing that criterion (ramified).
inline std::vector<PrimePredicateReport> scan_embedding_primes(bool require_mod4_3,
                                                               const std::vector<long long>& require_qr,
                                                               long long limit) {
    if (limit < 2) throw std::invalid_argument("scan_embedding_primes: limit must be >= 2");
    std::vector<PrimePredicateReport> out;
    for (long long p = 3; p <= limit; p += 2) {
        if (!is_prime(p)) continue;
        PrimePredicateReport rep;
        rep.p = p;
        rep.mod4_is_3 = (p % 4 == 3);
        bool pass = !require_mod4_3 || rep.mod4_is_3;
        for (long long a : require_qr) {
            QrStatus s;
            int leg = legendre(Int(a), p);
            if (leg == 0) s = QrStatus::Ramified;
            else s = (leg == 1) ? QrStatus::Residue : QrStatus::NonResidue;
            rep.qr.emplace_back(a, s);
            pass = pass && s == QrStatus::Residue;
        }
        if (pass) out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace unitdist

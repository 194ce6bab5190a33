// Exact integer utilities on top of GMP: primality, factorization,
// square-free parts, and p-adic valuations.
//
// Factorization uses trial division for small factors followed by Brent's
// variant of Pollard's rho with GMP's Miller–Rabin test to certify the
// pieces.  The integers arising in this library are determinants and
// discriminants of small matrices, so this is comfortably fast.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "gwcor/errors.hpp"

namespace gwcor {

inline bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

inline mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    return (a * b) % n;
}

// Brent's cycle-finding variant of Pollard's rho.  Returns a nontrivial
// factor of n (n must be composite, odd, and > 1).
inline mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (true) {
        mpz_class y = rng.get_z_range(n - 1) + 1;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class m = 128;
        mpz_class g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = std::min(m, mpz_class(r - k));
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, abs(x - y), n);
                }
                mpz_class d;
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                g = d;
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one squaring at a time.
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                mpz_class d;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                g = d;
            }
        }
        if (g != n) return g;
        // Rare failure: retry with a fresh constant.
        ++seed;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // Trial division by small primes first.
    static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                            31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                            73, 79, 83, 89, 97};
    for (unsigned p : small_primes) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect powers split cheaply; otherwise run rho.
    mpz_class f = pollard_brent(n, 0xC0FFEEul);
    factor_into(f, out);
    factor_into(n / f, out);
}

} // namespace detail

// Prime factorization of |n| (n must be nonzero); the sign is dropped.
inline std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    require(n != 0, "factorize: argument must be nonzero");
    std::map<mpz_class, unsigned> out;
    detail::factor_into(abs(n), out);
    return out;
}

// Square-free part of a nonzero integer, carrying the sign of n:
// n = squarefree_part(n) * (square).
inline mpz_class squarefree_part(const mpz_class& n) {
    require(n != 0, "squarefree_part: argument must be nonzero");
    mpz_class result = (n < 0) ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) result *= p;
    return result;
}

// Exponent of p in n (n nonzero, p prime >= 2).
inline unsigned p_adic_valuation(mpz_class n, const mpz_class& p) {
    require(n != 0, "p_adic_valuation: argument must be nonzero");
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

// Odd primes dividing n (n nonzero); 2 and the sign are ignored.
inline std::vector<mpz_class> odd_prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (const auto& [p, e] : factorize(n))
        if (p != 2) out.push_back(p);
    return out;
}

// Primality check for machine-word moduli used by the prime-field type.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    return is_probable_prime(mpz_class(static_cast<unsigned long>(n)));
}

} // namespace gwcor

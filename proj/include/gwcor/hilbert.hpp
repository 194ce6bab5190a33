// Hilbert symbols (a, b)_v over the rationals, v ranging over the real place
// and the finite primes.  Everything is computed from exact valuations,
// Legendre symbols, and residues mod 8; the classical product formula over
// all places ties the values together and is exercised by the tests.

#pragma once

#include <gmpxx.h>

#include "gwcor/errors.hpp"
#include "gwcor/intmath.hpp"

namespace gwcor {

// A place of Q: either the real (archimedean) place or a finite prime.
struct Place {
    bool real = false;
    mpz_class p = 0;

    static Place at_real() { return Place{true, 0}; }
    static Place at_prime(mpz_class prime) {
        require(prime >= 2 && is_probable_prime(prime),
                "finite place must be a prime");
        return Place{false, std::move(prime)};
    }

    bool operator==(const Place& o) const { return real == o.real && p == o.p; }
    bool operator<(const Place& o) const {
        if (real != o.real) return real; // real place sorts first
        return p < o.p;
    }
};

namespace detail {

// v_p of a nonzero rational.
inline long q_valuation(const mpq_class& a, const mpz_class& p) {
    return static_cast<long>(p_adic_valuation(a.get_num(), p)) -
           static_cast<long>(p_adic_valuation(a.get_den(), p));
}

// Residue of a p-adic unit a modulo m (m = p or m = 8), computed as
// num * den^{-1} mod m.  The denominator is invertible because a is a unit.
inline mpz_class unit_residue(const mpq_class& a, const mpz_class& m) {
    mpz_class num = a.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = a.get_den() % m;
    mpz_class den_inv;
    const int ok = mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    check(ok != 0, "residue denominator not invertible");
    return (num * den_inv) % m;
}

// Legendre symbol of a p-adic unit modulo an odd prime.
inline int unit_legendre(const mpq_class& a, const mpz_class& p) {
    const mpz_class r = unit_residue(a, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

inline int eps_mod2(const mpz_class& x) { // (x-1)/2 mod 2 for odd x
    return mpz_class((x - 1) / 2).get_si() & 1;
}
inline int omega_mod2(const mpz_class& x) { // (x^2-1)/8 mod 2 for odd x
    return mpz_class(((x * x) - 1) / 8).get_si() & 1;
}

} // namespace detail

// (a, b)_v in {+1, -1}: whether z^2 = a x^2 + b y^2 has a nontrivial solution
// over the completion at v.  a and b must be nonzero.
inline int hilbert_symbol(mpq_class a, mpq_class b, const Place& v) {
    // Raw mpq_class values built from a numerator/denominator pair are not
    // reduced automatically, and gmpxx arithmetic assumes reduced operands.
    a.canonicalize();
    b.canonicalize();
    require(a != 0 && b != 0, "Hilbert symbol requires nonzero arguments");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;

    const mpz_class& p = v.p;
    if (p == 2) {
        const long alpha = detail::q_valuation(a, 2);
        const long beta = detail::q_valuation(b, 2);
        mpq_class u = a, w = b;
        for (long i = 0; i < alpha; ++i) u /= 2;
        for (long i = alpha; i < 0; ++i) u *= 2;
        for (long i = 0; i < beta; ++i) w /= 2;
        for (long i = beta; i < 0; ++i) w *= 2;
        const mpz_class u8 = detail::unit_residue(u, 8);
        const mpz_class w8 = detail::unit_residue(w, 8);
        int e = detail::eps_mod2(u8) * detail::eps_mod2(w8);
        e += static_cast<int>(alpha & 1) * detail::omega_mod2(w8);
        e += static_cast<int>(beta & 1) * detail::omega_mod2(u8);
        return (e & 1) ? -1 : 1;
    }

    // Odd prime: (a,b)_p = (-1)^{alpha beta eps(p)} (u|p)^beta (w|p)^alpha.
    const long alpha = detail::q_valuation(a, p);
    const long beta = detail::q_valuation(b, p);
    mpq_class u = a, w = b;
    for (long i = 0; i < alpha; ++i) u /= p;
    for (long i = alpha; i < 0; ++i) u *= p;
    for (long i = 0; i < beta; ++i) w /= p;
    for (long i = beta; i < 0; ++i) w *= p;
    int sign = 1;
    if ((alpha & 1) && (beta & 1) && detail::eps_mod2(p)) sign = -sign;
    if (beta & 1) sign *= detail::unit_legendre(u, p);
    if (alpha & 1) sign *= detail::unit_legendre(w, p);
    return sign;
}

} // namespace gwcor

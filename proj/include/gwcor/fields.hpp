// Exact coefficient fields.
//
// Every algorithm in this library is generic over a *field context*: a small
// value type K with a nested element type K::Elem and methods for the field
// operations.  Two contexts are provided:
//
//   * RationalField — the rationals, backed by GMP's mpq_class (always
//     canonical: reduced, positive denominator).
//
//   * PrimeField    — Z/p for an odd prime p >= 3.  p = 2 is rejected at
//     construction: the quadratic-form theory implemented here needs
//     2 to be invertible.  Elements are machine words; the modulus is
//     capped below 2^31 so products never overflow.
//
// Floating point appears nowhere: all arithmetic is exact.

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gwcor/errors.hpp"
#include "gwcor/intmath.hpp"

namespace gwcor {

// ---------------------------------------------------------------------------
// RationalField
// ---------------------------------------------------------------------------

struct RationalField {
    using Elem = mpq_class;

    static constexpr bool is_finite = false;

    std::string name() const { return "Q"; }
    unsigned long characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        check(a != 0, "division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // In a field every division by a nonzero element is exact.
    Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    // A rational is a square iff it is positive and both the (coprime)
    // numerator and denominator are perfect squares.
    bool is_square(const Elem& a) const {
        if (a < 0) return false;
        if (a == 0) return true;
        return mpz_perfect_square_p(a.get_num().get_mpz_t()) &&
               mpz_perfect_square_p(a.get_den().get_mpz_t());
    }

    // Canonical representative of the square class of a nonzero rational:
    // the square-free integer with the same sign (num*den has the same class
    // as num/den).
    Elem square_class(const Elem& a) const {
        require(a != 0, "square class of zero is undefined");
        return Elem(squarefree_part(a.get_num() * a.get_den()));
    }

    bool same_square_class(const Elem& a, const Elem& b) const {
        require(a != 0 && b != 0, "square class of zero is undefined");
        return is_square(a * b);
    }

    std::string str(const Elem& a) const { return a.get_str(); }

    Elem parse(const std::string& s) const {
        mpq_class v;
        if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
            throw input_error("cannot parse rational scalar: '" + s + "'");
        if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
            throw input_error("rational scalar with zero denominator: '" + s + "'");
        v.canonicalize();
        return v;
    }
};

inline bool same_field(const RationalField&, const RationalField&) { return true; }

// ---------------------------------------------------------------------------
// PrimeField
// ---------------------------------------------------------------------------

class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr bool is_finite = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        require(p >= 3, "prime-field modulus must be an odd prime >= 3 (got " +
                            std::to_string(p) + ")");
        require(p < (std::uint64_t(1) << 31),
                "prime-field modulus must be below 2^31");
        require(is_prime_u64(p), "prime-field modulus must be prime (got " +
                                     std::to_string(p) + ")");
    }

    std::string name() const { return "F" + std::to_string(p_); }
    std::uint64_t modulus() const { return p_; }
    unsigned long characteristic() const { return static_cast<unsigned long>(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_long(long n) const {
        long long r = static_cast<long long>(n) % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        check(a % p_ != 0, "division by zero in " + name());
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // In a field every division by a nonzero element is exact.
    Elem exact_div(Elem a, Elem b) const { return div(a, b); }

    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    // Legendre symbol: +1 for nonzero squares, -1 for nonsquares, 0 for 0.
    int legendre(Elem a) const {
        if (a % p_ == 0) return 0;
        Elem r = pow(a, (p_ - 1) / 2);
        return r == 1 ? 1 : -1;
    }

    bool is_square(Elem a) const { return legendre(a) >= 0; }

    // Smallest quadratic non-residue; the canonical representative of the
    // nontrivial square class.
    Elem least_nonresidue() const {
        for (Elem u = 2; u < p_; ++u)
            if (legendre(u) == -1) return u;
        throw math_check_error("no quadratic non-residue found mod " +
                               std::to_string(p_));
    }

    // Canonical square-class representative: 1 for squares, the least
    // non-residue otherwise.
    Elem square_class(Elem a) const {
        require(a % p_ != 0, "square class of zero is undefined");
        return legendre(a) == 1 ? 1 : least_nonresidue();
    }

    bool same_square_class(Elem a, Elem b) const {
        require(a % p_ != 0 && b % p_ != 0, "square class of zero is undefined");
        return legendre(mul(a, b)) == 1;
    }

    std::string str(Elem a) const { return std::to_string(a % p_); }

    Elem parse(const std::string& s) const {
        // Accept an optional sign and a decimal integer of any size; the
        // value is reduced modulo p.
        mpz_class v;
        if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
            throw input_error("cannot parse scalar over " + name() + ": '" + s + "'");
        mpz_class m = v % mpz_class(static_cast<unsigned long>(p_));
        if (m < 0) m += static_cast<unsigned long>(p_);
        return static_cast<Elem>(m.get_ui());
    }

private:
    std::uint64_t p_;
};

inline bool same_field(const PrimeField& a, const PrimeField& b) {
    return a.modulus() == b.modulus();
}

} // namespace gwcor

// Finite quotient algebras k[t]/(N) and their residue pairings.
//
// A nonzero Laurent polynomial factors uniquely as c * t^v * N with N monic
// and N(0) != 0.  On the quotient algebra k[t]/(N) two scalar functionals
// are provided:
//
//   * coefficient  — a |-> (1/c) * [t^{m-1}] (t^{-v} * a mod N).  This is the
//     duality-consistent functional: its Gram matrix in the power basis is
//     Hankel with an anti-triangular unit shape, hence always invertible.
//
//   * junior_trace — expand multiplication by t^{-v} * a in base-N digits,
//     take the trace over k[N], keep the constant digit, and apply the same
//     1/c correction.  This equals the trace form of the quotient algebra;
//     it degenerates on non-separable moduli, which downstream checks use
//     as a tripwire for picking the wrong functional.
//
// residue_space assembles the symmetric pairing l(a*b) together with the
// multiplication-by-t action (the companion matrix), and checks the
// compatibility T^t S = S T.  split_at_simple_roots gives the independent
// diagonal description at simple roots, and sqrt_one_plus_nilpotent is the
// Newton square root of 1 + (nilpotent) inside a quotient algebra.

#pragma once

#include <algorithm>
#include <vector>

#include "gwcor/errors.hpp"
#include "gwcor/fields.hpp"
#include "gwcor/intmath.hpp"
#include "gwcor/laurent.hpp"
#include "gwcor/matrix.hpp"
#include "gwcor/poly.hpp"
#include "gwcor/quadspace.hpp"

namespace gwcor {

// ---------------------------------------------------------------------------
// Finite quotient algebra k[t]/(modulus)
// ---------------------------------------------------------------------------

template <class K>
struct FiniteAlgebra {
    K k;
    Pol<typename K::Elem> modulus; // monic; degree 0 gives the zero algebra

    std::size_t dim() const { return modulus.c.size() - 1; }

    Pol<typename K::Elem> reduce(const Pol<typename K::Elem>& a) const {
        return pol_divmod(k, a, modulus).second;
    }
    Pol<typename K::Elem> add(const Pol<typename K::Elem>& a,
                              const Pol<typename K::Elem>& b) const {
        return pol_add(k, a, b);
    }
    Pol<typename K::Elem> mul(const Pol<typename K::Elem>& a,
                              const Pol<typename K::Elem>& b) const {
        return reduce(pol_mul(k, a, b));
    }
    Pol<typename K::Elem> one() const { return reduce(pol_one(k)); }

    // Inverse modulo the modulus via the extended Euclidean algorithm.
    Pol<typename K::Elem> inv(const Pol<typename K::Elem>& a) const {
        using P = Pol<typename K::Elem>;
        P r0 = modulus, r1 = reduce(a);
        P s0 = pol_zero<typename K::Elem>(), s1 = pol_one(k);
        while (!r1.c.empty()) {
            auto monic_r1 = pol_monic(k, r1);
            const auto lead_inv = k.inv(r1.c.back());
            auto [q, rem] = pol_divmod(k, r0, monic_r1);
            q = pol_scale(k, lead_inv, q);
            P s2 = pol_sub(k, s0, pol_mul(k, q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        check(pol_deg(r0) == 0, "element is not invertible in the quotient algebra");
        return reduce(pol_scale(k, k.inv(r0.c[0]), s0));
    }

    bool is_nilpotent(const Pol<typename K::Elem>& a) const {
        auto x = reduce(a);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x.c.empty()) return true;
            x = mul(x, reduce(a));
        }
        return x.c.empty();
    }
};

template <class K>
FiniteAlgebra<K> make_finite_algebra(const K& k, Pol<typename K::Elem> modulus) {
    require(pol_is_monic(k, modulus), "quotient modulus must be monic");
    return FiniteAlgebra<K>{k, std::move(modulus)};
}

// Companion matrix of the monic modulus: the matrix of multiplication by t
// in the power basis 1, t, ..., t^{m-1}.
template <class K>
Mat<typename K::Elem> companion_matrix(const FiniteAlgebra<K>& A) {
    const K& k = A.k;
    const std::size_t m = A.dim();
    Mat<typename K::Elem> T(m, m, k.zero());
    for (std::size_t j = 0; j + 1 < m; ++j) T.at(j + 1, j) = k.one();
    for (std::size_t i = 0; i < m; ++i) T.at(i, m - 1) = k.neg(A.modulus.c[i]);
    return T;
}

// ---------------------------------------------------------------------------
// Residue functionals
// ---------------------------------------------------------------------------

enum class ResidueMode { coefficient, junior_trace };

inline const char* residue_mode_name(ResidueMode m) {
    return m == ResidueMode::coefficient ? "coefficient" : "junior-trace";
}

template <class K>
struct ResidueFunctional {
    K k;
    FiniteAlgebra<K> alg;
    ResidueMode mode = ResidueMode::coefficient;
    long v = 0;              // monomial valuation of the defining Laurent element
    typename K::Elem c;      // its unit leading coefficient
    Pol<typename K::Elem> t_inverse; // t^{-1} mod modulus (empty for the zero algebra)

    // Apply the functional to (the class of) a polynomial.
    typename K::Elem operator()(const Pol<typename K::Elem>& a) const {
        const std::size_t m = alg.dim();
        if (m == 0) return k.zero();
        // Shift by t^{-v} inside the algebra.
        Pol<typename K::Elem> b = alg.reduce(a);
        if (v > 0) {
            for (long i = 0; i < v; ++i) b = alg.mul(b, t_inverse);
        } else {
            for (long i = v; i < 0; ++i) b = alg.mul(b, pol_x(k));
        }
        if (mode == ResidueMode::coefficient)
            return k.mul(k.inv(c), pol_coeff(k, b, m - 1));

        // junior_trace: write multiplication by b in base-modulus digits,
        // take the trace in k[modulus] and keep its constant digit.
        typename K::Elem trace0 = k.zero();
        for (std::size_t i = 0; i < m; ++i) {
            Pol<typename K::Elem> prod =
                pol_mul(k, b, pol_monomial(k, i, k.one()));
            // Digit expansion: prod = d0 + d1*N + d2*N^2 + ...
            std::size_t digit = 0;
            while (!prod.c.empty()) {
                auto [q, d] = pol_divmod(k, prod, alg.modulus);
                if (digit == 0) trace0 = k.add(trace0, pol_coeff(k, d, i));
                prod = std::move(q);
                ++digit;
            }
        }
        return k.mul(k.inv(c), trace0);
    }
};

// Build the functional attached to a nonzero Laurent polynomial.
template <class K>
ResidueFunctional<K> residue_functional(const LaurentRing<K>& R,
                                        const Laurent<K>& L, ResidueMode mode) {
    require(!R.is_zero(L), "residue functional of the zero Laurent polynomial");
    const auto nf = laurent_normalize(R, L);
    ResidueFunctional<K> f{R.k, make_finite_algebra(R.k, nf.monic), mode,
                           nf.v, nf.c, Pol<typename K::Elem>{}};
    const std::size_t m = f.alg.dim();
    if (m > 0) {
        // N(0) != 0 always holds after normalization, so t is invertible:
        // t^{-1} = -(1/a_0) * (t^{m-1} + a_{m-1} t^{m-2} + ... + a_1).
        const auto& k = R.k;
        const auto a0_inv = k.inv(nf.monic.c[0]);
        std::vector<typename K::Elem> inv_c(m, k.zero());
        for (std::size_t i = 0; i + 1 < m; ++i)
            inv_c[i] = k.neg(k.mul(a0_inv, nf.monic.c[i + 1]));
        inv_c[m - 1] = k.neg(a0_inv);
        f.t_inverse = pol_make(k, std::move(inv_c));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Residue pairing space
// ---------------------------------------------------------------------------

template <class K>
struct ResidueSpace {
    ResidueFunctional<K> functional;
    QuadSpace<K> space;              // Gram S_ij = l(twist * t^{i+j})
    Mat<typename K::Elem> t_action;  // companion matrix T with T^t S = S T
};

// The symmetric pairing (a, b) |-> l(twist * a * b) on k[t]/(N) in the power
// basis.  The optional twist multiplies inside the functional; the default is
// the untwisted pairing.
template <class K>
ResidueSpace<K> residue_space(const LaurentRing<K>& R, const Laurent<K>& L,
                              ResidueMode mode = ResidueMode::coefficient,
                              const Pol<typename K::Elem>& twist = Pol<typename K::Elem>{}) {
    auto f = residue_functional(R, L, mode);
    const K& k = R.k;
    const std::size_t m = f.alg.dim();

    Pol<typename K::Elem> tw = twist.c.empty() ? pol_one(k) : twist;

    // Values l(twist * t^e) for e = 0 .. 2m-2, built incrementally.
    std::vector<typename K::Elem> vals;
    vals.reserve(m == 0 ? 0 : 2 * m - 1);
    Pol<typename K::Elem> power = f.alg.reduce(tw);
    for (std::size_t e = 0; m > 0 && e <= 2 * m - 2; ++e) {
        vals.push_back(f(power));
        power = f.alg.mul(power, pol_x(k));
    }

    Mat<typename K::Elem> S(m, m, k.zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) S.at(i, j) = vals.empty() ? k.zero() : vals[i + j];

    check(mat_is_symmetric(k, S), "residue pairing is not symmetric");
    check(m == 0 || !k.is_zero(mat_det(k, S)),
          "degenerate residue pairing: functional does not match this modulus");

    auto T = companion_matrix(f.alg);
    check(mat_eq(k, mat_mul(k, mat_transpose(T), S), mat_mul(k, S, T)),
          "multiplication by t is not self-adjoint for the residue pairing");

    return ResidueSpace<K>{std::move(f), QuadSpace<K>{k, std::move(S)}, std::move(T)};
}

// ---------------------------------------------------------------------------
// Simple-root splitting
// ---------------------------------------------------------------------------

namespace detail {

// All roots in the coefficient field of a monic square-free polynomial that
// splits completely; input_error when it does not split into distinct roots.
// The root order is deterministic: over a finite field, increasing residue;
// over Q, increasing absolute value with the positive root first on ties
// (the natural order in which rational-root candidates are tried).
template <class K>
std::vector<typename K::Elem> all_simple_roots(const K& k,
                                               const Pol<typename K::Elem>& n);

inline std::vector<mpq_class> all_simple_roots_q(const RationalField& k,
                                                 const Pol<mpq_class>& n) {
    const std::size_t m = static_cast<std::size_t>(pol_deg(n));
    // Clear denominators: D * n has integer coefficients, leading coeff D.
    mpz_class den_lcm = 1;
    for (const auto& c : n.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                      c.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    ic.reserve(n.c.size());
    for (const auto& c : n.c) ic.push_back(mpz_class(c * den_lcm));

    // Candidates p/q: p divides the constant term, q divides the leading one.
    auto divisors = [](const mpz_class& x) {
        std::vector<mpz_class> out = {1};
        for (const auto& [p, e] : factorize(x)) {
            const std::size_t sz = out.size();
            mpz_class pw = 1;
            for (unsigned i = 1; i <= e; ++i) {
                pw *= p;
                for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
            }
        }
        return out;
    };
    check(ic[0] != 0, "simple-root scan requires a nonzero constant term");
    std::vector<mpq_class> cands;
    for (const auto& num : divisors(ic[0]))
        for (const auto& den : divisors(ic.back())) {
            mpq_class v(num, den);
            v.canonicalize();
            cands.push_back(v);
            cands.push_back(-v);
        }
    std::sort(cands.begin(), cands.end(), [](const mpq_class& a, const mpq_class& b) {
        const mpq_class aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a > b; // positive candidate first
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<mpq_class> roots;
    for (const auto& x : cands) {
        if (roots.size() == m) break;
        if (k.is_zero(pol_eval(k, n, x))) roots.push_back(x);
    }
    require(roots.size() == m,
            "polynomial does not split into distinct roots over Q");
    return roots;
}

inline std::vector<PrimeField::Elem> all_simple_roots_fp(const PrimeField& k,
                                                         const Pol<PrimeField::Elem>& n) {
    const std::size_t m = static_cast<std::size_t>(pol_deg(n));
    std::vector<PrimeField::Elem> roots;
    for (PrimeField::Elem a = 0; a < k.modulus(); ++a)
        if (k.is_zero(pol_eval(k, n, a))) roots.push_back(a);
    require(roots.size() == m,
            "polynomial does not split into distinct roots over " + k.name());
    return roots;
}

template <>
inline std::vector<mpq_class> all_simple_roots<RationalField>(
    const RationalField& k, const Pol<mpq_class>& n) {
    return all_simple_roots_q(k, n);
}

template <>
inline std::vector<PrimeField::Elem> all_simple_roots<PrimeField>(
    const PrimeField& k, const Pol<PrimeField::Elem>& n) {
    return all_simple_roots_fp(k, n);
}

} // namespace detail

// Diagonal form of the residue pairing at simple roots: one entry
// (1/c) * x^{-v} * N'(x) per root x of the monic part N.  Requires N to be
// square-free and split; this is the independent description that the
// Gram-matrix construction is tested against.
template <class K>
std::vector<typename K::Elem> split_at_simple_roots(const LaurentRing<K>& R,
                                                    const Laurent<K>& L) {
    require(!R.is_zero(L), "cannot split the zero Laurent polynomial");
    const K& k = R.k;
    const auto nf = laurent_normalize(R, L);
    const auto deriv = pol_derivative(k, nf.monic);
    require(pol_deg(pol_gcd(k, nf.monic, deriv)) == 0,
            "polynomial has repeated roots; simple-root splitting undefined");
    const auto roots = detail::all_simple_roots(k, nf.monic);

    std::vector<typename K::Elem> out;
    out.reserve(roots.size());
    const auto c_inv = k.inv(nf.c);
    for (const auto& x : roots) {
        // x != 0 because the monic part has nonzero constant term.
        typename K::Elem xv = k.one();
        for (long i = 0; i < (nf.v >= 0 ? nf.v : -nf.v); ++i) xv = k.mul(xv, x);
        typename K::Elem shift = nf.v >= 0 ? k.inv(xv) : xv;
        out.push_back(k.mul(k.mul(c_inv, shift), pol_eval(k, deriv, x)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Square roots of 1 + nilpotent
// ---------------------------------------------------------------------------

// Newton iteration s <- (s + q/s)/2 from s = 1; the defect 1 - s^2/q gains
// nilpotency order every step, so convergence is exact and fast.  q must be
// 1 + (nilpotent), otherwise input_error.
template <class K>
Pol<typename K::Elem> sqrt_one_plus_nilpotent(const FiniteAlgebra<K>& A,
                                              const Pol<typename K::Elem>& q) {
    const K& k = A.k;
    const auto qr = A.reduce(q);
    require(A.is_nilpotent(pol_sub(k, qr, A.one())),
            "square root requires an argument of the form 1 + nilpotent");
    const auto half = k.inv(k.from_long(2));
    Pol<typename K::Elem> s = A.one();
    for (std::size_t guard = 0; guard <= A.dim() + 2; ++guard) {
        if (pol_eq(k, A.mul(s, s), qr)) return s;
        s = pol_scale(k, half, A.add(s, A.mul(qr, A.inv(s))));
    }
    throw math_check_error("Newton square root failed to converge");
}

} // namespace gwcor

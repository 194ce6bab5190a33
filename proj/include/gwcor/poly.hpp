// Dense univariate polynomials over an arbitrary exact ring context.
//
// A polynomial is a coefficient vector ordered lowest-degree-first with no
// trailing zeros; the zero polynomial is the empty vector.  All operations
// are free functions taking the ring context as the first argument, so the
// same code serves field coefficients, Laurent-polynomial coefficients
// (characteristic polynomials over k[t,1/t]), and nested polynomial rings.
//
// PolRing<R> adapts "polynomials over R" into a ring context of its own,
// including the exact division needed by fraction-free elimination.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwcor/errors.hpp"

namespace gwcor {

template <class E>
struct Pol {
    std::vector<E> c; // c[i] multiplies t^i; invariant: c.empty() or c.back() != 0
};

// --- construction -----------------------------------------------------------

template <class R>
Pol<typename R::Elem> pol_make(const R& r, std::vector<typename R::Elem> coeffs) {
    while (!coeffs.empty() && r.is_zero(coeffs.back())) coeffs.pop_back();
    return {std::move(coeffs)};
}

template <class E>
Pol<E> pol_zero() {
    return {};
}

template <class R>
Pol<typename R::Elem> pol_const(const R& r, const typename R::Elem& e) {
    if (r.is_zero(e)) return {};
    return {{e}};
}

template <class R>
Pol<typename R::Elem> pol_one(const R& r) {
    return pol_const(r, r.one());
}

// The monomial t^k (k >= 0).
template <class R>
Pol<typename R::Elem> pol_monomial(const R& r, std::size_t k,
                                   const typename R::Elem& lead) {
    if (r.is_zero(lead)) return {};
    std::vector<typename R::Elem> c(k + 1, r.zero());
    c[k] = lead;
    return {std::move(c)};
}

template <class R>
Pol<typename R::Elem> pol_x(const R& r) {
    return pol_monomial(r, 1, r.one());
}

// --- inspection --------------------------------------------------------------

template <class E>
bool pol_is_zero(const Pol<E>& p) {
    return p.c.empty();
}

// Degree; -1 for the zero polynomial.
template <class E>
long pol_deg(const Pol<E>& p) {
    return static_cast<long>(p.c.size()) - 1;
}

template <class R>
typename R::Elem pol_coeff(const R& r, const Pol<typename R::Elem>& p, std::size_t i) {
    return i < p.c.size() ? p.c[i] : r.zero();
}

template <class R>
typename R::Elem pol_lead(const R& r, const Pol<typename R::Elem>& p) {
    check(!p.c.empty(), "leading coefficient of the zero polynomial");
    (void)r;
    return p.c.back();
}

template <class R>
bool pol_is_monic(const R& r, const Pol<typename R::Elem>& p) {
    return !p.c.empty() && r.is_one(p.c.back());
}

template <class R>
bool pol_eq(const R& r, const Pol<typename R::Elem>& a, const Pol<typename R::Elem>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!r.eq(a.c[i], b.c[i])) return false;
    return true;
}

// --- arithmetic --------------------------------------------------------------

template <class R>
Pol<typename R::Elem> pol_add(const R& r, const Pol<typename R::Elem>& a,
                              const Pol<typename R::Elem>& b) {
    std::vector<typename R::Elem> c(std::max(a.c.size(), b.c.size()), r.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = r.add(pol_coeff(r, a, i), pol_coeff(r, b, i));
    return pol_make(r, std::move(c));
}

template <class R>
Pol<typename R::Elem> pol_neg(const R& r, const Pol<typename R::Elem>& a) {
    std::vector<typename R::Elem> c;
    c.reserve(a.c.size());
    for (const auto& e : a.c) c.push_back(r.neg(e));
    return {std::move(c)};
}

template <class R>
Pol<typename R::Elem> pol_sub(const R& r, const Pol<typename R::Elem>& a,
                              const Pol<typename R::Elem>& b) {
    return pol_add(r, a, pol_neg(r, b));
}

template <class R>
Pol<typename R::Elem> pol_mul(const R& r, const Pol<typename R::Elem>& a,
                              const Pol<typename R::Elem>& b) {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<typename R::Elem> c(a.c.size() + b.c.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = r.add(c[i + j], r.mul(a.c[i], b.c[j]));
    return pol_make(r, std::move(c));
}

template <class R>
Pol<typename R::Elem> pol_scale(const R& r, const typename R::Elem& s,
                                const Pol<typename R::Elem>& a) {
    if (r.is_zero(s)) return {};
    std::vector<typename R::Elem> c;
    c.reserve(a.c.size());
    for (const auto& e : a.c) c.push_back(r.mul(s, e));
    return pol_make(r, std::move(c));
}

// Multiply by t^k (k >= 0).
template <class E>
Pol<E> pol_shift_up(const Pol<E>& a, std::size_t k, const E& zero) {
    if (a.c.empty()) return {};
    std::vector<E> c(a.c.size() + k, zero);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i + k] = a.c[i];
    return {std::move(c)};
}

template <class R>
typename R::Elem pol_eval(const R& r, const Pol<typename R::Elem>& p,
                          const typename R::Elem& x) {
    typename R::Elem acc = r.zero();
    for (std::size_t i = p.c.size(); i-- > 0;) acc = r.add(r.mul(acc, x), p.c[i]);
    return acc;
}

template <class R>
Pol<typename R::Elem> pol_pow(const R& r, Pol<typename R::Elem> base, unsigned long e) {
    Pol<typename R::Elem> acc = pol_one(r);
    while (e) {
        if (e & 1) acc = pol_mul(r, acc, base);
        base = pol_mul(r, base, base);
        e >>= 1;
    }
    return acc;
}

// --- division ----------------------------------------------------------------

// Division with remainder by a monic divisor; valid over any commutative ring.
template <class R>
std::pair<Pol<typename R::Elem>, Pol<typename R::Elem>>
pol_divmod(const R& r, const Pol<typename R::Elem>& a, const Pol<typename R::Elem>& b) {
    require(pol_is_monic(r, b), "polynomial division requires a monic divisor");
    const long db = pol_deg(b);
    std::vector<typename R::Elem> rem = a.c;
    std::vector<typename R::Elem> quo;
    long dr = pol_deg(a);
    if (dr >= db) quo.assign(static_cast<std::size_t>(dr - db) + 1, r.zero());
    while (dr >= db) {
        const typename R::Elem q = rem[static_cast<std::size_t>(dr)];
        quo[static_cast<std::size_t>(dr - db)] = q;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] =
                r.sub(rem[static_cast<std::size_t>(dr - db + i)],
                      r.mul(q, b.c[static_cast<std::size_t>(i)]));
        while (!rem.empty() && r.is_zero(rem.back())) rem.pop_back();
        dr = static_cast<long>(rem.size()) - 1;
    }
    return {pol_make(r, std::move(quo)), pol_make(r, std::move(rem))};
}

// Exact division over an integral domain: a must be a multiple of b.  Each
// leading-coefficient step divides exactly in the coefficient ring (this
// follows from divisibility of the whole polynomial); a nonzero remainder
// raises math_check_error.
template <class R>
Pol<typename R::Elem> pol_exact_div(const R& r, const Pol<typename R::Elem>& a,
                                    const Pol<typename R::Elem>& b) {
    check(!b.c.empty(), "exact polynomial division by zero");
    if (a.c.empty()) return {};
    long dr = pol_deg(a);
    const long db = pol_deg(b);
    check(dr >= db, "exact polynomial division: degree of divisor too large");
    std::vector<typename R::Elem> rem = a.c;
    std::vector<typename R::Elem> quo(static_cast<std::size_t>(dr - db) + 1, r.zero());
    while (dr >= db) {
        const typename R::Elem q =
            r.exact_div(rem[static_cast<std::size_t>(dr)], b.c.back());
        quo[static_cast<std::size_t>(dr - db)] = q;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] =
                r.sub(rem[static_cast<std::size_t>(dr - db + i)],
                      r.mul(q, b.c[static_cast<std::size_t>(i)]));
        while (!rem.empty() && r.is_zero(rem.back())) rem.pop_back();
        dr = static_cast<long>(rem.size()) - 1;
    }
    check(rem.empty(), "exact polynomial division left a remainder");
    return pol_make(r, std::move(quo));
}

template <class R>
Pol<typename R::Elem> pol_derivative(const R& r, const Pol<typename R::Elem>& p) {
    if (p.c.size() <= 1) return {};
    std::vector<typename R::Elem> c;
    c.reserve(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i)
        c.push_back(r.mul(r.from_long(static_cast<long>(i)), p.c[i]));
    return pol_make(r, std::move(c));
}

// --- field-only helpers ------------------------------------------------------

// Scale a nonzero polynomial to be monic (field coefficients).
template <class K>
Pol<typename K::Elem> pol_monic(const K& k, const Pol<typename K::Elem>& p) {
    check(!p.c.empty(), "cannot normalize the zero polynomial to monic");
    return pol_scale(k, k.inv(p.c.back()), p);
}

// Monic gcd over a field (gcd(0, 0) = 0).
template <class K>
Pol<typename K::Elem> pol_gcd(const K& k, Pol<typename K::Elem> a,
                              Pol<typename K::Elem> b) {
    while (!b.c.empty()) {
        auto [q, r] = pol_divmod(k, a, pol_monic(k, b));
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.c.empty() ? a : pol_monic(k, a);
}

// --- formatting ---------------------------------------------------------------

template <class R>
std::string pol_str(const R& r, const Pol<typename R::Elem>& p,
                    const std::string& var = "t") {
    if (p.c.empty()) return "0";
    std::string out;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        if (r.is_zero(p.c[i])) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += r.str(p.c[i]);
        } else {
            if (!r.is_one(p.c[i])) out += r.str(p.c[i]) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// --- PolRing: polynomials as a ring context -----------------------------------

template <class R>
struct PolRing {
    R base;
    using Elem = Pol<typename R::Elem>;

    std::string name() const { return base.name() + "[x]"; }

    Elem zero() const { return {}; }
    Elem one() const { return pol_one(base); }
    Elem from_long(long n) const { return pol_const(base, base.from_long(n)); }

    Elem add(const Elem& a, const Elem& b) const { return pol_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return pol_sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return pol_mul(base, a, b); }
    Elem neg(const Elem& a) const { return pol_neg(base, a); }

    bool eq(const Elem& a, const Elem& b) const { return pol_eq(base, a, b); }
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool is_one(const Elem& a) const { return a.c.size() == 1 && base.is_one(a.c[0]); }

    Elem exact_div(const Elem& a, const Elem& b) const {
        return pol_exact_div(base, a, b);
    }

    std::string str(const Elem& a) const { return pol_str(base, a, "x"); }
};

} // namespace gwcor

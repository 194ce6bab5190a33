// Laurent polynomials k[t, 1/t] over an exact field.
//
// An element is stored as (val, body): the monomial valuation and a dense
// polynomial body with nonzero constant term, so that the value is
// t^val * body(t).  The zero element has val = 0 and empty body.  Units are
// exactly the elements with deg(body) = 0, i.e. c * t^v.
//
// LaurentRing<K> packages this as a ring context usable by the generic
// polynomial and matrix code, including the exact division required by
// fraction-free determinant elimination.

#pragma once

#include <string>
#include <utility>

#include "gwcor/errors.hpp"
#include "gwcor/poly.hpp"

namespace gwcor {

template <class K>
struct Laurent {
    long val = 0;                // exponent of the monomial factor t^val
    Pol<typename K::Elem> body;  // body.c[0] != 0 unless the element is zero
};

template <class K>
struct LaurentRing {
    K k;
    using Elem = Laurent<K>;
    using Scalar = typename K::Elem;

    std::string name() const { return k.name() + "[t,1/t]"; }

    // Normalizing constructor: strips low-order zero coefficients into val.
    Elem make(long val, Pol<Scalar> body) const {
        std::size_t low = 0;
        while (low < body.c.size() && k.is_zero(body.c[low])) ++low;
        if (low == body.c.size()) return Elem{};
        if (low > 0) {
            body.c.erase(body.c.begin(), body.c.begin() + static_cast<long>(low));
            val += static_cast<long>(low);
        }
        while (!body.c.empty() && k.is_zero(body.c.back())) body.c.pop_back();
        return Elem{val, std::move(body)};
    }

    Elem from_pol(const Pol<Scalar>& p) const { return make(0, p); }
    Elem from_scalar(const Scalar& c) const { return make(0, pol_const(k, c)); }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_scalar(k.one()); }
    Elem from_long(long n) const { return from_scalar(k.from_long(n)); }

    // The monomial c * t^e.
    Elem monomial(const Scalar& c, long e) const { return make(e, pol_const(k, c)); }
    Elem t_power(long e) const { return monomial(k.one(), e); }

    bool is_zero(const Elem& a) const { return a.body.c.empty(); }
    bool is_one(const Elem& a) const {
        return a.val == 0 && a.body.c.size() == 1 && k.is_one(a.body.c[0]);
    }
    bool is_unit(const Elem& a) const {
        return !a.body.c.empty() && a.body.c.size() == 1;
    }
    bool is_constant(const Elem& a) const {
        return a.body.c.empty() || (a.val == 0 && a.body.c.size() == 1);
    }

    // Degree bounds of the support; only meaningful for nonzero elements.
    long bottom_degree(const Elem& a) const {
        check(!a.body.c.empty(), "degree of the zero Laurent polynomial");
        return a.val;
    }
    long top_degree(const Elem& a) const {
        check(!a.body.c.empty(), "degree of the zero Laurent polynomial");
        return a.val + pol_deg(a.body);
    }

    bool eq(const Elem& a, const Elem& b) const {
        return a.val == b.val && pol_eq(k, a.body, b.body) &&
               (a.body.c.empty() == b.body.c.empty());
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (a.body.c.empty()) return b;
        if (b.body.c.empty()) return a;
        const long v = std::min(a.val, b.val);
        auto pa = pol_shift_up(a.body, static_cast<std::size_t>(a.val - v), k.zero());
        auto pb = pol_shift_up(b.body, static_cast<std::size_t>(b.val - v), k.zero());
        return make(v, pol_add(k, pa, pb));
    }

    Elem neg(const Elem& a) const { return Elem{a.val, pol_neg(k, a.body)}; }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (a.body.c.empty() || b.body.c.empty()) return Elem{};
        return Elem{a.val + b.val, pol_mul(k, a.body, b.body)};
    }

    Elem scale(const Scalar& c, const Elem& a) const {
        return make(a.val, pol_scale(k, c, a.body));
    }

    // Inverse of a unit c * t^v; anything else is not invertible here.
    Elem inv(const Elem& a) const {
        check(is_unit(a), "Laurent element is not a unit: " + str(a));
        return monomial(k.inv(a.body.c[0]), -a.val);
    }

    // Exact division: a must be a multiple of b in k[t, 1/t].
    Elem exact_div(const Elem& a, const Elem& b) const {
        check(!b.body.c.empty(), "exact division by the zero Laurent polynomial");
        if (a.body.c.empty()) return Elem{};
        // Body division happens in k[t]; with field coefficients plain long
        // division applies, and divisibility in the Laurent ring is exactly
        // divisibility of the bodies (the monomial parts are units).
        auto monic_b = pol_monic(k, b.body);
        auto [q, r] = pol_divmod(k, a.body, monic_b);
        check(r.c.empty(), "Laurent division is not exact: " + str(a) + " by " + str(b));
        q = pol_scale(k, k.inv(b.body.c.back()), q);
        return make(a.val - b.val, q);
    }

    // Evaluate at a field point.  Negative powers of t require x != 0.
    Scalar eval(const Elem& a, const Scalar& x) const {
        if (a.body.c.empty()) return k.zero();
        if (k.is_zero(x)) {
            require(a.val >= 0,
                    "cannot evaluate a Laurent polynomial with poles at 0");
            return a.val > 0 ? k.zero() : a.body.c[0];
        }
        Scalar v = pol_eval(k, a.body, x);
        Scalar xp = k.one();
        long e = a.val >= 0 ? a.val : -a.val;
        for (long i = 0; i < e; ++i) xp = k.mul(xp, x);
        return a.val >= 0 ? k.mul(v, xp) : k.div(v, xp);
    }

    Elem derivative(const Elem& a) const {
        if (a.body.c.empty()) return Elem{};
        // d/dt [ t^v * sum c_i t^i ] = sum (v+i) c_i t^{v+i-1}
        std::vector<Scalar> c;
        c.reserve(a.body.c.size());
        for (std::size_t i = 0; i < a.body.c.size(); ++i)
            c.push_back(k.mul(k.from_long(a.val + static_cast<long>(i)), a.body.c[i]));
        return make(a.val - 1, pol_make(k, std::move(c)));
    }

    std::string str(const Elem& a) const {
        if (a.body.c.empty()) return "0";
        std::string out;
        for (std::size_t i = a.body.c.size(); i-- > 0;) {
            if (k.is_zero(a.body.c[i])) continue;
            if (!out.empty()) out += " + ";
            const long e = a.val + static_cast<long>(i);
            if (e == 0) {
                out += k.str(a.body.c[i]);
            } else {
                if (!k.is_one(a.body.c[i])) out += k.str(a.body.c[i]) + "*";
                out += "t";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }
};

// Canonical unit-times-monic factorization L = c * t^v * N with N monic and
// N(0) != 0.  The triple is unique; the zero element is rejected.
template <class K>
struct LaurentNormalForm {
    typename K::Elem c;          // unit scalar
    long v = 0;                  // monomial exponent
    Pol<typename K::Elem> monic; // monic polynomial part, nonzero constant term
};

template <class K>
LaurentNormalForm<K> laurent_normalize(const LaurentRing<K>& R,
                                       const Laurent<K>& a) {
    require(!a.body.c.empty(), "cannot normalize the zero Laurent polynomial");
    LaurentNormalForm<K> out;
    out.c = a.body.c.back();
    out.v = a.val;
    out.monic = pol_monic(R.k, a.body);
    return out;
}

} // namespace gwcor

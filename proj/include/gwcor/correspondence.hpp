// Quadratic correspondences between the point and the punctured affine line.
//
// A correspondence X -> Y (X, Y in {Pt, Gm}) is a free module of finite rank
// over the coordinate ring of X (k for Pt, k[t,1/t] for Gm) equipped with a
// symmetric Gram matrix whose determinant is a unit, and — when Y = Gm — an
// invertible matrix U giving the action of the target coordinate, commuting
// with the form in the sense U^t G = G U.
//
// Entries are stored uniformly as Laurent polynomials; when the source is Pt
// they are required to be constants.  Composition integrates out the middle:
// over a middle Gm the outer entries are evaluated at the middle action
// matrix, over a middle Pt this degenerates to a Kronecker product.  The
// composed basis is middle-major (outer factor's basis outermost), which
// fixes all matrices deterministically.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gwcor/errors.hpp"
#include "gwcor/laurent.hpp"
#include "gwcor/matrix.hpp"
#include "gwcor/quadspace.hpp"
#include "gwcor/residue.hpp"

namespace gwcor {

enum class AffineModel { Pt, Gm };

inline const char* affine_model_name(AffineModel m) {
    return m == AffineModel::Pt ? "pt" : "gm";
}

template <class K>
struct Correspondence {
    K k;
    AffineModel source = AffineModel::Pt;
    AffineModel target = AffineModel::Pt;
    std::size_t rank = 0;
    Mat<Laurent<K>> gram;   // rank x rank, symmetric, unit determinant
    Mat<Laurent<K>> action; // rank x rank iff target == Gm, else 0 x 0

    LaurentRing<K> ring() const { return LaurentRing<K>{k}; }
};

template <class K>
struct SignedCorr {
    int sign = 1; // +1 or -1
    Correspondence<K> corr;
};

template <class K>
using FormalSum = std::vector<SignedCorr<K>>;

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

// Empty string when valid, else a description of the first violated rule.
template <class K>
std::string validation_failure(const Correspondence<K>& c) {
    const LaurentRing<K> R = c.ring();
    if (c.gram.rows != c.rank || c.gram.cols != c.rank)
        return "Gram matrix shape does not match the rank";
    if (c.target == AffineModel::Gm) {
        if (c.action.rows != c.rank || c.action.cols != c.rank)
            return "target action shape does not match the rank";
    } else if (c.action.rows != 0 || c.action.cols != 0) {
        return "a correspondence into the point has no target action";
    }
    if (c.source == AffineModel::Pt) {
        for (const auto& e : c.gram.a)
            if (!R.is_constant(e)) return "Gram entries must be constant when the source is the point";
        for (const auto& e : c.action.a)
            if (!R.is_constant(e)) return "action entries must be constant when the source is the point";
    }
    if (!mat_is_symmetric(R, c.gram)) return "Gram matrix is not symmetric";

    const auto det_g = mat_det(R, c.gram);
    const bool det_g_unit = c.source == AffineModel::Pt
                                ? (R.is_constant(det_g) && !R.is_zero(det_g))
                                : R.is_unit(det_g);
    if (!det_g_unit) return "Gram determinant is not a unit of the source ring";

    if (c.target == AffineModel::Gm) {
        const auto det_u = mat_det(R, c.action);
        const bool det_u_unit = c.source == AffineModel::Pt
                                    ? (R.is_constant(det_u) && !R.is_zero(det_u))
                                    : R.is_unit(det_u);
        if (!det_u_unit) return "target action determinant is not a unit of the source ring";
        if (!mat_eq(R, mat_mul(R, mat_transpose(c.action), c.gram),
                    mat_mul(R, c.gram, c.action)))
            return "target action is not self-adjoint: U^t G != G U";
    }
    return "";
}

} // namespace detail

// Public validation of caller-supplied data.
template <class K>
void validate(const Correspondence<K>& c) {
    const auto why = detail::validation_failure(c);
    if (!why.empty()) throw input_error("invalid correspondence: " + why);
}

template <class K>
bool is_valid(const Correspondence<K>& c) {
    return detail::validation_failure(c).empty();
}

// Internal postcondition check: a constructed value failing to validate is a
// math error, not an input error.
template <class K>
void check_valid(const Correspondence<K>& c, const std::string& who) {
    const auto why = detail::validation_failure(c);
    check(why.empty(), who + " produced an invalid correspondence: " + why);
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

template <class K>
Correspondence<K> identity_gm(const K& k) {
    LaurentRing<K> R{k};
    Correspondence<K> c{k, AffineModel::Gm, AffineModel::Gm, 1,
                        Mat<Laurent<K>>(1, 1, R.one()),
                        Mat<Laurent<K>>(1, 1, R.t_power(1))};
    return c;
}

template <class K>
Correspondence<K> unit_gm(const K& k) {
    LaurentRing<K> R{k};
    Correspondence<K> c{k, AffineModel::Gm, AffineModel::Gm, 1,
                        Mat<Laurent<K>>(1, 1, R.one()),
                        Mat<Laurent<K>>(1, 1, R.one())};
    return c;
}

// Lift a constant symmetric space to Gm x Gm with the tautological action
// U = t * I ("box" product with the identity correspondence).
template <class K>
Correspondence<K> boxtimes_gm(const QuadSpace<K>& phi) {
    const K& k = phi.k;
    LaurentRing<K> R{k};
    const std::size_t r = phi.rank();
    Correspondence<K> c{k, AffineModel::Gm, AffineModel::Gm, r,
                        mat_zero(R, r, r), mat_zero(R, r, r)};
    for (std::size_t i = 0; i < r; ++i) {
        c.action.at(i, i) = R.t_power(1);
        for (std::size_t j = 0; j < r; ++j)
            c.gram.at(i, j) = R.from_scalar(phi.gram.at(i, j));
    }
    return c;
}

// A constant form as a correspondence from the point to the point.
template <class K>
Correspondence<K> corr_from_quadspace(const QuadSpace<K>& q) {
    const K& k = q.k;
    LaurentRing<K> R{k};
    const std::size_t r = q.rank();
    Correspondence<K> c{k, AffineModel::Pt, AffineModel::Pt, r,
                        mat_zero(R, r, r), Mat<Laurent<K>>()};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            c.gram.at(i, j) = R.from_scalar(q.gram.at(i, j));
    return c;
}

// The residue pairing of a Laurent polynomial as a correspondence from the
// point into Gm, with t acting through the companion matrix.
template <class K>
Correspondence<K> corr_from_residue(const ResidueSpace<K>& rs) {
    const K& k = rs.space.k;
    LaurentRing<K> R{k};
    const std::size_t m = rs.space.rank();
    Correspondence<K> c{k, AffineModel::Pt, AffineModel::Gm, m,
                        mat_zero(R, m, m), mat_zero(R, m, m)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            c.gram.at(i, j) = R.from_scalar(rs.space.gram.at(i, j));
            c.action.at(i, j) = R.from_scalar(rs.t_action.at(i, j));
        }
    return c;
}

// Underlying constant form of a correspondence out of the point.
template <class K>
QuadSpace<K> quadspace_from_corr(const Correspondence<K>& c) {
    require(c.source == AffineModel::Pt,
            "underlying form needs a correspondence out of the point");
    const K& k = c.k;
    LaurentRing<K> R{k};
    Mat<typename K::Elem> g(c.rank, c.rank, k.zero());
    for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = 0; j < c.rank; ++j) {
            const auto& e = c.gram.at(i, j);
            require(R.is_constant(e), "Gram entry is not constant");
            g.at(i, j) = R.eval(e, k.zero());
        }
    return make_quadspace(k, std::move(g));
}

// ---------------------------------------------------------------------------
// Evaluation of Laurent polynomials at invertible matrices
// ---------------------------------------------------------------------------

// L(M) over an arbitrary ring context S; Embed lifts the coefficients of L
// into S.  The inverse of M is taken through the adjugate when negative
// powers occur (det(M) must be a unit of S).
template <class S, class K, class Embed>
Mat<typename S::Elem> laurent_at_matrix(const S& s, const Laurent<K>& L,
                                        const Mat<typename S::Elem>& M,
                                        const Mat<typename S::Elem>* Minv,
                                        Embed embed) {
    require(M.is_square(), "Laurent evaluation needs a square matrix");
    const std::size_t n = M.rows;
    Mat<typename S::Elem> acc = mat_zero(s, n, n);
    for (std::size_t i = L.body.c.size(); i-- > 0;) {
        acc = mat_mul(s, acc, M);
        const auto e = embed(L.body.c[i]);
        for (std::size_t d = 0; d < n; ++d) acc.at(d, d) = s.add(acc.at(d, d), e);
    }
    if (L.val > 0) {
        acc = mat_mul(s, acc, mat_pow(s, M, static_cast<unsigned long>(L.val)));
    } else if (L.val < 0) {
        Mat<typename S::Elem> inv =
            Minv ? *Minv : mat_inverse_by_adjugate(s, M);
        acc = mat_mul(s, acc, mat_pow(s, inv, static_cast<unsigned long>(-L.val)));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

// compose(B, A) = B after A.  The middle model (A's target = B's source) is
// integrated out; the result's basis is middle-major: outer index j runs over
// B's basis, inner index i over A's.
template <class K>
Correspondence<K> compose(const Correspondence<K>& B, const Correspondence<K>& A) {
    require(same_field(A.k, B.k), "composition over different fields");
    validate(A);
    validate(B);
    require(A.target == B.source,
            "composition mismatch: source of the outer factor must equal the "
            "target of the inner one");
    const K& k = A.k;
    const LaurentRing<K> R{k};
    const std::size_t rA = A.rank, rB = B.rank, n = rA * rB;

    Correspondence<K> out{k, A.source, B.target, n, Mat<Laurent<K>>(), Mat<Laurent<K>>()};
    if (n == 0) {
        out.gram = mat_zero(R, 0, 0);
        if (B.target == AffineModel::Gm) out.action = mat_zero(R, 0, 0);
        check_valid(out, "compose");
        return out;
    }

    const bool middle_gm = A.target == AffineModel::Gm;
    Mat<Laurent<K>> ua_inv;
    if (middle_gm) ua_inv = mat_inverse_by_adjugate(R, A.action);
    auto embed = [&](const typename K::Elem& c) { return R.from_scalar(c); };

    // Evaluate a middle-ring entry at the middle action (or lift a constant).
    auto eval_mid = [&](const Laurent<K>& e) -> Mat<Laurent<K>> {
        if (middle_gm) return laurent_at_matrix(R, e, A.action, &ua_inv, embed);
        Mat<Laurent<K>> m = mat_zero(R, rA, rA);
        for (std::size_t d = 0; d < rA; ++d) m.at(d, d) = e;
        return m;
    };

    std::vector<std::vector<Mat<Laurent<K>>>> ggrid(rB), ugrid;
    for (std::size_t j = 0; j < rB; ++j) {
        ggrid[j].reserve(rB);
        for (std::size_t l = 0; l < rB; ++l)
            ggrid[j].push_back(mat_mul(R, A.gram, eval_mid(B.gram.at(j, l))));
    }
    out.gram = mat_from_blocks(R, ggrid);

    if (B.target == AffineModel::Gm) {
        ugrid.resize(rB);
        for (std::size_t j = 0; j < rB; ++j) {
            ugrid[j].reserve(rB);
            for (std::size_t l = 0; l < rB; ++l) ugrid[j].push_back(eval_mid(B.action.at(j, l)));
        }
        out.action = mat_from_blocks(R, ugrid);
    }

    // Postconditions (block symmetry uses G p(U) = p(U^t) G, a consequence of
    // U^t G = G U): the composed value must be a valid correspondence.
    check_valid(out, "compose");
    return out;
}

// ---------------------------------------------------------------------------
// Dot expansion, specialization, stability bound
// ---------------------------------------------------------------------------

// The four signed terms (1 - unit) o C o (1 - unit) of a Gm x Gm
// correspondence: [+C, -(unit o C), -(C o unit), +(unit o C o unit)].
template <class K>
FormalSum<K> dot_expand(const Correspondence<K>& c) {
    require(c.source == AffineModel::Gm && c.target == AffineModel::Gm,
            "dot expansion needs a correspondence from Gm to Gm");
    validate(c);
    const auto e = unit_gm(c.k);
    FormalSum<K> out;
    out.push_back({+1, c});
    out.push_back({-1, compose(e, c)});
    out.push_back({-1, compose(c, e)});
    out.push_back({+1, compose(e, compose(c, e))});
    return out;
}

// Evaluate the source coordinate at a unit a, turning Gm -> Y into Pt -> Y.
template <class K>
Correspondence<K> specialize(const Correspondence<K>& c, const typename K::Elem& a) {
    require(c.source == AffineModel::Gm, "specialization needs a Gm source");
    require(!c.k.is_zero(a), "specialization point must be a unit");
    validate(c);
    const K& k = c.k;
    const LaurentRing<K> R{k};
    Correspondence<K> out{k, AffineModel::Pt, c.target, c.rank,
                          mat_zero(R, c.rank, c.rank), Mat<Laurent<K>>()};
    for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = 0; j < c.rank; ++j)
            out.gram.at(i, j) = R.from_scalar(R.eval(c.gram.at(i, j), a));
    if (c.target == AffineModel::Gm) {
        out.action = mat_zero(R, c.rank, c.rank);
        for (std::size_t i = 0; i < c.rank; ++i)
            for (std::size_t j = 0; j < c.rank; ++j)
                out.action.at(i, j) = R.from_scalar(R.eval(c.action.at(i, j), a));
    }
    check_valid(out, "specialize");
    return out;
}

struct StabilityBound {
    long n_p = 0; // all shifts n > n_p are admissible
    long m_p = 0; // negative of the bottom degree of the constant charpoly term
};

// Degree bounds read off the characteristic polynomial of the target action:
// n_p = max over consecutive NONZERO coefficient pairs (b_j, b_i), j < i, of
// top_deg(b_j) - bottom_deg(b_i), with the monic leading coefficient included
// as the final pair partner (degree 0).  Vanishing coefficients are bridged,
// not dropped: the raw degree gap over a bridge still dominates the Newton
// slope for every admissible shift n >= 1, so the bound stays safe.
template <class K>
StabilityBound stability_bound(const Correspondence<K>& c) {
    require(c.source == AffineModel::Gm && c.target == AffineModel::Gm,
            "stability bound needs a correspondence from Gm to Gm");
    validate(c);
    const LaurentRing<K> R{c.k};
    const auto chi = mat_charpoly(R, c.action); // monic, degree = rank
    StabilityBound out;
    const std::size_t r = c.rank;
    if (r == 0) return out;

    const auto& b0 = chi.c[0]; // = +- det(action), a unit, hence nonzero
    check(!R.is_zero(b0), "constant charpoly coefficient vanished");
    out.m_p = -R.bottom_degree(b0);

    long best = 0;
    std::size_t last = 0; // chi.c[0] is nonzero (checked above)
    for (std::size_t i = 1; i < chi.c.size(); ++i) {
        if (R.is_zero(chi.c[i])) continue;
        const long cand = R.top_degree(chi.c[last]) - R.bottom_degree(chi.c[i]);
        if (cand > best) best = cand;
        last = i;
    }
    out.n_p = best;
    return out;
}

} // namespace gwcor

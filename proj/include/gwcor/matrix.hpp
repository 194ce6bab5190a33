// Exact dense matrices over a ring context.
//
// Determinants use cofactor expansion up to 4x4 and fraction-free (Bareiss)
// elimination above that; the elimination's interior divisions are exact in
// any integral domain, which the ring context witnesses with exact_div.
// The adjugate is computed from signed minors, the characteristic polynomial
// as a determinant over the polynomial ring, and the field-only routines
// (rank, kernel, inverse, basis extension) use Gauss–Jordan elimination.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gwcor/errors.hpp"
#include "gwcor/poly.hpp"

namespace gwcor {

template <class E>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

    E& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const E& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_square() const { return rows == cols; }
};

// --- construction -------------------------------------------------------------

template <class R>
Mat<typename R::Elem> mat_zero(const R& r, std::size_t rows, std::size_t cols) {
    return Mat<typename R::Elem>(rows, cols, r.zero());
}

template <class R>
Mat<typename R::Elem> mat_identity(const R& r, std::size_t n) {
    Mat<typename R::Elem> m(n, n, r.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

// Row-major initializer for tests and small literals.
template <class R>
Mat<typename R::Elem> mat_make(const R& r, std::size_t rows, std::size_t cols,
                               std::vector<typename R::Elem> entries) {
    require(entries.size() == rows * cols, "matrix literal has wrong entry count");
    Mat<typename R::Elem> m(rows, cols, r.zero());
    m.a = std::move(entries);
    return m;
}

// Assemble a matrix from a rectangular grid of equally-sized blocks.
template <class R>
Mat<typename R::Elem> mat_from_blocks(
    const R& r, const std::vector<std::vector<Mat<typename R::Elem>>>& grid) {
    require(!grid.empty() && !grid[0].empty(), "empty block grid");
    const std::size_t br = grid[0][0].rows, bc = grid[0][0].cols;
    const std::size_t gr = grid.size(), gc = grid[0].size();
    Mat<typename R::Elem> m(gr * br, gc * bc, r.zero());
    for (std::size_t I = 0; I < gr; ++I) {
        require(grid[I].size() == gc, "ragged block grid");
        for (std::size_t J = 0; J < gc; ++J) {
            const auto& b = grid[I][J];
            require(b.rows == br && b.cols == bc, "block sizes differ");
            for (std::size_t i = 0; i < br; ++i)
                for (std::size_t j = 0; j < bc; ++j)
                    m.at(I * br + i, J * bc + j) = b.at(i, j);
        }
    }
    return m;
}

template <class E>
Mat<E> mat_hstack(const Mat<E>& a, const Mat<E>& b) {
    require(a.rows == b.rows, "hstack: row counts differ");
    Mat<E> m;
    m.rows = a.rows;
    m.cols = a.cols + b.cols;
    m.a.reserve(m.rows * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m.a.push_back(a.at(i, j));
        for (std::size_t j = 0; j < b.cols; ++j) m.a.push_back(b.at(i, j));
    }
    return m;
}

// Square submatrix selecting the given row and column indices.
template <class E>
Mat<E> mat_select(const Mat<E>& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
    Mat<E> out;
    out.rows = rows.size();
    out.cols = cols.size();
    out.a.reserve(out.rows * out.cols);
    for (std::size_t i : rows)
        for (std::size_t j : cols) out.a.push_back(m.at(i, j));
    return out;
}

// --- arithmetic ----------------------------------------------------------------

template <class R>
bool mat_eq(const R& r, const Mat<typename R::Elem>& a, const Mat<typename R::Elem>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (!r.eq(a.a[i], b.a[i])) return false;
    return true;
}

template <class R>
Mat<typename R::Elem> mat_add(const R& r, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix addition shape mismatch");
    Mat<typename R::Elem> m = a;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = r.add(a.a[i], b.a[i]);
    return m;
}

template <class R>
Mat<typename R::Elem> mat_neg(const R& r, const Mat<typename R::Elem>& a) {
    Mat<typename R::Elem> m = a;
    for (auto& e : m.a) e = r.neg(e);
    return m;
}

template <class R>
Mat<typename R::Elem> mat_sub(const R& r, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
    return mat_add(r, a, mat_neg(r, b));
}

template <class R>
Mat<typename R::Elem> mat_mul(const R& r, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
    require(a.cols == b.rows, "matrix product shape mismatch");
    Mat<typename R::Elem> m(a.rows, b.cols, r.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            const auto& ail = a.at(i, l);
            if (r.is_zero(ail)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                m.at(i, j) = r.add(m.at(i, j), r.mul(ail, b.at(l, j)));
        }
    return m;
}

template <class R>
Mat<typename R::Elem> mat_scale(const R& r, const typename R::Elem& c,
                                const Mat<typename R::Elem>& a) {
    Mat<typename R::Elem> m = a;
    for (auto& e : m.a) e = r.mul(c, e);
    return m;
}

template <class E>
Mat<E> mat_transpose(const Mat<E>& a) {
    Mat<E> m;
    m.rows = a.cols;
    m.cols = a.rows;
    m.a.resize(a.a.size());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m.at(j, i) = a.at(i, j);
    return m;
}

template <class R>
bool mat_is_symmetric(const R& r, const Mat<typename R::Elem>& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i + 1; j < a.cols; ++j)
            if (!r.eq(a.at(i, j), a.at(j, i))) return false;
    return true;
}

template <class R>
Mat<typename R::Elem> mat_pow(const R& r, Mat<typename R::Elem> a, unsigned long e) {
    require(a.is_square(), "matrix power of a non-square matrix");
    Mat<typename R::Elem> acc = mat_identity(r, a.rows);
    while (e) {
        if (e & 1) acc = mat_mul(r, acc, a);
        a = mat_mul(r, a, a);
        e >>= 1;
    }
    return acc;
}

// --- determinant, adjugate, characteristic polynomial ---------------------------

namespace detail {

template <class R>
typename R::Elem det_cofactor(const R& r, const Mat<typename R::Elem>& m) {
    const std::size_t n = m.rows;
    if (n == 0) return r.one();
    if (n == 1) return m.at(0, 0);
    if (n == 2)
        return r.sub(r.mul(m.at(0, 0), m.at(1, 1)), r.mul(m.at(0, 1), m.at(1, 0)));
    typename R::Elem acc = r.zero();
    std::vector<std::size_t> cols;
    cols.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (r.is_zero(m.at(0, j))) continue;
        cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        std::vector<std::size_t> rows;
        rows.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        const auto minor_det = det_cofactor(r, mat_select(m, rows, cols));
        const auto term = r.mul(m.at(0, j), minor_det);
        acc = (j % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
    }
    return acc;
}

// Fraction-free elimination; every interior division is exact in an integral
// domain.  Row pivoting only (with sign tracking), so no field structure is
// needed.
template <class R>
typename R::Elem det_bareiss(const R& r, Mat<typename R::Elem> m) {
    const std::size_t n = m.rows;
    bool negate = false;
    typename R::Elem prev = r.one();
    for (std::size_t kk = 0; kk + 1 < n; ++kk) {
        std::size_t piv = kk;
        while (piv < n && r.is_zero(m.at(piv, kk))) ++piv;
        if (piv == n) return r.zero();
        if (piv != kk) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(kk, j));
            negate = !negate;
        }
        for (std::size_t i = kk + 1; i < n; ++i) {
            for (std::size_t j = kk + 1; j < n; ++j) {
                auto num = r.sub(r.mul(m.at(kk, kk), m.at(i, j)),
                                 r.mul(m.at(i, kk), m.at(kk, j)));
                m.at(i, j) = r.exact_div(num, prev);
            }
            m.at(i, kk) = r.zero();
        }
        prev = m.at(kk, kk);
    }
    auto det = m.at(n - 1, n - 1);
    return negate ? r.neg(det) : det;
}

} // namespace detail

template <class R>
typename R::Elem mat_det(const R& r, const Mat<typename R::Elem>& m) {
    require(m.is_square(), "determinant of a non-square matrix");
    if (m.rows <= 4) return detail::det_cofactor(r, m);
    return detail::det_bareiss(r, m);
}

// Adjugate: adj(M)[j][i] = (-1)^{i+j} det(minor_ij(M)); satisfies
// M * adj(M) = adj(M) * M = det(M) * I.  The 1x1 adjugate is [1].
template <class R>
Mat<typename R::Elem> mat_adjugate(const R& r, const Mat<typename R::Elem>& m) {
    require(m.is_square(), "adjugate of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return m;
    Mat<typename R::Elem> adj(n, n, r.zero());
    if (n == 1) {
        adj.at(0, 0) = r.one();
        return adj;
    }
    std::vector<std::size_t> rows, cols;
    rows.reserve(n - 1);
    cols.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rows.clear();
            cols.clear();
            for (std::size_t x = 0; x < n; ++x)
                if (x != i) rows.push_back(x);
            for (std::size_t x = 0; x < n; ++x)
                if (x != j) cols.push_back(x);
            auto d = mat_det(r, mat_select(m, rows, cols));
            if ((i + j) % 2 == 1) d = r.neg(d);
            adj.at(j, i) = d;
        }
    return adj;
}

// Characteristic polynomial det(x*I - M), monic, coefficients lowest-first,
// computed exactly as a determinant over R[x].
template <class R>
Pol<typename R::Elem> mat_charpoly(const R& r, const Mat<typename R::Elem>& m) {
    require(m.is_square(), "characteristic polynomial of a non-square matrix");
    PolRing<R> rx{r};
    const std::size_t n = m.rows;
    Mat<typename PolRing<R>::Elem> xm(n, n, rx.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<typename R::Elem> c;
            if (i == j)
                c = {r.neg(m.at(i, j)), r.one()};
            else
                c = {r.neg(m.at(i, j))};
            xm.at(i, j) = pol_make(r, std::move(c));
        }
    return mat_det(rx, xm);
}

// Evaluate a polynomial at a square matrix (Horner).
template <class R>
Mat<typename R::Elem> mat_eval_pol(const R& r, const Pol<typename R::Elem>& p,
                                   const Mat<typename R::Elem>& m) {
    require(m.is_square(), "polynomial of a non-square matrix");
    Mat<typename R::Elem> acc = mat_zero(r, m.rows, m.rows);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        acc = mat_mul(r, acc, m);
        for (std::size_t d = 0; d < m.rows; ++d)
            acc.at(d, d) = r.add(acc.at(d, d), p.c[i]);
    }
    return acc;
}

// Inverse through the adjugate; requires det(M) to be invertible in R.
template <class R>
Mat<typename R::Elem> mat_inverse_by_adjugate(const R& r,
                                              const Mat<typename R::Elem>& m) {
    auto det = mat_det(r, m);
    check(!r.is_zero(det), "matrix is singular");
    return mat_scale(r, r.inv(det), mat_adjugate(r, m));
}

// --- field-only linear algebra ---------------------------------------------------

namespace detail {

// In-place reduced row echelon form; returns pivot column indices.
template <class K>
std::vector<std::size_t> rref(const K& k, Mat<typename K::Elem>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && k.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const auto inv = k.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = k.mul(inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            const auto f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

template <class K>
std::size_t mat_rank(const K& k, Mat<typename K::Elem> m) {
    return detail::rref(k, m).size();
}

// Basis of the right null space, one column per free variable, in increasing
// free-column order.  Each basis vector is scaled so its first nonzero entry
// is 1, which makes the output canonical.
template <class K>
Mat<typename K::Elem> kernel_basis(const K& k, Mat<typename K::Elem> m) {
    const std::size_t n = m.cols;
    const auto pivots = detail::rref(k, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat<typename K::Elem> out(n, n - pivots.size(), k.zero());
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out.at(f, col) = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(pivots[i], col) = k.neg(m.at(i, f));
        // Scale the first nonzero entry to 1.
        for (std::size_t i = 0; i < n; ++i) {
            if (k.is_zero(out.at(i, col))) continue;
            const auto inv = k.inv(out.at(i, col));
            for (std::size_t x = i; x < n; ++x)
                out.at(x, col) = k.mul(inv, out.at(x, col));
            break;
        }
        ++col;
    }
    return out;
}

template <class K>
Mat<typename K::Elem> mat_inverse(const K& k, const Mat<typename K::Elem>& m) {
    require(m.is_square(), "inverse of a non-square matrix");
    auto aug = mat_hstack(m, mat_identity(k, m.rows));
    const auto pivots = detail::rref(k, aug);
    // Reduction runs over the full augmented matrix, so a rank-deficient m
    // still yields m.rows pivots with the surplus ones landing in the
    // identity half; invertibility means every pivot sits in the m-columns.
    check(pivots.size() == m.rows && (m.rows == 0 || pivots.back() < m.rows),
          "matrix is singular");
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < m.rows; ++j) cols.push_back(m.rows + j);
    return mat_select(aug, rows, cols);
}

// Indices of standard basis vectors that extend the column span of `cols`
// to the full space, chosen greedily in index order.
template <class K>
std::vector<std::size_t> complement_indices(const K& k,
                                            const Mat<typename K::Elem>& cols) {
    const std::size_t n = cols.rows;
    // Echelon store: reduced independent vectors with their pivot positions.
    std::vector<std::vector<typename K::Elem>> basis;
    std::vector<std::size_t> pivot_pos;
    auto insert = [&](std::vector<typename K::Elem> v) -> bool {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto f = v[pivot_pos[b]];
            if (k.is_zero(f)) continue;
            for (std::size_t x = 0; x < n; ++x)
                v[x] = k.sub(v[x], k.mul(f, basis[b][x]));
        }
        std::size_t p = 0;
        while (p < n && k.is_zero(v[p])) ++p;
        if (p == n) return false;
        const auto inv = k.inv(v[p]);
        for (std::size_t x = 0; x < n; ++x) v[x] = k.mul(inv, v[x]);
        basis.push_back(std::move(v));
        pivot_pos.push_back(p);
        return true;
    };
    for (std::size_t j = 0; j < cols.cols; ++j) {
        std::vector<typename K::Elem> v(n, k.zero());
        for (std::size_t i = 0; i < n; ++i) v[i] = cols.at(i, j);
        insert(std::move(v));
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        std::vector<typename K::Elem> v(n, k.zero());
        v[i] = k.one();
        if (insert(std::move(v))) out.push_back(i);
    }
    return out;
}

// True iff every column of `vecs` lies in the column span of `space`.
template <class K>
bool columns_contained(const K& k, const Mat<typename K::Elem>& space,
                       const Mat<typename K::Elem>& vecs) {
    const auto base_rank = mat_rank(k, space);
    return mat_rank(k, mat_hstack(space, vecs)) == base_rank;
}

} // namespace gwcor

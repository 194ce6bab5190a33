// Symmetric bilinear spaces over an exact field of characteristic != 2.
//
// QuadSpace requires an invertible symmetric Gram matrix; PreQuadSpace allows
// a radical and exists to be reduced.  Diagonalization is deterministic:
// always the first nonzero diagonal pivot in index order, with a polarization
// step (x -> x + y at the first nonzero off-diagonal entry) when the whole
// remaining diagonal vanishes.  Determinism keeps golden test values stable.

#pragma once

#include <cstddef>
#include <vector>

#include "gwcor/errors.hpp"
#include "gwcor/matrix.hpp"

namespace gwcor {

template <class K>
struct QuadSpace {
    K k;
    Mat<typename K::Elem> gram; // symmetric, invertible

    std::size_t rank() const { return gram.rows; }
};

template <class K>
struct PreQuadSpace {
    K k;
    Mat<typename K::Elem> gram; // symmetric, possibly degenerate

    std::size_t dim() const { return gram.rows; }
};

// --- constructors ---------------------------------------------------------------

template <class K>
QuadSpace<K> make_quadspace(const K& k, Mat<typename K::Elem> gram) {
    require(gram.is_square(), "Gram matrix must be square");
    require(mat_is_symmetric(k, gram), "Gram matrix must be symmetric");
    require(!k.is_zero(mat_det(k, gram)), "Gram matrix must be invertible");
    return QuadSpace<K>{k, std::move(gram)};
}

template <class K>
PreQuadSpace<K> make_prequadspace(const K& k, Mat<typename K::Elem> gram) {
    require(gram.is_square(), "Gram matrix must be square");
    require(mat_is_symmetric(k, gram), "Gram matrix must be symmetric");
    return PreQuadSpace<K>{k, std::move(gram)};
}

// Diagonal space <d_1, ..., d_n>; every entry must be nonzero.
template <class K>
QuadSpace<K> diag_space(const K& k, const std::vector<typename K::Elem>& d) {
    Mat<typename K::Elem> g(d.size(), d.size(), k.zero());
    for (std::size_t i = 0; i < d.size(); ++i) {
        require(!k.is_zero(d[i]), "diagonal space entries must be nonzero");
        g.at(i, i) = d[i];
    }
    return QuadSpace<K>{k, std::move(g)};
}

// The hyperbolic plane <1, -1>.
template <class K>
QuadSpace<K> hyperbolic_space(const K& k) {
    return diag_space(k, {k.one(), k.neg(k.one())});
}

// --- operations -----------------------------------------------------------------

// Deterministic symmetric diagonalization of any symmetric matrix; returns
// the diagonal entries (zeros appear exactly when the form is degenerate).
template <class K>
std::vector<typename K::Elem> diagonalize_gram(const K& k,
                                               Mat<typename K::Elem> g) {
    require(g.is_square() && mat_is_symmetric(k, g), "diagonalize needs a symmetric matrix");
    const std::size_t n = g.rows;
    const typename K::Elem two = k.from_long(2);
    check(!k.is_zero(two), "diagonalization requires characteristic != 2");
    std::vector<typename K::Elem> diag;
    diag.reserve(n);

    auto swap_vars = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(g.at(a, j), g.at(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(g.at(i, a), g.at(i, b));
    };
    // x_a -> x_a + x_b: adds row/column b into row/column a.
    auto polarize = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) g.at(a, j) = k.add(g.at(a, j), g.at(b, j));
        for (std::size_t i = 0; i < n; ++i) g.at(i, a) = k.add(g.at(i, a), g.at(i, b));
    };

    for (std::size_t s = 0; s < n; ++s) {
        // First nonzero diagonal entry at or after s.
        std::size_t d = s;
        while (d < n && k.is_zero(g.at(d, d))) ++d;
        if (d == n) {
            // Whole remaining diagonal vanishes: polarize at the first
            // nonzero off-diagonal entry (row-major order).
            std::size_t pa = n, pb = n;
            for (std::size_t i = s; i < n && pa == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!k.is_zero(g.at(i, j))) {
                        pa = i;
                        pb = j;
                        break;
                    }
            if (pa == n) {
                // Remaining block is identically zero.
                for (std::size_t i = s; i < n; ++i) diag.push_back(k.zero());
                return diag;
            }
            polarize(pa, pb); // g(pa,pa) becomes 2*g(pa,pb) != 0
            d = pa;
        }
        if (d != s) swap_vars(d, s);
        const typename K::Elem pivot = g.at(s, s);
        diag.push_back(pivot);
        for (std::size_t i = s + 1; i < n; ++i) {
            if (k.is_zero(g.at(i, s))) continue;
            const typename K::Elem f = k.div(g.at(i, s), pivot);
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = k.sub(g.at(i, j), k.mul(f, g.at(s, j)));
            for (std::size_t j = 0; j < n; ++j)
                g.at(j, i) = k.sub(g.at(j, i), k.mul(f, g.at(j, s)));
        }
    }
    return diag;
}

template <class K>
std::vector<typename K::Elem> diagonalize(const QuadSpace<K>& q) {
    return diagonalize_gram(q.k, q.gram);
}

// Quotient by the radical: the kernel of the Gram matrix is factored out and
// the induced nondegenerate form on a complement (spanned by standard basis
// vectors, chosen greedily) is returned.
template <class K>
QuadSpace<K> reduce(const PreQuadSpace<K>& p) {
    const K& k = p.k;
    const auto ker = kernel_basis(k, p.gram);
    const auto idx = complement_indices(k, ker);
    check(idx.size() + ker.cols == p.dim(), "radical reduction dimension mismatch");
    auto g = mat_select(p.gram, idx, idx);
    check(!k.is_zero(mat_det(k, g)), "reduced form is still degenerate");
    return QuadSpace<K>{k, std::move(g)};
}

template <class K>
QuadSpace<K> direct_sum(const QuadSpace<K>& a, const QuadSpace<K>& b) {
    require(same_field(a.k, b.k), "direct sum over different fields");
    const K& k = a.k;
    const std::size_t n = a.rank() + b.rank();
    Mat<typename K::Elem> g(n, n, k.zero());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) g.at(i, j) = a.gram.at(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            g.at(a.rank() + i, a.rank() + j) = b.gram.at(i, j);
    return QuadSpace<K>{k, std::move(g)};
}

// Scale the whole form by a nonzero constant.
template <class K>
QuadSpace<K> scale(const typename K::Elem& c, const QuadSpace<K>& q) {
    require(!q.k.is_zero(c), "scaling a form by zero");
    return QuadSpace<K>{q.k, mat_scale(q.k, c, q.gram)};
}

// n-fold direct sum of a space with itself.
template <class K>
QuadSpace<K> repeat_sum(const QuadSpace<K>& q, std::size_t n) {
    QuadSpace<K> acc{q.k, Mat<typename K::Elem>(0, 0, q.k.zero())};
    for (std::size_t i = 0; i < n; ++i) acc = direct_sum(acc, q);
    return acc;
}

} // namespace gwcor

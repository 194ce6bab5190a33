// Exact linear algebra over fields and over the Laurent ring.  Determinant,
// adjugate, characteristic polynomial, and kernel computation are pinned with
// frozen small cases, then validated by the algebraic identities
// M * adj(M) = det(M) * I and chi(M) = 0 on random inputs, exercising both
// the small-size cofactor path and the larger fraction-free path.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "gwcor/fields.hpp"
#include "gwcor/laurent.hpp"
#include "gwcor/matrix.hpp"

using namespace gwcor;

namespace {

const RationalField Q;

Mat<mpq_class> qmat(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    std::vector<mpq_class> v;
    for (long x : vals) v.emplace_back(x);
    return mat_make(Q, r, c, std::move(v));
}

} // namespace

TEST_CASE("determinant frozen examples") {
    REQUIRE(Q.eq(mat_det(Q, qmat(2, 2, {1, 2, 3, 4})), Q.parse("-2")));
    REQUIRE(Q.eq(mat_det(Q, qmat(1, 1, {7})), Q.from_long(7)));
    REQUIRE(Q.eq(mat_det(Q, qmat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})), Q.zero()));

    const LaurentRing<RationalField> R{Q};
    REQUIRE(R.is_one(mat_det(R, mat_identity(R, 3))));
    // [[t, 1], [0, 1/t]] has determinant 1.
    Mat<Laurent<RationalField>> m = mat_zero(R, 2, 2);
    m.at(0, 0) = R.t_power(1);
    m.at(0, 1) = R.one();
    m.at(1, 1) = R.t_power(-1);
    REQUIRE(R.is_one(mat_det(R, m)));
}

TEST_CASE("adjugate frozen examples") {
    const auto adj = mat_adjugate(Q, qmat(2, 2, {1, 2, 3, 4}));
    REQUIRE(mat_eq(Q, adj, qmat(2, 2, {4, -2, -3, 1})));
    REQUIRE(mat_eq(Q, mat_adjugate(Q, mat_identity(Q, 3)), mat_identity(Q, 3)));

    const LaurentRing<RationalField> R{Q};
    Mat<Laurent<RationalField>> m = mat_zero(R, 1, 1);
    m.at(0, 0) = R.from_pol(pol_make(Q, {mpq_class(-1), mpq_class(0), mpq_class(1)}));
    REQUIRE(mat_eq(R, mat_adjugate(R, m), mat_identity(R, 1)));
}

TEST_CASE("adjugate identity on random matrices") {
    std::srand(11);
    const PrimeField k(7);
    // Sizes on both sides of the small-matrix cutoff.
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
        for (int iter = 0; iter < 8; ++iter) {
            Mat<PrimeField::Elem> m = mat_zero(k, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = std::rand() % 7;
            const auto adj = mat_adjugate(k, m);
            const auto d = mat_det(k, m);
            REQUIRE(mat_eq(k, mat_mul(k, m, adj), mat_scale(k, d, mat_identity(k, n))));
            REQUIRE(mat_eq(k, mat_mul(k, adj, m), mat_scale(k, d, mat_identity(k, n))));
        }
    }
}

TEST_CASE("adjugate identity over the laurent ring") {
    std::srand(13);
    const PrimeField k(5);
    const LaurentRing<PrimeField> R{k};
    for (std::size_t n : {2u, 3u, 5u}) {
        Mat<Laurent<PrimeField>> m = mat_zero(R, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<PrimeField::Elem> c(1 + std::rand() % 3);
                for (auto& x : c) x = std::rand() % 5;
                m.at(i, j) = R.make(std::rand() % 3 - 1, pol_make(k, std::move(c)));
            }
        const auto adj = mat_adjugate(R, m);
        const auto d = mat_det(R, m);
        REQUIRE(mat_eq(R, mat_mul(R, m, adj), mat_scale(R, d, mat_identity(R, n))));
        REQUIRE(mat_eq(R, mat_mul(R, adj, m), mat_scale(R, d, mat_identity(R, n))));
    }
}

TEST_CASE("characteristic polynomial frozen examples") {
    const LaurentRing<RationalField> R{Q};
    // Swap matrix: chi = x^2 - 1.
    const auto chi1 = mat_charpoly(Q, qmat(2, 2, {0, 1, 1, 0}));
    REQUIRE(pol_eq(Q, chi1, pol_make(Q, {mpq_class(-1), mpq_class(0), mpq_class(1)})));
    // Rotation matrix: chi = x^2 + 1.
    const auto chi2 = mat_charpoly(Q, qmat(2, 2, {0, 1, -1, 0}));
    REQUIRE(pol_eq(Q, chi2, pol_make(Q, {mpq_class(1), mpq_class(0), mpq_class(1)})));
    // Over the Laurent ring, [[t]] has chi = x - t.
    Mat<Laurent<RationalField>> m = mat_zero(R, 1, 1);
    m.at(0, 0) = R.t_power(1);
    const auto chi3 = mat_charpoly(R, m);
    REQUIRE(chi3.c.size() == 2);
    REQUIRE(R.eq(chi3.c[0], R.neg(R.t_power(1))));
    REQUIRE(R.is_one(chi3.c[1]));
}

TEST_CASE("cayley hamilton on random matrices") {
    std::srand(17);
    const PrimeField k(11);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (int iter = 0; iter < 6; ++iter) {
            Mat<PrimeField::Elem> m = mat_zero(k, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = std::rand() % 11;
            const auto chi = mat_charpoly(k, m);
            REQUIRE(pol_is_monic(k, chi));
            REQUIRE(pol_deg(chi) == static_cast<long>(n));
            const auto val = mat_eval_pol(k, chi, m);
            REQUIRE(mat_eq(k, val, mat_zero(k, n, n)));
        }
    }
}

TEST_CASE("kernel basis frozen examples") {
    const auto ker1 = kernel_basis(Q, qmat(2, 2, {1, 1, 1, 1}));
    REQUIRE(ker1.cols == 1);
    // The kernel of the all-ones matrix is spanned by (1, -1), scaled so the
    // first nonzero entry is 1.
    REQUIRE(Q.eq(ker1.at(0, 0), Q.one()));
    REQUIRE(Q.eq(ker1.at(1, 0), Q.from_long(-1)));

    REQUIRE(kernel_basis(Q, mat_identity(Q, 3)).cols == 0);
    REQUIRE(kernel_basis(Q, qmat(2, 2, {0, 0, 0, 0})).cols == 2);
    REQUIRE(mat_rank(Q, qmat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
}

TEST_CASE("kernel vectors are annihilated") {
    std::srand(23);
    const PrimeField k(13);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t r = 1 + std::rand() % 4, c = 1 + std::rand() % 4;
        Mat<PrimeField::Elem> m = mat_zero(k, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::rand() % 13;
        const auto ker = kernel_basis(k, m);
        REQUIRE(ker.cols == c - mat_rank(k, m));
        if (ker.cols > 0) {
            const auto prod = mat_mul(k, m, ker);
            REQUIRE(mat_eq(k, prod, mat_zero(k, r, ker.cols)));
            REQUIRE(mat_rank(k, ker) == ker.cols);
        }
    }
}

TEST_CASE("inverse and structural helpers") {
    const auto m = qmat(2, 2, {2, 1, 1, 1});
    const auto inv = mat_inverse(Q, m);
    REQUIRE(mat_eq(Q, mat_mul(Q, m, inv), mat_identity(Q, 2)));
    REQUIRE_THROWS_AS(mat_inverse(Q, qmat(2, 2, {1, 2, 2, 4})), math_check_error);

    REQUIRE(mat_is_symmetric(Q, qmat(2, 2, {1, 5, 5, 2})));
    REQUIRE(!mat_is_symmetric(Q, qmat(2, 2, {1, 5, 4, 2})));

    // 2x2 grid of 1x1 blocks assembles in row-major block order.
    const auto blocks = mat_from_blocks(
        Q, {{qmat(1, 1, {1}), qmat(1, 1, {2})}, {qmat(1, 1, {3}), qmat(1, 1, {4})}});
    REQUIRE(mat_eq(Q, blocks, qmat(2, 2, {1, 2, 3, 4})));

    const auto p = mat_pow(Q, qmat(2, 2, {1, 1, 0, 1}), 5);
    REQUIRE(mat_eq(Q, p, qmat(2, 2, {1, 5, 0, 1})));
}

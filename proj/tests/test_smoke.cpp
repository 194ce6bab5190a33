// End-to-end smoke checks: every layer is touched once with tiny inputs, so
// a broken include or template instantiation fails fast and close to home.

#include <catch2/catch_amalgamated.hpp>

#include "gwcor/cancel.hpp"
#include "gwcor/json_io.hpp"
#include "gwcor/verify.hpp"

using namespace gwcor;

TEST_CASE("rational field basics") {
    const RationalField k;
    REQUIRE(k.eq(k.add(k.parse("1/2"), k.parse("1/3")), k.parse("5/6")));
    REQUIRE(k.is_square(k.parse("4/9")));
    REQUIRE(!k.is_square(k.parse("-4/9")));
    REQUIRE(k.eq(k.square_class(k.parse("8/2")), k.one()));
}

TEST_CASE("prime field basics") {
    const PrimeField k(7);
    REQUIRE(k.eq(k.mul(k.from_long(3), k.from_long(5)), k.one()));
    REQUIRE(k.eq(k.inv(k.from_long(3)), k.from_long(5)));
    REQUIRE(k.least_nonresidue() == 3);
}

TEST_CASE("laurent arithmetic and normalization") {
    const LaurentRing<RationalField> R{RationalField{}};
    const auto a = R.make(2, pol_make(R.k, {mpq_class(-2), mpq_class(2)})); // 2t^3 - 2t^2
    const auto nf = laurent_normalize(R, a);
    REQUIRE(nf.c == 2);
    REQUIRE(nf.v == 2);
    REQUIRE(pol_eq(R.k, nf.monic, pol_make(R.k, {mpq_class(-1), mpq_class(1)})));
}

TEST_CASE("determinant over the laurent ring") {
    const LaurentRing<RationalField> R{RationalField{}};
    auto m = mat_zero(R, 2, 2);
    m.at(0, 0) = R.t_power(1);
    m.at(0, 1) = R.one();
    m.at(1, 1) = R.t_power(-1);
    REQUIRE(R.eq(mat_det(R, m), R.one()));
}

TEST_CASE("residue space of t^2 - 1 in both modes") {
    const RationalField k;
    const LaurentRing<RationalField> R{k};
    const auto n = R.from_pol(pol_make(k, {mpq_class(-1), mpq_class(0), mpq_class(1)}));
    const auto coeff = residue_space(R, n, ResidueMode::coefficient);
    REQUIRE(k.eq(coeff.space.gram.at(0, 0), mpq_class(0)));
    REQUIRE(k.eq(coeff.space.gram.at(0, 1), mpq_class(1)));
    const auto junior = residue_space(R, n, ResidueMode::junior_trace);
    REQUIRE(k.eq(junior.space.gram.at(0, 0), mpq_class(2)));
    REQUIRE(k.eq(junior.space.gram.at(1, 1), mpq_class(2)));
    REQUIRE(k.eq(junior.space.gram.at(0, 1), mpq_class(0)));
}

TEST_CASE("rank-one round trip over F5") {
    const PrimeField k(5);
    const auto cls = rho_n(boxtimes_gm(diag_space(k, {k.one()})), 2);
    REQUIRE(cls.rank() == 1);
    const auto beta = beta_calibrate(k, 2);
    REQUIRE((beta == 1 || beta == 2));
}

TEST_CASE("json round trip for a form") {
    const RationalField k;
    const auto q = diag_space(k, {mpq_class(2), mpq_class(-1, 2)});
    const auto j = quadspace_to_json(q);
    const auto back = quadspace_from_json(k, j);
    REQUIRE(mat_eq(k, back.gram, q.gram));
}

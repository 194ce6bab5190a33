// The shift/cancellation pipeline: shift matrices, determinant norms,
// adjugate cofactors, degree-matched triple pairs, the reduced pairing a
// triple induces, the unit calibration, and the round-trip, fiber, and
// naturality checks built on top of them.

#include <catch2/catch_amalgamated.hpp>

#include "gwcor/cancel.hpp"
#include "gwcor/verify.hpp"

using namespace gwcor;

namespace {

const RationalField Q;
const LaurentRing<RationalField> RQ{Q};

QuadSpace<RationalField> qdiag(std::initializer_list<long> d) {
    std::vector<mpq_class> v;
    for (long x : d) v.emplace_back(x);
    return diag_space(Q, v);
}

// Gram I, action diag(-t, t): valid, but its twisted shift at n = 1 is
// singular, which the stability bound must anticipate.
Correspondence<RationalField> diag_pm_t() {
    Correspondence<RationalField> c{Q, AffineModel::Gm, AffineModel::Gm, 2,
                                    mat_identity(RQ, 2), mat_zero(RQ, 2, 2)};
    c.action.at(0, 0) = RQ.neg(RQ.t_power(1));
    c.action.at(1, 1) = RQ.t_power(1);
    return c;
}

} // namespace

TEST_CASE("shift matrices frozen examples") {
    const auto id = identity_gm(Q);
    const auto m1 = mf_matrix(id, fspec_minus(2)); // t^2 I - U = [t^2 - t]
    REQUIRE(m1.rows == 1);
    REQUIRE(RQ.eq(m1.at(0, 0), RQ.make(1, pol_make(Q, {mpq_class(-1), mpq_class(1)}))));

    const auto m2 = mf_matrix(id, fspec_plus(2)); // (t^2 - 1) I
    REQUIRE(RQ.eq(m2.at(0, 0), RQ.sub(RQ.t_power(2), RQ.one())));

    const auto m3 = mf_matrix(unit_gm(Q), fspec_minus(1)); // t I - I
    REQUIRE(RQ.eq(m3.at(0, 0), RQ.sub(RQ.t_power(1), RQ.one())));

    REQUIRE_THROWS_AS(fspec_plus(0), input_error);
    REQUIRE_THROWS_AS(fspec_minus(-2), input_error);
}

TEST_CASE("determinant norms frozen examples") {
    const auto id = identity_gm(Q);
    for (long n : {1L, 2L, 3L})
        REQUIRE(RQ.eq(det_norm(id, fspec_plus(n)), RQ.sub(RQ.t_power(n), RQ.one())));
    REQUIRE(RQ.eq(det_norm(id, fspec_minus(2)),
                  RQ.make(1, pol_make(Q, {mpq_class(-1), mpq_class(1)}))));

    const auto box = boxtimes_gm(qdiag({1, 1}));
    const auto tsq = RQ.sub(RQ.t_power(2), RQ.one());
    REQUIRE(RQ.eq(det_norm(box, fspec_plus(2)), RQ.mul(tsq, tsq)));

    REQUIRE(RQ.eq(det_norm(unit_gm(Q), fspec_minus(1)),
                  RQ.sub(RQ.t_power(1), RQ.one())));

    // diag(-t, t) action: (t + t)(t - t) = 0, so the n = 1 minus shift is
    // rejected as not applicable.
    REQUIRE_THROWS_AS(det_norm(diag_pm_t(), fspec_minus(1)), input_error);
    // At n = 2 it is fine: (t^2 + t)(t^2 - t) = t^4 - t^2.
    REQUIRE(RQ.eq(det_norm(diag_pm_t(), fspec_minus(2)),
                  RQ.sub(RQ.t_power(4), RQ.t_power(2))));
}

TEST_CASE("adjugate cofactors frozen examples") {
    const auto id = identity_gm(Q);
    const auto g1 = adjugate_g(id, fspec_minus(2));
    REQUIRE(g1.rows == 1);
    REQUIRE(RQ.is_one(g1.at(0, 0)));

    const auto box = boxtimes_gm(qdiag({1, 1}));
    const auto g2 = adjugate_g(box, fspec_plus(2));
    const auto tsq = RQ.sub(RQ.t_power(2), RQ.one());
    REQUIRE(RQ.eq(g2.at(0, 0), tsq));
    REQUIRE(RQ.eq(g2.at(1, 1), tsq));
    REQUIRE(RQ.is_zero(g2.at(0, 1)));
}

TEST_CASE("cofactor identities on random inputs") {
    Rng rng(4242);
    const PrimeField F7(7);
    int done = 0;
    while (done < 8) {
        const auto c = rand_corr(F7, rng, 3, 1);
        const LaurentRing<PrimeField> R{F7};
        const long n = stability_bound(c).n_p + 1 + rng.pick(0, 1);
        for (const auto f : {fspec_plus(n), fspec_minus(n)}) {
            Laurent<PrimeField> d{};
            try {
                d = det_norm(c, f);
            } catch (const input_error&) {
                goto next_draw; // vanishing minus norm for this draw
            }
            {
                const auto g = adjugate_g(c, f); // identities asserted inside
                const auto mf = mf_matrix(c, f);
                auto dI = mat_zero(R, c.rank, c.rank);
                for (std::size_t i = 0; i < c.rank; ++i) dI.at(i, i) = d;
                REQUIRE(mat_eq(R, mat_mul(R, mf, g), dI));
                REQUIRE(mat_eq(R, mat_mul(R, c.gram, g),
                               mat_mul(R, mat_transpose(g), c.gram)));
            }
        }
        ++done;
    next_draw:;
    }
}

TEST_CASE("degree matched triple pairs") {
    const auto id = identity_gm(Q);
    const auto bt = make_bitriple(id, 2);
    REQUIRE(bt.n == 2);
    REQUIRE(bt.m == 2);
    REQUIRE(RQ.eq(bt.plus.norm, RQ.sub(RQ.t_power(2), RQ.one())));
    REQUIRE(RQ.eq(bt.minus.norm, RQ.make(1, pol_make(Q, {mpq_class(-1), mpq_class(1)}))));

    // Requesting a larger degree pads both norms up to it.
    const auto bt4 = make_bitriple(id, 2, 4);
    REQUIRE(bt4.m == 4);
    REQUIRE(RQ.top_degree(bt4.plus.norm) == 4);
    REQUIRE(RQ.top_degree(bt4.minus.norm) == 4);
    // The plus pad avoids -1 as its bottom: (t^2 - 1)(t^2 + 1) = t^4 - 1.
    REQUIRE(RQ.eq(bt4.plus.norm, RQ.sub(RQ.t_power(4), RQ.one())));

    // The exponent must clear the stability bound (n_p = 1 for the identity).
    REQUIRE_THROWS_AS(make_bitriple(id, 1), input_error);
    // A target degree below the canonical norm degree is impossible.
    REQUIRE_THROWS_AS(make_bitriple(id, 2, 1), input_error);

    REQUIRE_THROWS_AS(make_triple_padded(id, fspec_plus(2), 4, Q.zero()), input_error);
}

TEST_CASE("reduced pairings of the identity triples") {
    const auto id = identity_gm(Q);
    const auto bt = make_bitriple(id, 2);

    const auto minus_space = rho_triple(id, bt.minus);
    REQUIRE(minus_space.rank() == 1);
    REQUIRE(Q.eq(minus_space.gram.at(0, 0), Q.one()));

    const auto plus_space = rho_triple(id, bt.plus);
    REQUIRE(plus_space.rank() == 2);
    REQUIRE(gw_equal(plus_space, hyperbolic_space(Q)));
}

TEST_CASE("padding independence of the reduced pairing") {
    const auto id = identity_gm(Q);
    for (const auto f : {fspec_plus(2), fspec_minus(2)}) {
        const auto a = rho_triple(id, make_triple_padded(id, f, 4, Q.one()));
        const auto b = rho_triple(id, make_triple_padded(id, f, 4, Q.from_long(-3)));
        const auto c = rho_triple(id, make_triple_padded(id, f, 5, Q.from_long(2)));
        REQUIRE(gw_equal(a, b));
        // Same class at a different matched degree as well.
        REQUIRE(witt_equal(a, c));
        REQUIRE(gw_equal(class_of(a), class_of(c)));
    }
}

TEST_CASE("unit calibration golden values") {
    for (long n : {2L, 3L, 4L})
        REQUIRE(Q.eq(beta_calibrate(Q, n), Q.from_long(-1)));

    const PrimeField F5(5);
    for (long n : {2L, 3L})
        REQUIRE(F5.eq(beta_calibrate(F5, n), F5.from_long(1)));

    const PrimeField F7(7);
    for (long n : {2L, 3L})
        REQUIRE(F7.eq(beta_calibrate(F7, n), F7.from_long(3)));

    REQUIRE_THROWS_AS(beta_calibrate(Q, 1), input_error);
}

TEST_CASE("sum level values") {
    // The four-term expansion of the boxed <1> reduces to the calibration
    // class <-1> over the rationals.
    const auto cls = rho_n(dot_expand(boxtimes_gm(qdiag({1}))), 2);
    REQUIRE(gw_equal(cls, class_of(qdiag({-1}))));

    // The unit section contributes nothing.
    REQUIRE(gw_equal(rho_n(unit_gm(Q), 2), class_zero(Q)));
    REQUIRE(gw_equal(rho_n(unit_gm(Q), 3), class_zero(Q)));
}

TEST_CASE("round trip on sample forms") {
    const auto r1 = left_inverse_check(qdiag({1}), 2);
    REQUIRE(r1.pass);
    REQUIRE(Q.eq(r1.beta, Q.from_long(-1)));

    const auto r2 = left_inverse_check(qdiag({2}), 3);
    REQUIRE(r2.pass);

    const PrimeField F5(5);
    const auto r3 = left_inverse_check(diag_space(F5, {F5.one(), F5.from_long(3)}), 2);
    REQUIRE(r3.pass);
}

TEST_CASE("fiber forms over off diagonal points") {
    const auto r1 = permutation_fiber_check(Q, Q.from_long(2), Q.from_long(5));
    REQUIRE(r1.pass());
    REQUIRE(r1.residue_inv.rank == 2);

    const PrimeField F7(7);
    const auto r2 = permutation_fiber_check(F7, F7.one(), F7.from_long(3));
    REQUIRE(r2.pass());

    // The junior-trace flavor computes the classical trace pairing instead,
    // which at (2, 5) is positive definite ([[2,7],[7,29]]): it fails both
    // halves of the fiber identity, and only the top-coefficient flavor
    // satisfies it.  This is the discrimination between the two functionals.
    const auto r3 = permutation_fiber_check(Q, Q.from_long(2), Q.from_long(5),
                                            ResidueMode::junior_trace);
    REQUIRE(!r3.pass_split);
    REQUIRE(!r3.pass_metabolic);

    REQUIRE_THROWS_AS(permutation_fiber_check(Q, Q.one(), Q.one()), input_error);
    REQUIRE_THROWS_AS(permutation_fiber_check(Q, Q.zero(), Q.one()), input_error);
}

TEST_CASE("naturality of the boxed pipeline") {
    const auto r1 = naturality_boxtimes_check(qdiag({1}), 2);
    REQUIRE(r1.pass);
    REQUIRE(r1.samples == 3);

    const PrimeField F3(3);
    const auto r2 = naturality_boxtimes_check(diag_space(F3, {F3.one()}), 2);
    REQUIRE(r2.pass);
    REQUIRE(r2.samples == 2); // only two units below 4 exist mod 3
}

// Base-field scalar arithmetic: exact rationals and odd prime fields.
// Everything here is checked against first-principles definitions (Fermat
// inverses, explicit square lists, canonical square-free representatives).

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gwcor/fields.hpp"

using namespace gwcor;

TEST_CASE("rational canonical form and parsing") {
    const RationalField k;
    REQUIRE(k.str(k.parse("-4/-6")) == "2/3");
    REQUIRE(k.str(k.parse("4/2")) == "2");
    REQUIRE(k.str(k.parse("0/5")) == "0");
    REQUIRE(k.eq(k.parse("7"), k.from_long(7)));
    REQUIRE_THROWS_AS(k.parse("1/0"), input_error);
    REQUIRE_THROWS_AS(k.parse("abc"), input_error);
    REQUIRE_THROWS_AS(k.parse(""), input_error);
}

TEST_CASE("rational field operations") {
    const RationalField k;
    REQUIRE(k.eq(k.add(k.parse("1/6"), k.parse("1/3")), k.parse("1/2")));
    REQUIRE(k.eq(k.mul(k.parse("-2/3"), k.parse("9/4")), k.parse("-3/2")));
    REQUIRE(k.eq(k.inv(k.parse("-5/7")), k.parse("-7/5")));
    REQUIRE(k.eq(k.sub(k.one(), k.one()), k.zero()));
    REQUIRE_THROWS_AS(k.inv(k.zero()), math_check_error);
}

TEST_CASE("rational squares and square classes") {
    const RationalField k;
    REQUIRE(k.is_square(k.parse("4/9")));
    REQUIRE(!k.is_square(k.parse("-4/9")));
    REQUIRE(!k.is_square(k.parse("2")));
    // Canonical representative: square-free integer carrying the sign.
    REQUIRE(k.eq(k.square_class(k.parse("8")), k.from_long(2)));
    REQUIRE(k.eq(k.square_class(k.parse("-12")), k.from_long(-3)));
    REQUIRE(k.eq(k.square_class(k.parse("4/9")), k.one()));
    REQUIRE(k.eq(k.square_class(k.parse("18/5")), k.from_long(10)));
    REQUIRE(k.same_square_class(k.parse("2"), k.parse("1/2")));
    REQUIRE(!k.same_square_class(k.parse("2"), k.parse("-2")));
    REQUIRE_THROWS_AS(k.square_class(k.zero()), input_error);
}

TEST_CASE("prime field construction guards") {
    REQUIRE_THROWS_AS(PrimeField(2), input_error);
    REQUIRE_THROWS_AS(PrimeField(1), input_error);
    REQUIRE_THROWS_AS(PrimeField(9), input_error);
    REQUIRE_THROWS_AS(PrimeField(std::uint64_t(1) << 31), input_error);
    REQUIRE(PrimeField(3).modulus() == 3);
    REQUIRE(PrimeField(2147483647).modulus() == 2147483647); // 2^31 - 1 is prime
}

TEST_CASE("prime field inverses agree with exhaustive search") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        const PrimeField k(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            const auto b = k.inv(a);
            REQUIRE(k.eq(k.mul(a, b), k.one()));
        }
    }
    REQUIRE_THROWS_AS(PrimeField(5).inv(0), math_check_error);
}

TEST_CASE("legendre symbols match explicit square lists") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        const PrimeField k(p);
        std::set<std::uint64_t> squares;
        for (std::uint64_t a = 1; a < p; ++a) squares.insert(k.mul(a, a));
        for (std::uint64_t a = 1; a < p; ++a)
            REQUIRE(k.legendre(a) == (squares.count(a) ? +1 : -1));
        REQUIRE(k.legendre(0) == 0);
    }
}

TEST_CASE("least non-residues and square classes mod p") {
    REQUIRE(PrimeField(3).least_nonresidue() == 2);
    REQUIRE(PrimeField(5).least_nonresidue() == 2);
    REQUIRE(PrimeField(7).least_nonresidue() == 3);
    REQUIRE(PrimeField(11).least_nonresidue() == 2);
    const PrimeField k(7);
    REQUIRE(k.eq(k.square_class(2), k.one()));          // 2 = 3^2 mod 7
    REQUIRE(k.eq(k.square_class(5), k.from_long(3)));   // 5 is a non-square
    REQUIRE(k.same_square_class(3, 5));
    REQUIRE(!k.same_square_class(1, 3));
}

TEST_CASE("prime field parsing reduces arbitrary integers") {
    const PrimeField k(7);
    REQUIRE(k.eq(k.parse("-1"), k.from_long(6)));
    REQUIRE(k.eq(k.parse("700000000000000000003"), k.from_long(3)));
    REQUIRE_THROWS_AS(k.parse("2/3"), input_error);
    REQUIRE_THROWS_AS(k.parse(""), input_error);
    REQUIRE(k.str(k.parse("13")) == "6");
}

TEST_CASE("from_long wraps negatives into the canonical range") {
    const PrimeField k(5);
    REQUIRE(k.eq(k.from_long(-1), k.from_long(4)));
    REQUIRE(k.eq(k.from_long(-10), k.zero()));
    const RationalField q;
    REQUIRE(q.eq(q.from_long(-3), q.parse("-3")));
}

#include "doctest.h"

#include "helpers.hpp"
#include "osswb/errors.hpp"
#include "osswb/poly.hpp"

using namespace osswb;
using osswb::testing::random_polynomial;

TEST_CASE("chart coordinate layout") {
    Chart c(2);
    CHECK(c.dim() == 6);
    CHECK(c.coord_name(0) == "u1");
    CHECK(c.coord_name(1) == "u2");
    CHECK(c.coord_name(2) == "v1");
    CHECK(c.coord_name(4) == "t1");
    CHECK(c.coord_name(5) == "t2");
    CHECK(c.coord_index("t2") == 5);
    CHECK(c.u(1) == 1);
    CHECK(c.v(0) == 2);
    CHECK(c.t(1) == 5);
    CHECK_THROWS_AS((void)c.coord_index("w1"), UnknownCoordinate);
}

TEST_CASE("polynomial arithmetic examples") {
    Chart c(2);
    auto u1 = Polynomial::variable(c, c.coord_index("u1"));
    auto u2 = Polynomial::variable(c, c.coord_index("u2"));
    auto t2 = Polynomial::variable(c, c.coord_index("t2"));

    CHECK((u1 - u1).is_zero());

    auto p = Rational(-4, 3) * u2 * t2;
    CHECK((p + Rational(4, 3) * u2 * t2).is_zero());
    CHECK(p.terms().size() == 1);
    CHECK(p.coefficient({0, 1, 0, 0, 0, 1}) == Rational(-4, 3));

    Chart other(3);
    auto q = Polynomial::variable(other, 0);
    CHECK_THROWS_AS((void)(u1 + q), ChartMismatch);
}

TEST_CASE("partial derivatives") {
    Chart c(2);
    auto u1 = Polynomial::variable(c, 0);
    auto u2 = Polynomial::variable(c, 1);
    auto t2 = Polynomial::variable(c, 5);

    auto p = Rational(-2) * u2 * t2;
    CHECK(p.partial("t2") == Rational(-2) * u2);
    CHECK(p.partial("v1").is_zero());
    CHECK((u1 * u2).partial("u1") == u2);
    CHECK(Polynomial::constant(c, Rational(7)).partial(0).is_zero());
    CHECK_THROWS_AS((void)p.partial("x9"), UnknownCoordinate);
}

TEST_CASE("evaluation examples") {
    Chart c(2);
    auto u1 = Polynomial::variable(c, 0);
    auto u2 = Polynomial::variable(c, 1);
    auto t2 = Polynomial::variable(c, 5);

    auto p = Rational(-4, 3) * u2 * t2;
    CHECK(p.eval({1, 1, 0, 0, 1, 1}) == Rational(-4, 3));
    CHECK((u1 * u2).eval({2, 3, 0, 0, 0, 0}) == 6);
    CHECK(Polynomial::constant(c, Rational(5, 2)).eval({0, 0, 0, 0, 0, 0}) ==
          Rational(5, 2));
    CHECK_THROWS_AS((void)p.eval({1, 2, 3}), DimensionMismatch);
}

TEST_CASE("ring laws on random polynomials") {
    Chart c(2);
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_polynomial(c, rng);
        auto b = random_polynomial(c, rng);
        auto d = random_polynomial(c, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("mixed partials commute") {
    Chart c(2);
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_polynomial(c, rng);
        for (int i = 0; i < c.dim(); ++i)
            for (int j = i + 1; j < c.dim(); ++j)
                CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Chart c(2);
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_polynomial(c, rng);
        auto b = random_polynomial(c, rng);
        auto pt = osswb::testing::random_point(rng, c.dim());
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("Leibniz rule for partials") {
    Chart c(2);
    SplitMix64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_polynomial(c, rng);
        auto b = random_polynomial(c, rng);
        for (int i = 0; i < c.dim(); ++i)
            CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
    }
}

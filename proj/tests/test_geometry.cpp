#include "doctest.h"

#include "helpers.hpp"
#include "osswb/errors.hpp"
#include "osswb/geometry.hpp"
#include "osswb/jordan.hpp"

using namespace osswb;
using namespace osswb::testing;

namespace {

bool gamma_equal(const ChristoffelFirstKind& a, const ChristoffelFirstKind& b) {
    const int n = a.chart().dim();
    if (b.chart().dim() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (a.at(i, j, k) != b.at(i, j, k)) return false;
    return true;
}

}  // namespace

TEST_CASE("family metric coefficients, frozen") {
    Chart c(2);
    auto m = nil3_polynomial_metric(2, csc_tensor(2));
    auto u1 = Polynomial::variable(c, c.u(0));
    auto u2 = Polynomial::variable(c, c.u(1));
    auto t1 = Polynomial::variable(c, c.t(0));
    auto t2 = Polynomial::variable(c, c.t(1));

    CHECK(m.entry(c.u(0), c.u(0)) == Rational(-4, 3) * u2 * t2);
    CHECK(m.entry(c.u(1), c.u(1)) == Rational(-4, 3) * u1 * t1);
    CHECK(m.entry(c.u(0), c.u(1)) == Rational(2, 3) * (u2 * t1 + u1 * t2));
    CHECK(m.entry(c.u(0), c.v(0)) == Polynomial::constant(c, 1));
    CHECK(m.entry(c.u(0), c.v(1)).is_zero());
    CHECK(m.entry(c.v(0), c.v(0)).is_zero());
    CHECK(m.entry(c.t(0), c.t(0)) == Polynomial::constant(c, -1));
    CHECK(m.entry(c.t(0), c.t(1)).is_zero());
    CHECK(m.entry(c.u(1), c.u(0)) == m.entry(c.u(0), c.u(1)));
}

TEST_CASE("example metric coefficients, frozen") {
    Chart c(2);
    auto m = nil3_example_metric();
    auto u1 = Polynomial::variable(c, c.u(0));
    auto u2 = Polynomial::variable(c, c.u(1));
    auto t1 = Polynomial::variable(c, c.t(0));
    auto t2 = Polynomial::variable(c, c.t(1));

    CHECK(m.entry(c.u(0), c.u(0)) == Rational(-2) * u2 * t2);
    CHECK(m.entry(c.u(1), c.u(1)) == Rational(-2) * u1 * t1);
    CHECK(m.entry(c.u(0), c.u(1)) == u1 * u2);
    CHECK(m.entry(c.u(0), c.v(0)) == Polynomial::constant(c, 1));
    CHECK(m.entry(c.t(1), c.t(1)) == Polynomial::constant(c, -1));
}

TEST_CASE("christoffel symbols of the first kind") {
    Chart c(2);
    auto flat = nil3_polynomial_metric(2, CurvatureTensor(2));
    auto gf = christoffel_first(flat);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) CHECK(gf.at(i, j, k).is_zero());

    auto m = nil3_polynomial_metric(2, csc_tensor(2));
    auto g = christoffel_first(m);
    auto u2 = Polynomial::variable(c, c.u(1));
    CHECK(g.at(c.u(0), c.u(0), c.t(1)) == Rational(2, 3) * u2);
    CHECK(g.at(c.v(0), c.v(0), c.u(0)).is_zero());
    // symmetric in the first two indices by construction
    SplitMix64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        int i = static_cast<int>(rng.uniform(0, 5));
        int j = static_cast<int>(rng.uniform(0, 5));
        int k = static_cast<int>(rng.uniform(0, 5));
        CHECK(g.at(i, j, k) == g.at(j, i, k));
    }
}

TEST_CASE("closed-form christoffel oracle agrees with differentiation") {
    SplitMix64 rng(52);
    for (int s : {2, 3}) {
        CHECK(gamma_equal(christoffel_first(nil3_polynomial_metric(s, csc_tensor(s))),
                          christoffel_closed_form(s, csc_tensor(s))));
        auto r2 = random_u_tensor(rng, s);
        CHECK(gamma_equal(christoffel_first(nil3_polynomial_metric(s, r2)),
                          christoffel_closed_form(s, r2)));
    }
}

TEST_CASE("curvature of a flat metric vanishes") {
    auto flat = nil3_polynomial_metric(2, CurvatureTensor(2));
    SplitMix64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        auto pt = random_point(rng, 6);
        CHECK(curvature_at(flat, pt).tensor.is_zero());
    }
}

TEST_CASE("curvature sign convention, frozen") {
    Chart c(2);
    auto m = nil3_polynomial_metric(2, csc_tensor(2));
    auto cap = curvature_at(m, {0, 0, 0, 0, 0, 0});
    CHECK(cap.tensor.get(c.u(1), c.u(0), c.u(0), c.t(1)) == 1);
    CHECK(cap.tensor.get(c.u(0), c.u(1), c.u(1), c.t(0)) == 1);
}

TEST_CASE("realization check") {
    SplitMix64 rng(54);
    for (int s : {2, 3}) {
        auto r2 = csc_tensor(s);
        auto m = nil3_polynomial_metric(s, r2);
        for (int trial = 0; trial < 3; ++trial) {
            auto pt = random_point(rng, 3 * s);
            auto res = realize_check(m, r2, pt);
            CHECK(res.pass);
            CHECK(res.mismatches.empty());
            CHECK(validate_curvature_symmetries(res.u_block).empty());
        }
    }
    // flat metric does not realize a nonzero one-T block
    auto flat = nil3_polynomial_metric(2, CurvatureTensor(2));
    auto res = realize_check(flat, csc_tensor(2), {1, 2, 0, 0, 3, 4});
    CHECK(!res.pass);
    CHECK(!res.mismatches.empty());
}

TEST_CASE("reduced contraction and raised-index relations") {
    SplitMix64 rng(55);
    for (int s : {2, 3}) {
        auto m = nil3_polynomial_metric(s, csc_tensor(s));
        auto gamma = christoffel_first(m);
        for (int trial = 0; trial < 3; ++trial) {
            auto pt = random_point(rng, 3 * s);
            CHECK(raised_index_relations_hold(m, gamma, pt));
            auto full = curvature_at(m, gamma, pt);
            auto reduced = curvature_at_reduced(m, gamma, pt);
            CHECK(full.tensor == reduced.tensor);
        }
    }
    auto ex = nil3_example_metric();
    auto gamma = christoffel_first(ex);
    auto pt = random_point(rng, 6);
    CHECK(raised_index_relations_hold(ex, gamma, pt));
    CHECK(curvature_at(ex, gamma, pt).tensor ==
          curvature_at_reduced(ex, gamma, pt).tensor);
}

TEST_CASE("pointwise signature") {
    auto ex = nil3_example_metric();
    CHECK(metric_signature_at(ex, {0, 0, 0, 0, 0, 0}) == Signature{4, 2, 0});
    CHECK(metric_signature_at(ex, {2, -5, -2, -1, 5, -3}) == Signature{4, 2, 0});

    SplitMix64 rng(56);
    auto m3 = nil3_polynomial_metric(3, csc_tensor(3));
    for (int trial = 0; trial < 5; ++trial) {
        auto pt = random_point(rng, 9);
        CHECK(metric_signature_at(m3, pt) == Signature{6, 3, 0});
        auto d = det(m3.gram_at(pt));
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("pointwise jacobi operators of the example metric are nilpotent") {
    auto ex = nil3_example_metric();
    std::vector<Rational> pt{2, -5, -2, -1, 5, -3};
    auto cap = curvature_at(ex, pt);
    InnerProduct g(cap.gram);
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto x = sample_vector_adaptive(g, CausalType::Spacelike, 9, 10, i);
        auto j = jacobi(cap.tensor, g, x).op;
        CHECK((j * j * j).is_zero());
        auto rs = rank_sequence(j);
        CHECK(rs.nilpotency_order() == 3);
        CHECK(partition_from_ranks(rs).blocks == std::vector<int>{3, 1, 1, 1});
    }
}

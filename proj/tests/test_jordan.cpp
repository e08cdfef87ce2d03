#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "osswb/errors.hpp"
#include "osswb/jordan.hpp"

using namespace osswb;
using namespace osswb::testing;

namespace {

InnerProduct family_inner(int s) { return nil3_inner_product(s, RatMatrix(s, s)); }

CurvatureTensor family_tensor(int s) {
    return nil3_curvature(CurvatureTensor(s), csc_tensor(s));
}

}  // namespace

TEST_CASE("rank sequence examples") {
    auto z = rank_sequence(RatMatrix(6, 6));
    CHECK(z.ranks.empty());
    CHECK(z.nilpotency_order() == 1);

    RatMatrix j(6, 6);
    j(5, 1) = -1;
    j(3, 5) = 1;
    auto rs = rank_sequence(j);
    CHECK(rs.ranks == std::vector<int>{2, 1});
    CHECK(rs.nilpotency_order() == 3);

    CHECK_THROWS_AS((void)rank_sequence(RatMatrix::identity(3)), NonNilpotent);
    CHECK_THROWS_AS((void)rank_sequence(RatMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("partition from ranks") {
    RankSequence r;
    r.dim = 6;
    r.ranks = {2, 1};
    CHECK(partition_from_ranks(r).blocks == std::vector<int>{3, 1, 1, 1});

    RankSequence id;
    id.dim = 6;
    CHECK(partition_from_ranks(id).blocks == std::vector<int>(6, 1));

    RankSequence one;
    one.dim = 4;
    one.ranks = {2};
    CHECK(partition_from_ranks(one).blocks == std::vector<int>{2, 2});

    RankSequence bad;
    bad.dim = 4;
    bad.ranks = {3, 1};
    CHECK_THROWS_AS((void)partition_from_ranks(bad), InvalidSequence);

    // family profile: ranks [2(s-1), s-1] on dim 3s
    for (int s = 2; s <= 5; ++s) {
        RankSequence f;
        f.dim = 3 * s;
        f.ranks = {2 * (s - 1), s - 1};
        std::vector<int> want(static_cast<std::size_t>(s - 1), 3);
        want.insert(want.end(), 3, 1);
        CHECK(partition_from_ranks(f).blocks == want);
    }
}

TEST_CASE("partition sizes always sum to the dimension") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        // random strictly nilpotent upper-triangular matrix
        int n = 3 + static_cast<int>(rng.uniform(0, 3));
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m(i, j) = Rational(rng.uniform(-2, 2));
        auto p = partition_from_ranks(rank_sequence(m));
        int sum = 0;
        for (int b : p.blocks) sum += b;
        CHECK(sum == n);
        CHECK(std::is_sorted(p.blocks.rbegin(), p.blocks.rend()));
    }
}

TEST_CASE("sampling respects the causal sign") {
    auto g = family_inner(2);
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto sp = sample_vector(g, CausalType::Spacelike, 7, 10, i);
        CHECK(sign_of(g.pairing(sp, sp)) == 1);
        auto tl = sample_vector(g, CausalType::Timelike, 7, 10, i);
        CHECK(sign_of(g.pairing(tl, tl)) == -1);
    }
    // same (seed, index) reproduces the draw exactly
    CHECK(sample_vector(g, CausalType::Spacelike, 7, 10, 3) ==
          sample_vector(g, CausalType::Spacelike, 7, 10, 3));

    InnerProduct riemannian(RatMatrix::identity(3));
    CHECK_THROWS_AS((void)sample_vector(riemannian, CausalType::Timelike, 1, 10, 0),
                    SamplingExhausted);
    CHECK_THROWS_AS(
        (void)sample_vector_adaptive(riemannian, CausalType::Timelike, 1, 10, 0),
        SamplingExhausted);
}

TEST_CASE("adaptive sampling handles thin cones") {
    // pointwise Gram with a negative definite U block; spacelike lattice
    // points are scarce inside the default box
    RatMatrix gab{{-30, -10}, {-10, -20}};
    InnerProduct g = nil3_inner_product(2, gab);
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto x = sample_vector_adaptive(g, CausalType::Spacelike, 5, 10, i);
        CHECK(sign_of(g.pairing(x, x)) == 1);
        for (const auto& c : x) CHECK(denominator(c) == 1);
    }
}

TEST_CASE("canonical candidates lead with the classical witnesses") {
    auto g = family_inner(2);
    auto tl = canonical_candidates(g, CausalType::Timelike, 10);
    REQUIRE(tl.size() >= 3);
    CHECK(tl[0] == frame_vector(6, 4));  // T1
    std::vector<Rational> u1_minus_v1{1, 0, -1, 0, 0, 0};
    CHECK(tl[2] == u1_minus_v1);

    for (const auto& x : canonical_candidates(g, CausalType::Spacelike, 10))
        CHECK(sign_of(g.pairing(x, x)) == 1);
}

TEST_CASE("spacelike verdict is constant with the family partition") {
    for (int s = 2; s <= 3; ++s) {
        auto v = verify_jordan_osserman(family_tensor(s), family_inner(s),
                                        CausalType::Spacelike, 40, 0);
        CHECK(v.status == OssermanVerdict::Status::Constant);
        std::vector<int> want(static_cast<std::size_t>(s - 1), 3);
        want.insert(want.end(), 3, 1);
        REQUIRE(v.common.has_value());
        CHECK(v.common->blocks == want);
        REQUIRE(v.observed_rank_sequences.size() == 1);
        CHECK(v.observed_rank_sequences[0].ranks ==
              std::vector<int>{2 * (s - 1), s - 1});
        CHECK(v.sample_count == 40);
    }
}

TEST_CASE("timelike verdict is non-constant with the classical witness pair") {
    auto v = verify_jordan_osserman(family_tensor(2), family_inner(2),
                                    CausalType::Timelike, 40, 0);
    CHECK(v.status == OssermanVerdict::Status::NonConstant);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first.vector == frame_vector(6, 4));  // T1
    std::vector<Rational> u1_minus_v1{1, 0, -1, 0, 0, 0};
    CHECK(v.witness->second.vector == u1_minus_v1);
    CHECK(v.witness->first.partition.blocks == std::vector<int>(6, 1));
    CHECK(v.witness->second.partition != v.witness->first.partition);
}

TEST_CASE("zero curvature is trivially constant") {
    auto g = family_inner(2);
    CurvatureTensor zero(6);
    for (auto causal : {CausalType::Spacelike, CausalType::Timelike}) {
        auto v = verify_jordan_osserman(zero, g, causal, 10, 0);
        CHECK(v.status == OssermanVerdict::Status::Constant);
        CHECK(v.common->blocks == std::vector<int>(6, 1));
    }
}

TEST_CASE("verdicts are reproducible for a fixed seed") {
    auto r = family_tensor(2);
    auto g = family_inner(2);
    auto a = verify_jordan_osserman(r, g, CausalType::Timelike, 30, 17);
    auto b = verify_jordan_osserman(r, g, CausalType::Timelike, 30, 17);
    CHECK(a.status == b.status);
    CHECK(a.observed_rank_sequences == b.observed_rank_sequences);
    CHECK(a.witness->first.vector == b.witness->first.vector);
    CHECK(a.witness->second.vector == b.witness->second.vector);
}

TEST_CASE("non-nilpotent directions are reported, not misclassified") {
    InnerProduct g(RatMatrix::identity(2));
    auto r = csc_tensor(2);
    CHECK_THROWS_WITH_AS(
        (void)verify_jordan_osserman(r, g, CausalType::Spacelike, 10, 0),
        doctest::Contains("direction"), NonNilpotent);
}

TEST_CASE("nilpotency orders") {
    auto r = family_tensor(2);
    auto g = family_inner(2);
    auto sp = nilpotency_report(r, g, CausalType::Spacelike, 30, 0);
    CHECK(sp.max_order == 3);
    for (int n : sp.orders) CHECK(n == 3);

    auto tl = nilpotency_report(r, g, CausalType::Timelike, 30, 0);
    CHECK(tl.max_order == 3);
    CHECK(std::find(tl.orders.begin(), tl.orders.end(), 1) != tl.orders.end());
}

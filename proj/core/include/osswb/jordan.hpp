#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "osswb/curvature.hpp"
#include "osswb/linalg.hpp"

namespace osswb {

enum class CausalType { Spacelike, Timelike };

const char* causal_name(CausalType c);

// Ranks of successive powers of a nilpotent operator, recorded until the
// power vanishes (the terminal zero is not stored).
struct RankSequence {
    std::vector<int> ranks;
    int dim = 0;

    bool operator==(const RankSequence& o) const = default;
    // J^n = 0, J^{n-1} != 0
    int nilpotency_order() const { return static_cast<int>(ranks.size()) + 1; }
};

// Multiset of Jordan block sizes for eigenvalue 0, descending.
struct JordanPartition {
    std::vector<int> blocks;

    bool operator==(const JordanPartition& o) const = default;
};

// Throws NonNilpotent as soon as the ranks stabilize above zero (the power
// ranks of a nilpotent operator strictly decrease until they vanish).
RankSequence rank_sequence(const RatMatrix& j);

// Conjugate-partition duality: the number of blocks of size >= k is
// r_{k-1} - r_k with r_0 = dim.  Throws InvalidSequence when the drops are
// not non-increasing.
JordanPartition partition_from_ranks(const RankSequence& r);

// Integer-component vector with g(X,X) > 0 (spacelike) or < 0 (timelike).
// Deliberately unnormalized: J(lambda X) = lambda^2 J(X), so the Jordan
// structure is scale-invariant and unit vectors (which need square roots)
// are never required.  Sample `index` depends only on (seed, index).
std::vector<Rational> sample_vector(const InnerProduct& g, CausalType causal,
                                    std::uint64_t seed, int bound,
                                    std::uint64_t index);

// Like sample_vector, but falls back to a constructive draw in a
// congruence-diagonalizing basis when box rejection exhausts its cap.
// Pointwise Grams with large entries can leave the requested causal cone
// without lattice points in the default box; the fallback is deterministic,
// so reports stay reproducible.
std::vector<Rational> sample_vector_adaptive(const InnerProduct& g, CausalType causal,
                                             std::uint64_t seed, int bound,
                                             std::uint64_t index);

struct SampleOutcome {
    std::vector<Rational> vector;
    RankSequence ranks;
    JordanPartition partition;
};

struct OssermanVerdict {
    enum class Status { Constant, NonConstant, Inconclusive };

    CausalType causal;
    Status status = Status::Inconclusive;
    std::optional<JordanPartition> common;  // when constant
    std::optional<std::pair<SampleOutcome, SampleOutcome>> witness;  // when non-constant
    std::vector<RankSequence> observed_rank_sequences;  // unique, in first-seen order
    int sample_count = 0;
    std::uint64_t seed = 0;
};

struct NilpotencyReport {
    std::vector<int> orders;  // n(x) per sample
    int max_order = 0;        // lower bound for the supremum over all directions
    CausalType causal;
    int sample_count = 0;
    std::uint64_t seed = 0;
};

// Samples directions of the requested causal type and compares Jordan
// partitions.  A handful of deterministic frame-derived candidates (frame
// vectors, then e_i - e_j, then e_i + e_j) lead the stream so that the
// classical witness directions always appear; seeded random draws fill the
// rest.  Constancy over a sample is a falsifiable claim, not a theorem, so
// the verdict carries its sample count and seed.
OssermanVerdict verify_jordan_osserman(const CurvatureTensor& r, const InnerProduct& g,
                                       CausalType causal, int samples,
                                       std::uint64_t seed, int bound = 10);

NilpotencyReport nilpotency_report(const CurvatureTensor& r, const InnerProduct& g,
                                   CausalType causal, int samples, std::uint64_t seed,
                                   int bound = 10);

// Deterministic candidate directions of the requested causal type, capped.
std::vector<std::vector<Rational>> canonical_candidates(const InnerProduct& g,
                                                        CausalType causal, int max_count);

}  // namespace osswb

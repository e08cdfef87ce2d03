#include "osswb/jordan.hpp"

#include <algorithm>

#include "osswb/errors.hpp"
#include "osswb/rng.hpp"

namespace osswb {

const char* causal_name(CausalType c) {
    return c == CausalType::Spacelike ? "spacelike" : "timelike";
}

RankSequence rank_sequence(const RatMatrix& j) {
    if (j.rows() != j.cols()) throw DimensionMismatch("rank sequence requires a square matrix");
    RankSequence seq;
    seq.dim = j.rows();
    RatMatrix power = j;
    int prev = seq.dim + 1;
    while (true) {
        int r = rank(power);
        if (r == 0) break;
        if (r >= prev)
            throw NonNilpotent("power ranks stabilized above zero; operator has a nonzero eigenvalue");
        seq.ranks.push_back(r);
        prev = r;
        power = power * j;
    }
    return seq;
}

JordanPartition partition_from_ranks(const RankSequence& r) {
    // drops d_k = r_{k-1} - r_k count the blocks of size >= k
    std::vector<int> drops;
    int prev = r.dim;
    for (int rk : r.ranks) {
        if (rk <= 0 || rk >= prev) throw InvalidSequence("ranks must decrease strictly to zero");
        drops.push_back(prev - rk);
        prev = rk;
    }
    drops.push_back(prev);
    for (std::size_t k = 1; k < drops.size(); ++k)
        if (drops[k] > drops[k - 1])
            throw InvalidSequence("rank drops must be non-increasing for a nilpotent operator");
    JordanPartition p;
    const int max_size = static_cast<int>(drops.size());
    for (int k = 1; k <= max_size; ++k) {
        // blocks of size exactly k
        int count = drops[static_cast<std::size_t>(k - 1)] -
                    (k < max_size ? drops[static_cast<std::size_t>(k)] : 0);
        for (int i = 0; i < count; ++i) p.blocks.push_back(k);
    }
    std::sort(p.blocks.begin(), p.blocks.end(), std::greater<int>());
    return p;
}

std::vector<Rational> sample_vector(const InnerProduct& g, CausalType causal,
                                    std::uint64_t seed, int bound, std::uint64_t index) {
    if (bound < 1) throw InvalidInput("sampling bound must be >= 1");
    const int n = g.dim();
    SplitMix64 rng(stream_seed(seed, index));
    const int want = causal == CausalType::Spacelike ? 1 : -1;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> x(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (auto& c : x) {
            long long v = rng.uniform(-bound, bound);
            c = Rational(v);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) continue;
        if (sign_of(g.pairing(x, x)) == want) return x;
    }
    throw SamplingExhausted("no vector of the requested causal type found; check the signature");
}

namespace {

// Constructive draw for Grams whose requested causal cone is too thin for
// box rejection: sample coefficients in a congruence-diagonalizing basis,
// then scale the requested-sign coefficients by powers of two until the
// norm has the right sign.  Components are cleared to integers at the end
// (the Jordan structure is invariant under positive rescaling).
std::vector<Rational> sample_via_congruence(const InnerProduct& g, CausalType causal,
                                            std::uint64_t seed, int bound,
                                            std::uint64_t index) {
    const int n = g.dim();
    const int want = causal == CausalType::Spacelike ? 1 : -1;
    auto cd = congruence_diagonalization(g.gram());
    std::vector<int> on_side;
    for (int i = 0; i < n; ++i)
        if (sign_of(cd.diagonal[static_cast<std::size_t>(i)]) == want) on_side.push_back(i);
    if (on_side.empty())
        throw SamplingExhausted("the requested causal type does not exist for this signature");
    SplitMix64 rng(stream_seed(seed ^ 0x636f6e65ULL, index));
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = Rational(rng.uniform(-bound, bound));
    if (std::all_of(on_side.begin(), on_side.end(),
                    [&](int i) { return c[static_cast<std::size_t>(i)] == 0; }))
        c[static_cast<std::size_t>(on_side.front())] = 1;
    auto norm = [&]() {
        Rational q(0);
        for (int i = 0; i < n; ++i)
            q += cd.diagonal[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)] *
                 c[static_cast<std::size_t>(i)];
        return q;
    };
    while (sign_of(norm()) != want)
        for (int i : on_side) c[static_cast<std::size_t>(i)] *= 2;
    std::vector<Rational> x = cd.basis.apply(c);
    Integer l = 1;
    for (const auto& v : x) l = lcm(l, denominator(v));
    for (auto& v : x) v *= Rational(l);
    return x;
}

}  // namespace

std::vector<Rational> sample_vector_adaptive(const InnerProduct& g, CausalType causal,
                                             std::uint64_t seed, int bound,
                                             std::uint64_t index) {
    try {
        return sample_vector(g, causal, seed, bound, index);
    } catch (const SamplingExhausted&) {
        return sample_via_congruence(g, causal, seed, bound, index);
    }
}

std::vector<std::vector<Rational>> canonical_candidates(const InnerProduct& g,
                                                        CausalType causal, int max_count) {
    const int n = g.dim();
    const int want = causal == CausalType::Spacelike ? 1 : -1;
    std::vector<std::vector<Rational>> out;
    auto consider = [&](std::vector<Rational> x) {
        if (static_cast<int>(out.size()) >= max_count) return;
        if (sign_of(g.pairing(x, x)) == want) out.push_back(std::move(x));
    };
    for (int i = 0; i < n; ++i) consider(frame_vector(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto x = frame_vector(n, i);
            x[static_cast<std::size_t>(j)] = -1;
            consider(std::move(x));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto x = frame_vector(n, i);
            x[static_cast<std::size_t>(j)] = 1;
            consider(std::move(x));
        }
    return out;
}

namespace {

// Shared sampling loop: canonical candidates first, then seeded draws.
template <typename Fn>
void for_each_sample(const CurvatureTensor& r, const InnerProduct& g, CausalType causal,
                     int samples, std::uint64_t seed, int bound, Fn&& fn) {
    if (samples < 2) throw InvalidInput("verdicts require at least 2 samples");
    JacobiBuilder build(r, g);
    auto leading = canonical_candidates(g, causal, samples / 2);
    std::uint64_t draw = 0;
    for (int i = 0; i < samples; ++i) {
        std::vector<Rational> x;
        if (static_cast<std::size_t>(i) < leading.size())
            x = leading[static_cast<std::size_t>(i)];
        else
            x = sample_vector_adaptive(g, causal, seed, bound, draw++);
        RatMatrix j = build(x);
        fn(std::move(x), std::move(j));
    }
}

}  // namespace

OssermanVerdict verify_jordan_osserman(const CurvatureTensor& r, const InnerProduct& g,
                                       CausalType causal, int samples, std::uint64_t seed,
                                       int bound) {
    OssermanVerdict v;
    v.causal = causal;
    v.seed = seed;
    std::optional<SampleOutcome> first;
    for_each_sample(r, g, causal, samples, seed, bound,
                    [&](std::vector<Rational> x, RatMatrix j) {
        RankSequence rs;
        try {
            rs = rank_sequence(j);
        } catch (const NonNilpotent&) {
            std::string dir = "[";
            for (std::size_t k = 0; k < x.size(); ++k)
                dir += (k ? "," : "") + rat_to_string(x[k]);
            throw NonNilpotent("Jacobi operator is not nilpotent in direction " + dir + "]");
        }
        SampleOutcome outcome{std::move(x), rs, partition_from_ranks(rs)};
        ++v.sample_count;
        if (std::find(v.observed_rank_sequences.begin(), v.observed_rank_sequences.end(),
                      rs) == v.observed_rank_sequences.end())
            v.observed_rank_sequences.push_back(rs);
        if (!first) {
            first = std::move(outcome);
        } else if (!v.witness && outcome.partition != first->partition) {
            v.witness = std::make_pair(*first, std::move(outcome));
        }
    });
    if (v.witness) {
        v.status = OssermanVerdict::Status::NonConstant;
    } else if (first) {
        v.status = OssermanVerdict::Status::Constant;
        v.common = first->partition;
    }
    return v;
}

NilpotencyReport nilpotency_report(const CurvatureTensor& r, const InnerProduct& g,
                                   CausalType causal, int samples, std::uint64_t seed,
                                   int bound) {
    NilpotencyReport rep;
    rep.causal = causal;
    rep.seed = seed;
    for_each_sample(r, g, causal, samples, seed, bound,
                    [&](std::vector<Rational>, RatMatrix j) {
        RankSequence rs = rank_sequence(j);
        int n = rs.nilpotency_order();
        rep.orders.push_back(n);
        rep.max_order = std::max(rep.max_order, n);
        ++rep.sample_count;
    });
    return rep;
}

}  // namespace osswb

#pragma once

#include <cstdint>

namespace osswb {

// splitmix64; chosen over std::mt19937 because its output is pinned by the
// algorithm itself, so seeded runs are reproducible across platforms and
// standard-library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]; modulo bias is irrelevant for the tiny ranges
    // used here and keeps the draw sequence trivially portable.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

// Counter-indexed stream: sample i depends only on (seed, i), never on how
// samples are distributed across workers.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

}  // namespace osswb

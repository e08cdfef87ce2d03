#pragma once

#include <vector>

#include "osswb/curvature.hpp"
#include "osswb/linalg.hpp"
#include "osswb/poly.hpp"
#include "osswb/rng.hpp"

namespace osswb::testing {

inline Rational random_rational(SplitMix64& rng) {
    return Rational(rng.uniform(-9, 9), rng.uniform(1, 9));
}

inline Polynomial random_polynomial(const Chart& chart, SplitMix64& rng, int max_terms = 4) {
    Polynomial p(chart);
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Polynomial::Exponents e(static_cast<std::size_t>(chart.dim()), 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.uniform(0, 2));
        p += Polynomial::monomial(chart, random_rational(rng), e);
    }
    return p;
}

inline RatMatrix random_matrix(SplitMix64& rng, int rows, int cols, int bound = 5) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
    return m;
}

inline RatMatrix random_symmetric(SplitMix64& rng, int n, int bound = 5) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m(i, j) = Rational(rng.uniform(-bound, bound));
            m(j, i) = m(i, j);
        }
    return m;
}

inline RatMatrix random_invertible(SplitMix64& rng, int n, int bound = 5) {
    for (;;) {
        RatMatrix m = random_matrix(rng, n, n, bound);
        if (det(m) != 0) return m;
    }
}

inline std::vector<Rational> random_point(SplitMix64& rng, int n, int bound = 5) {
    std::vector<Rational> p(static_cast<std::size_t>(n));
    for (auto& x : p) x = Rational(rng.uniform(-bound, bound));
    return p;
}

inline std::vector<Rational> random_direction(SplitMix64& rng, int n, int bound = 5) {
    for (;;) {
        auto x = random_point(rng, n, bound);
        for (const auto& c : x)
            if (c != 0) return x;
    }
}

// Random valid algebraic curvature tensor on the U-span.
inline CurvatureTensor random_u_tensor(SplitMix64& rng, int s) {
    return gram_tensor(random_symmetric(rng, s, 3));
}

}  // namespace osswb::testing

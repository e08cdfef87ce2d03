#pragma once

#include <string>
#include <vector>

#include "osswb/curvature.hpp"
#include "osswb/linalg.hpp"
#include "osswb/poly.hpp"

namespace osswb {

// Symmetric matrix of polynomials defining a metric on one chart.
class PolynomialMetric {
public:
    PolynomialMetric(const Chart& chart, std::vector<Polynomial> entries);

    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const Polynomial& entry(int i, int j) const;

    RatMatrix gram_at(const std::vector<Rational>& point) const;

private:
    Chart chart_;
    std::vector<Polynomial> entries_;  // dense dim x dim, symmetric
};

// First-kind Christoffel symbols as exact polynomials, symmetric in the
// first two indices.
class ChristoffelFirstKind {
public:
    ChristoffelFirstKind(const Chart& chart, std::vector<Polynomial> symbols);

    const Chart& chart() const { return chart_; }
    const Polynomial& at(int i, int j, int k) const;

private:
    Chart chart_;
    std::vector<Polynomial> symbols_;  // dense dim^3
};

struct CurvatureAtPoint {
    std::vector<Rational> point;
    CurvatureTensor tensor;
    RatMatrix gram;
};

// Metric whose U-U block is psi_{abcd} u_c t_d with
// psi_{abcd} = -2/3 (R2_{acdb} + R2_{adcb}), U-V coupling identity and T
// block -identity; its curvature at every point lands in the nil3 family
// with one-T block R2.
PolynomialMetric nil3_polynomial_metric(int s, const CurvatureTensor& r2);

// The concrete s=2 example with quadratic coefficients
// g(U1,U1) = -2 u2 t2, g(U2,U2) = -2 u1 t1, g(U1,U2) = u1 u2.
PolynomialMetric nil3_example_metric();

// Gamma_{ijk} = (d_i g_{jk} + d_j g_{ik} - d_k g_{ij}) / 2.
ChristoffelFirstKind christoffel_first(const PolynomialMetric& metric);

// Closed-form symbols for nil3_polynomial_metric, built from psi without
// differentiating the metric.  Exists solely as an independent oracle
// against christoffel_first.
ChristoffelFirstKind christoffel_closed_form(int s, const CurvatureTensor& r2);

// Exact covariant curvature at a point: polynomial Christoffel symbols and
// their partials are evaluated at the point, indices are raised against the
// pointwise Gram, so no rational-function algebra is ever needed.
// R_{abcd} = d_a G_{bcd} - d_b G_{acd} + G_{aed} G_{bc}^e - G_{bed} G_{ac}^e.
CurvatureAtPoint curvature_at(const PolynomialMetric& metric,
                              const std::vector<Rational>& point);
CurvatureAtPoint curvature_at(const PolynomialMetric& metric,
                              const ChristoffelFirstKind& gamma,
                              const std::vector<Rational>& point);

// Same formula with the contracted index restricted to the T block; agrees
// with the full formula on the nil3 family (cross-check only).
CurvatureAtPoint curvature_at_reduced(const PolynomialMetric& metric,
                                      const ChristoffelFirstKind& gamma,
                                      const std::vector<Rational>& point);

// Pointwise raised-index structure of the family metrics: the U block of
// raised symbols vanishes, the T block negates the lowered T block, the V
// block equals the lowered U block.
bool raised_index_relations_hold(const PolynomialMetric& metric,
                                 const ChristoffelFirstKind& gamma,
                                 const std::vector<Rational>& point);

struct RealizeMismatch {
    std::array<int, 4> idx;
    Rational computed;
    Rational expected;
};

struct RealizeResult {
    bool pass = false;
    std::vector<RealizeMismatch> mismatches;
    CurvatureTensor u_block{1};  // R^{(1)} at the point, on the U-span
};

// Verifies that the curvature of `metric` at `point` has exactly the family
// sparsity pattern with one-T block equal to r2; extracts and validates the
// all-U block.
RealizeResult realize_check(const PolynomialMetric& metric, const CurvatureTensor& r2,
                            const std::vector<Rational>& point);

Signature metric_signature_at(const PolynomialMetric& metric,
                              const std::vector<Rational>& point);

}  // namespace osswb

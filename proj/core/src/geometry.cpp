#include "osswb/geometry.hpp"

#include <utility>

#include "osswb/errors.hpp"

namespace osswb {

namespace {

std::size_t sq(int n, int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j);
}

std::size_t cube(int n, int i, int j, int k) {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n) +
           static_cast<std::size_t>(k);
}

}  // namespace

PolynomialMetric::PolynomialMetric(const Chart& chart, std::vector<Polynomial> entries)
    : chart_(chart), entries_(std::move(entries)) {
    const int n = chart_.dim();
    if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DimensionMismatch("metric entry count must be dim^2");
    for (const auto& p : entries_)
        if (p.chart() != chart_) throw ChartMismatch("metric entry on a foreign chart");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (entries_[sq(n, i, j)] != entries_[sq(n, j, i)])
                throw NotSymmetric("metric must be symmetric as a matrix of polynomials");
}

const Polynomial& PolynomialMetric::entry(int i, int j) const {
    const int n = chart_.dim();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw DimensionMismatch("metric index out of range");
    return entries_[sq(n, i, j)];
}

RatMatrix PolynomialMetric::gram_at(const std::vector<Rational>& point) const {
    const int n = chart_.dim();
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g(i, j) = entry(i, j).eval(point);
            g(j, i) = g(i, j);
        }
    return g;
}

ChristoffelFirstKind::ChristoffelFirstKind(const Chart& chart,
                                           std::vector<Polynomial> symbols)
    : chart_(chart), symbols_(std::move(symbols)) {
    const auto n = static_cast<std::size_t>(chart_.dim());
    if (symbols_.size() != n * n * n)
        throw DimensionMismatch("Christoffel symbol count must be dim^3");
}

const Polynomial& ChristoffelFirstKind::at(int i, int j, int k) const {
    const int n = chart_.dim();
    if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw DimensionMismatch("Christoffel index out of range");
    return symbols_[cube(n, i, j, k)];
}

PolynomialMetric nil3_polynomial_metric(int s, const CurvatureTensor& r2) {
    if (s < 2) throw InvalidInput("family metric requires s >= 2");
    if (r2.dim() != s) throw DimensionMismatch("r2 must live on the s-dimensional U-span");
    if (!validate_curvature_symmetries(r2).empty())
        throw InvalidInput("r2 must be a valid algebraic curvature tensor");
    Chart chart(s);
    const int n = chart.dim();
    std::vector<Polynomial> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                              Polynomial(chart));
    const Rational minus_two_thirds(-2, 3);
    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b) {
            Polynomial entry(chart);
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d) {
                    Rational psi =
                        minus_two_thirds * (r2.get(a, c, d, b) + r2.get(a, d, c, b));
                    if (psi == 0) continue;
                    Polynomial::Exponents e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(chart.u(c))] = 1;
                    e[static_cast<std::size_t>(chart.t(d))] = 1;
                    entry += Polynomial::monomial(chart, psi, e);
                }
            g[sq(n, chart.u(a), chart.u(b))] = entry;
            g[sq(n, chart.u(b), chart.u(a))] = entry;
        }
    for (int a = 0; a < s; ++a) {
        auto one = Polynomial::constant(chart, Rational(1));
        g[sq(n, chart.u(a), chart.v(a))] = one;
        g[sq(n, chart.v(a), chart.u(a))] = one;
        g[sq(n, chart.t(a), chart.t(a))] = Polynomial::constant(chart, Rational(-1));
    }
    return PolynomialMetric(chart, std::move(g));
}

PolynomialMetric nil3_example_metric() {
    Chart chart(2);
    const int n = chart.dim();
    std::vector<Polynomial> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                              Polynomial(chart));
    auto mono = [&](const Rational& c, int i, int j) {
        Polynomial::Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] += 1;
        e[static_cast<std::size_t>(j)] += 1;
        return Polynomial::monomial(chart, c, e);
    };
    auto put = [&](int i, int j, const Polynomial& p) {
        g[sq(n, i, j)] = p;
        g[sq(n, j, i)] = p;
    };
    put(chart.u(0), chart.u(0), mono(Rational(-2), chart.u(1), chart.t(1)));
    put(chart.u(1), chart.u(1), mono(Rational(-2), chart.u(0), chart.t(0)));
    put(chart.u(0), chart.u(1), mono(Rational(1), chart.u(0), chart.u(1)));
    for (int a = 0; a < 2; ++a) {
        put(chart.u(a), chart.v(a), Polynomial::constant(chart, Rational(1)));
        put(chart.t(a), chart.t(a), Polynomial::constant(chart, Rational(-1)));
    }
    return PolynomialMetric(chart, std::move(g));
}

ChristoffelFirstKind christoffel_first(const PolynomialMetric& metric) {
    const Chart& chart = metric.chart();
    const int n = chart.dim();
    std::vector<Polynomial> sym(
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
        Polynomial(chart));
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Polynomial p = (metric.entry(j, k).partial(i) +
                                metric.entry(i, k).partial(j) -
                                metric.entry(i, j).partial(k)) *
                               half;
                sym[cube(n, i, j, k)] = p;
                sym[cube(n, j, i, k)] = std::move(p);
            }
    return ChristoffelFirstKind(chart, std::move(sym));
}

ChristoffelFirstKind christoffel_closed_form(int s, const CurvatureTensor& r2) {
    if (s < 2) throw InvalidInput("closed form requires s >= 2");
    if (r2.dim() != s) throw DimensionMismatch("r2 must live on the s-dimensional U-span");
    Chart chart(s);
    const int n = chart.dim();
    auto psi = [&](int a, int b, int c, int d) {
        return Rational(-2, 3) * (r2.get(a, c, d, b) + r2.get(a, d, c, b));
    };
    std::vector<Polynomial> sym(
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
        Polynomial(chart));
    const Rational half(1, 2);
    // all-U block: linear in t
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c) {
                Polynomial p(chart);
                for (int i = 0; i < s; ++i) {
                    Rational coeff =
                        half * (psi(b, c, a, i) + psi(a, c, b, i) - psi(a, b, c, i));
                    if (coeff == 0) continue;
                    p += Polynomial::variable(chart, chart.t(i)) * coeff;
                }
                sym[cube(n, chart.u(a), chart.u(b), chart.u(c))] = std::move(p);
            }
    // one-T patterns: linear in u
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int i = 0; i < s; ++i) {
                Polynomial p(chart);
                for (int c = 0; c < s; ++c) {
                    Rational coeff = half * psi(a, b, c, i);
                    if (coeff == 0) continue;
                    p += Polynomial::variable(chart, chart.u(c)) * coeff;
                }
                sym[cube(n, chart.t(i), chart.u(a), chart.u(b))] = p;
                sym[cube(n, chart.u(a), chart.t(i), chart.u(b))] = p;
                sym[cube(n, chart.u(a), chart.u(b), chart.t(i))] = -p;
            }
    return ChristoffelFirstKind(chart, std::move(sym));
}

namespace {

struct PointData {
    RatMatrix gram;
    RatMatrix gram_inv;
    std::vector<Rational> lowered;  // Gamma_{ijk}(p), dense dim^3
    std::vector<Rational> raised;   // Gamma_{ij}^m(p), dense dim^3
};

PointData evaluate_symbols(const PolynomialMetric& metric, const ChristoffelFirstKind& gamma,
                           const std::vector<Rational>& point) {
    const int n = metric.dim();
    PointData d{metric.gram_at(point), RatMatrix(), {}, {}};
    if (det(d.gram) == 0) throw DegenerateMetric("metric is degenerate at the base point");
    d.gram_inv = inverse(d.gram);
    const auto n3 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                    static_cast<std::size_t>(n);
    d.lowered.assign(n3, Rational(0));
    d.raised.assign(n3, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational v = gamma.at(i, j, k).eval(point);
                d.lowered[cube(n, i, j, k)] = v;
                d.lowered[cube(n, j, i, k)] = std::move(v);
            }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                Rational v(0);
                for (int k = 0; k < n; ++k) {
                    const Rational& low = d.lowered[cube(n, i, j, k)];
                    if (low != 0 && d.gram_inv(m, k) != 0) v += d.gram_inv(m, k) * low;
                }
                d.raised[cube(n, i, j, m)] = v;
                d.raised[cube(n, j, i, m)] = std::move(v);
            }
    return d;
}

CurvatureAtPoint assemble_curvature(const PolynomialMetric& metric,
                                    const ChristoffelFirstKind& gamma,
                                    const std::vector<Rational>& point, int r5_lo,
                                    int r5_hi) {
    const int n = metric.dim();
    if (static_cast<int>(point.size()) != n)
        throw DimensionMismatch("point length does not match chart dimension");
    PointData d = evaluate_symbols(metric, gamma, point);
    // partial derivatives of the symbols, evaluated at the point
    const auto n4 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                    static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<Rational> dgamma(n4, Rational(0));
    auto quart = [n](int r, int i, int j, int k) {
        return ((static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(i)) *
                    static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(n) +
               static_cast<std::size_t>(k);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Polynomial& p = gamma.at(i, j, k);
                if (p.is_zero()) continue;
                for (int r = 0; r < n; ++r) {
                    Rational v = p.partial(r).eval(point);
                    dgamma[quart(r, i, j, k)] = v;
                    dgamma[quart(r, j, i, k)] = std::move(v);
                }
            }
    std::vector<Rational> dense(n4, Rational(0));
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2)
            for (int r3 = 0; r3 < n; ++r3)
                for (int r4 = 0; r4 < n; ++r4) {
                    Rational v = dgamma[quart(r1, r2, r3, r4)] - dgamma[quart(r2, r1, r3, r4)];
                    for (int r5 = r5_lo; r5 < r5_hi; ++r5) {
                        const Rational& a1 = d.lowered[cube(n, r1, r5, r4)];
                        const Rational& b1 = d.raised[cube(n, r2, r3, r5)];
                        if (a1 != 0 && b1 != 0) v += a1 * b1;
                        const Rational& a2 = d.lowered[cube(n, r2, r5, r4)];
                        const Rational& b2 = d.raised[cube(n, r1, r3, r5)];
                        if (a2 != 0 && b2 != 0) v -= a2 * b2;
                    }
                    dense[quart(r1, r2, r3, r4)] = std::move(v);
                }
    // raw symmetry check before canonicalization; a violation here would be
    // an assembly bug, not bad input
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    if (dense[quart(a, b, c, e)] != -dense[quart(b, a, c, e)] ||
                        dense[quart(a, b, c, e)] != -dense[quart(a, b, e, c)] ||
                        dense[quart(a, b, c, e)] != dense[quart(c, e, a, b)] ||
                        dense[quart(a, b, c, e)] + dense[quart(b, c, a, e)] +
                                dense[quart(c, a, b, e)] !=
                            0)
                        throw Error("computed curvature violates the tensor symmetries");
                }
    CurvatureTensor tensor(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    CurvatureTensor::Key k{a, b, c, e};
                    if (CurvatureTensor::canonicalize(k).first != k) continue;
                    tensor.set(a, b, c, e, dense[quart(a, b, c, e)]);
                }
    return CurvatureAtPoint{point, std::move(tensor), std::move(d.gram)};
}

}  // namespace

CurvatureAtPoint curvature_at(const PolynomialMetric& metric,
                              const std::vector<Rational>& point) {
    return curvature_at(metric, christoffel_first(metric), point);
}

CurvatureAtPoint curvature_at(const PolynomialMetric& metric,
                              const ChristoffelFirstKind& gamma,
                              const std::vector<Rational>& point) {
    return assemble_curvature(metric, gamma, point, 0, metric.dim());
}

CurvatureAtPoint curvature_at_reduced(const PolynomialMetric& metric,
                                      const ChristoffelFirstKind& gamma,
                                      const std::vector<Rational>& point) {
    const int s = metric.dim() / 3;
    return assemble_curvature(metric, gamma, point, 2 * s, metric.dim());
}

bool raised_index_relations_hold(const PolynomialMetric& metric,
                                 const ChristoffelFirstKind& gamma,
                                 const std::vector<Rational>& point) {
    const int n = metric.dim();
    const int s = n / 3;
    PointData d = evaluate_symbols(metric, gamma, point);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < s; ++a) {
                if (d.raised[cube(n, i, j, a)] != 0) return false;                     // U block
                if (d.raised[cube(n, i, j, 2 * s + a)] !=
                    -d.lowered[cube(n, i, j, 2 * s + a)])
                    return false;                                                      // T block
                if (d.raised[cube(n, i, j, s + a)] != d.lowered[cube(n, i, j, a)])
                    return false;                                                      // V block
            }
    return true;
}

RealizeResult realize_check(const PolynomialMetric& metric, const CurvatureTensor& r2,
                            const std::vector<Rational>& point) {
    const int n = metric.dim();
    const int s = n / 3;
    if (r2.dim() != s) throw DimensionMismatch("r2 must live on the s-dimensional U-span");
    CurvatureAtPoint cp = curvature_at(metric, point);
    RealizeResult result;
    result.u_block = CurvatureTensor(s);
    auto block = [&](int i) { return i < s ? 0 : (i < 2 * s ? 1 : 2); };  // U, V, T
    auto to_u = [&](int i) { return i % s; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    Rational computed = cp.tensor.get(a, b, c, e);
                    int t_count = (block(a) == 2) + (block(b) == 2) + (block(c) == 2) +
                                  (block(e) == 2);
                    int u_count = (block(a) == 0) + (block(b) == 0) + (block(c) == 0) +
                                  (block(e) == 0);
                    Rational expected(0);
                    if (u_count == 4)
                        expected = computed;  // all-U block is free: it defines R^(1)
                    else if (t_count == 1 && u_count == 3)
                        expected = r2.get(to_u(a), to_u(b), to_u(c), to_u(e));
                    if (computed != expected)
                        result.mismatches.push_back({{a, b, c, e}, computed, expected});
                }
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = a; c < s; ++c)
                for (int e = c + 1; e < s; ++e) {
                    CurvatureTensor::Key k{a, b, c, e};
                    if (CurvatureTensor::canonicalize(k).first != k) continue;
                    result.u_block.set(a, b, c, e, cp.tensor.get(a, b, c, e));
                }
    if (!validate_curvature_symmetries(result.u_block).empty())
        result.mismatches.push_back({{-1, -1, -1, -1}, Rational(0), Rational(0)});
    result.pass = result.mismatches.empty();
    return result;
}

Signature metric_signature_at(const PolynomialMetric& metric,
                              const std::vector<Rational>& point) {
    return sylvester_signature(metric.gram_at(point));
}

}  // namespace osswb

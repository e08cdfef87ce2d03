#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "osswb/rational.hpp"

namespace osswb {

// Coordinate chart (u_1..u_s, v_1..v_s, t_1..t_s) on R^{3s}.  The block
// order U, V, T is frozen; every index convention downstream depends on it.
class Chart {
public:
    explicit Chart(int s);

    int s() const { return s_; }
    int dim() const { return 3 * s_; }

    // "u1".."us", "v1".."vs", "t1".."ts" in frame order.
    const std::string& coord_name(int i) const;
    int coord_index(const std::string& name) const;  // throws UnknownCoordinate
    const std::vector<std::string>& coord_names() const { return names_; }

    bool operator==(const Chart& o) const { return s_ == o.s_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

    // Block accessors: frame index of U_a / V_a / T_a, a in [0, s).
    int u(int a) const { return a; }
    int v(int a) const { return s_ + a; }
    int t(int a) const { return 2 * s_ + a; }

private:
    int s_;
    std::vector<std::string> names_;
};

// Sparse multivariate polynomial over Rational.  Terms map an exponent
// vector (length 3s) to a nonzero coefficient; zero terms are never stored.
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(const Chart& chart) : chart_(chart) {}

    static Polynomial constant(const Chart& chart, const Rational& c);
    static Polynomial variable(const Chart& chart, int coord_index);
    static Polynomial monomial(const Chart& chart, const Rational& coeff,
                               const Exponents& exps);

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of a monomial (zero if absent).
    Rational coefficient(const Exponents& exps) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial partial(int coord_index) const;
    Polynomial partial(const std::string& coord_name) const;

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;  // human-readable, for diagnostics

private:
    void add_term(const Exponents& exps, const Rational& coeff);
    void check_same_chart(const Polynomial& o) const;

    Chart chart_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace osswb

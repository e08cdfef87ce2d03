#include "osswb/poly.hpp"

#include <sstream>

#include "osswb/errors.hpp"

namespace osswb {

Chart::Chart(int s) : s_(s) {
    if (s < 1) throw InvalidInput("chart requires s >= 1");
    names_.reserve(3 * s);
    for (char block : {'u', 'v', 't'})
        for (int a = 1; a <= s; ++a) names_.push_back(block + std::to_string(a));
}

const std::string& Chart::coord_name(int i) const {
    if (i < 0 || i >= dim()) throw UnknownCoordinate("coordinate index out of range");
    return names_[static_cast<std::size_t>(i)];
}

int Chart::coord_index(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    throw UnknownCoordinate("no coordinate named '" + name + "' in chart");
}

Polynomial Polynomial::constant(const Chart& chart, const Rational& c) {
    Polynomial p(chart);
    p.add_term(Exponents(static_cast<std::size_t>(chart.dim()), 0), c);
    return p;
}

Polynomial Polynomial::variable(const Chart& chart, int coord_index) {
    if (coord_index < 0 || coord_index >= chart.dim())
        throw UnknownCoordinate("coordinate index out of range");
    Exponents e(static_cast<std::size_t>(chart.dim()), 0);
    e[static_cast<std::size_t>(coord_index)] = 1;
    Polynomial p(chart);
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Chart& chart, const Rational& coeff,
                                const Exponents& exps) {
    if (exps.size() != static_cast<std::size_t>(chart.dim()))
        throw DimensionMismatch("exponent vector length does not match chart dimension");
    Polynomial p(chart);
    p.add_term(exps, coeff);
    return p;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_chart(const Polynomial& o) const {
    if (chart_ != o.chart_)
        throw ChartMismatch("polynomials live on different charts");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_chart(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_chart(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_chart(o);
    Polynomial r(chart_);
    Exponents e(static_cast<std::size_t>(chart_.dim()), 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(chart_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(chart_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return chart_ == o.chart_ && terms_ == o.terms_;
}

Polynomial Polynomial::partial(int coord_index) const {
    if (coord_index < 0 || coord_index >= chart_.dim())
        throw UnknownCoordinate("coordinate index out of range");
    auto k = static_cast<std::size_t>(coord_index);
    Polynomial r(chart_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents d = e;
        --d[k];
        r.add_term(d, c * Rational(e[k]));
    }
    return r;
}

Polynomial Polynomial::partial(const std::string& coord_name) const {
    return partial(chart_.coord_index(coord_name));
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(chart_.dim()))
        throw DimensionMismatch("evaluation point length does not match chart dimension");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rat_to_string(c) << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << chart_.coord_name(static_cast<int>(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace osswb

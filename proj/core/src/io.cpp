#include "osswb/io.hpp"

#include <fstream>
#include <sstream>

#include "osswb/errors.hpp"

namespace osswb {

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SpecParseError(std::string("missing key '") + key + "'");
    return *it;
}

int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer()) throw SpecParseError(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

Json poly_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = rat_to_string(c);
        term["exps"] = e;
        terms.push_back(std::move(term));
    }
    return terms;
}

Polynomial poly_from_json(const Chart& chart, const Json& j) {
    if (!j.is_array()) throw SpecParseError("polynomial must be an array of terms");
    Polynomial p(chart);
    for (const auto& term : j) {
        Rational coeff = rat_from_string(require(term, "coeff").get<std::string>());
        const Json& exps = require(term, "exps");
        if (!exps.is_array() || static_cast<int>(exps.size()) != chart.dim())
            throw SpecParseError("term exponent vector must have chart dimension");
        Polynomial::Exponents e;
        for (const auto& x : exps) e.push_back(x.get<std::uint32_t>());
        p += Polynomial::monomial(chart, coeff, e);
    }
    return p;
}

Json tensor_to_json(const CurvatureTensor& t) {
    Json j;
    j["dim"] = t.dim();
    Json entries = Json::array();
    for (const auto& [k, v] : t.entries()) {
        Json e;
        e["idx"] = k;
        e["val"] = rat_to_string(v);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

CurvatureTensor tensor_from_json(const Json& j) {
    CurvatureTensor t(require_int(j, "dim"));
    for (const auto& e : require(j, "entries")) {
        const Json& idx = require(e, "idx");
        if (!idx.is_array() || idx.size() != 4)
            throw SpecParseError("tensor entry index must have 4 components");
        t.set(idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), idx[3].get<int>(),
              rat_from_string(require(e, "val").get<std::string>()));
    }
    return t;
}

Json gram_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix gram_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SpecParseError("gram matrix must be a non-empty array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw SpecParseError("ragged gram matrix");
        for (int c = 0; c < cols; ++c)
            m(i, c) = rat_from_string(j[i][c].get<std::string>());
    }
    return m;
}

Json metric_to_json(const PolynomialMetric& m) {
    const Chart& chart = m.chart();
    Json j;
    j["format"] = kSpecFormatVersion;
    j["kind"] = "metric";
    j["s"] = chart.s();
    j["coords"] = chart.coord_names();
    Json entries = Json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int k = i; k < m.dim(); ++k) {
            if (m.entry(i, k).is_zero()) continue;  // omitted entries are zero
            Json e;
            e["i"] = i;
            e["j"] = k;
            e["poly"] = poly_to_json(m.entry(i, k));
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

PolynomialMetric metric_from_json(const Json& j) {
    Chart chart(require_int(j, "s"));
    if (j.contains("coords")) {
        auto names = require(j, "coords").get<std::vector<std::string>>();
        if (names != chart.coord_names())
            throw SpecParseError("coordinate list does not match the frozen U,V,T order");
    }
    const int n = chart.dim();
    std::vector<Polynomial> entries(
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial(chart));
    for (const auto& e : require(j, "entries")) {
        int a = require_int(e, "i");
        int b = require_int(e, "j");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw SpecParseError("metric entry index out of range");
        Polynomial p = poly_from_json(chart, require(e, "poly"));
        entries[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)] = p;
        entries[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(a)] = std::move(p);
    }
    return PolynomialMetric(chart, std::move(entries));
}

Json algebraic_spec_to_json(const InnerProduct& g, const CurvatureTensor& r) {
    Json j;
    j["format"] = kSpecFormatVersion;
    j["kind"] = "algebraic";
    j["dim"] = g.dim();
    j["gram"] = gram_to_json(g.gram());
    j["curvature"] = tensor_to_json(r);
    return j;
}

Json metric_spec_to_json(const PolynomialMetric& m) { return metric_to_json(m); }

ParsedSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw SpecParseError("spec file must be a JSON object");
    if (require_int(j, "format") != kSpecFormatVersion)
        throw SpecParseError("unsupported spec format version");
    std::string kind = require(j, "kind").get<std::string>();
    ParsedSpec spec{};
    if (kind == "algebraic") {
        spec.kind = ParsedSpec::Kind::Algebraic;
        RatMatrix gram = gram_from_json(require(j, "gram"));
        try {
            spec.inner_product.emplace(std::move(gram));
        } catch (const Error& e) {
            throw SpecParseError(std::string("bad gram matrix: ") + e.what());
        }
        spec.curvature = tensor_from_json(require(j, "curvature"));
        if (spec.curvature->dim() != spec.inner_product->dim())
            throw SpecParseError("curvature and gram dimensions differ");
    } else if (kind == "metric") {
        spec.kind = ParsedSpec::Kind::Metric;
        spec.metric = metric_from_json(j);
    } else {
        throw SpecParseError("unknown spec kind '" + kind + "'");
    }
    return spec;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw SpecParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoFailure("failed writing '" + path + "'");
}

}  // namespace osswb

#pragma once

#include <string>

#include "json.hpp"

#include "osswb/curvature.hpp"
#include "osswb/geometry.hpp"
#include "osswb/poly.hpp"

namespace osswb {

// All serialization uses ordered JSON so emitted documents are byte-stable,
// and rationals travel as "p/q" strings so exactness survives the file
// boundary.  Spec files carry "format": 1.
using Json = nlohmann::ordered_json;

inline constexpr int kSpecFormatVersion = 1;

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Chart& chart, const Json& j);

Json tensor_to_json(const CurvatureTensor& t);
CurvatureTensor tensor_from_json(const Json& j);

Json gram_to_json(const RatMatrix& m);
RatMatrix gram_from_json(const Json& j);

Json metric_to_json(const PolynomialMetric& m);
PolynomialMetric metric_from_json(const Json& j);

// Whole-spec files as written by the CLI `gen` command.
Json algebraic_spec_to_json(const InnerProduct& g, const CurvatureTensor& r);
Json metric_spec_to_json(const PolynomialMetric& m);

struct ParsedSpec {
    enum class Kind { Algebraic, Metric };
    Kind kind;
    std::optional<InnerProduct> inner_product;   // Algebraic
    std::optional<CurvatureTensor> curvature;    // Algebraic
    std::optional<PolynomialMetric> metric;      // Metric
};

ParsedSpec spec_from_json(const Json& j);  // throws SpecParseError

Json load_json_file(const std::string& path);       // throws IoFailure/SpecParseError
void write_text_file(const std::string& path, const std::string& text);

}  // namespace osswb

// Command-line front end: generate family specs, run verifications, render
// reports.  All output is deterministic for a fixed flag set and seed.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "osswb/curvature.hpp"
#include "osswb/errors.hpp"
#include "osswb/geometry.hpp"
#include "osswb/io.hpp"
#include "osswb/jordan.hpp"
#include "osswb/rng.hpp"

namespace {

using osswb::CausalType;
using osswb::CurvatureTensor;
using osswb::InnerProduct;
using osswb::Json;
using osswb::PolynomialMetric;
using osswb::Rational;
using osswb::RatMatrix;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitBadInput = 2;

struct Config {
    std::string command;
    std::string family = "lemma21";
    int s = 2;
    int samples = 200;
    int points = 20;
    std::uint64_t seed = 0;
    int bound = 10;
    std::string causal = "both";
    bool expect_paper = false;
    std::string format = "json";
    std::vector<std::string> inputs;
    std::string output;
};

Json config_json(const Config& c) {
    Json j;
    j["command"] = c.command;
    j["family"] = c.family;
    j["s"] = c.s;
    j["samples"] = c.samples;
    j["points"] = c.points;
    j["seed"] = c.seed;
    j["bound"] = c.bound;
    j["causal"] = c.causal;
    j["expect_paper"] = c.expect_paper;
    j["format"] = c.format;
    j["in"] = c.inputs;
    return j;
}

std::vector<CausalType> causal_list(const std::string& causal) {
    if (causal == "spacelike") return {CausalType::Spacelike};
    if (causal == "timelike") return {CausalType::Timelike};
    if (causal == "both") return {CausalType::Spacelike, CausalType::Timelike};
    throw osswb::InvalidInput("--causal must be spacelike, timelike, or both");
}

Json signature_json(const osswb::Signature& sig) {
    Json j;
    j["negatives"] = sig.negatives;
    j["positives"] = sig.positives;
    j["zeros"] = sig.zeros;
    return j;
}

Json vector_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(osswb::rat_to_string(x));
    return a;
}

Json outcome_json(const osswb::SampleOutcome& o,
                  const std::vector<Rational>* base_point = nullptr) {
    Json j;
    if (base_point) j["point"] = vector_json(*base_point);
    j["vector"] = vector_json(o.vector);
    j["rank_sequence"] = o.ranks.ranks;
    j["partition"] = o.partition.blocks;
    return j;
}

void emit(const Config& c, const std::string& text) {
    if (c.output.empty())
        std::cout << text << "\n";
    else
        osswb::write_text_file(c.output, text + "\n");
}

// ---------------------------------------------------------------- gen ----

int run_gen(const Config& c) {
    Json out;
    if (c.family == "lemma21") {
        if (c.s < 2) throw osswb::InvalidInput("--s must be >= 2 for built-in families");
        auto g = osswb::nil3_inner_product(c.s, RatMatrix(c.s, c.s));
        auto r = osswb::nil3_curvature(CurvatureTensor(c.s), osswb::csc_tensor(c.s));
        out = osswb::algebraic_spec_to_json(g, r);
    } else if (c.family == "lemma31") {
        if (c.s < 2) throw osswb::InvalidInput("--s must be >= 2 for built-in families");
        out = osswb::metric_spec_to_json(osswb::nil3_polynomial_metric(c.s, osswb::csc_tensor(c.s)));
    } else if (c.family == "remark32") {
        out = osswb::metric_spec_to_json(osswb::nil3_example_metric());
    } else {
        throw osswb::InvalidInput("gen accepts --family lemma21|lemma31|remark32");
    }
    emit(c, out.dump(2));
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

struct VerdictAccumulator {
    CausalType causal;
    std::optional<osswb::SampleOutcome> first;
    std::optional<std::vector<Rational>> first_point;
    std::optional<std::pair<Json, Json>> witness;  // serialized first/second
    std::vector<osswb::RankSequence> observed;
    int count = 0;

    void feed(const osswb::SampleOutcome& o, const std::vector<Rational>* pt) {
        ++count;
        if (std::find(observed.begin(), observed.end(), o.ranks) == observed.end())
            observed.push_back(o.ranks);
        if (!first) {
            first = o;
            if (pt) first_point = *pt;
        } else if (!witness && o.partition != first->partition) {
            witness = std::make_pair(
                outcome_json(*first, first_point ? &*first_point : nullptr),
                outcome_json(o, pt));
        }
    }

    int max_order() const {
        int m = 0;
        for (const auto& rs : observed) m = std::max(m, rs.nilpotency_order());
        return m;
    }

    Json to_json() const {
        Json j;
        j["status"] = witness ? "non-constant" : (first ? "constant" : "inconclusive");
        if (!witness && first) j["partition"] = first->partition.blocks;
        Json seqs = Json::array();
        for (const auto& rs : observed) seqs.push_back(rs.ranks);
        j["rank_sequences"] = std::move(seqs);
        j["nilpotency_max"] = max_order();
        j["samples"] = count;
        return j;
    }
};

// Algebraic route: one inner product, one tensor, sampled directions.
Json verify_algebraic(const Config& c, const InnerProduct& g, const CurvatureTensor& r,
                      int& samples_evaluated) {
    Json verdicts;
    verdicts["symmetry"] =
        osswb::validate_curvature_symmetries(r).empty() ? "pass" : "violations";
    verdicts["signature"] = signature_json(g.signature());
    Json witnesses = Json::object();
    for (CausalType causal : causal_list(c.causal)) {
        auto v = osswb::verify_jordan_osserman(r, g, causal, c.samples, c.seed, c.bound);
        samples_evaluated += v.sample_count;
        Json vj;
        vj["status"] = v.status == osswb::OssermanVerdict::Status::Constant
                           ? "constant"
                           : (v.status == osswb::OssermanVerdict::Status::NonConstant
                                  ? "non-constant"
                                  : "inconclusive");
        if (v.common) vj["partition"] = v.common->blocks;
        Json seqs = Json::array();
        for (const auto& rs : v.observed_rank_sequences) seqs.push_back(rs.ranks);
        vj["rank_sequences"] = std::move(seqs);
        int max_order = 0;
        for (const auto& rs : v.observed_rank_sequences)
            max_order = std::max(max_order, rs.nilpotency_order());
        vj["nilpotency_max"] = max_order;
        vj["samples"] = v.sample_count;
        verdicts[osswb::causal_name(causal)] = std::move(vj);
        if (v.witness) {
            Json w;
            w["first"] = outcome_json(v.witness->first);
            w["second"] = outcome_json(v.witness->second);
            witnesses[osswb::causal_name(causal)] = std::move(w);
        }
    }
    Json report;
    report["config"] = config_json(c);
    report["verdicts"] = std::move(verdicts);
    report["witnesses"] = std::move(witnesses);
    return report;
}

std::vector<Rational> sample_base_point(const PolynomialMetric& metric, std::uint64_t seed,
                                        std::uint64_t index) {
    const int n = metric.dim();
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        osswb::SplitMix64 rng(osswb::stream_seed(seed ^ 0x706f696e74ULL, index * 1000 + attempt));
        std::vector<Rational> p(static_cast<std::size_t>(n));
        for (auto& x : p) x = Rational(rng.uniform(-5, 5));
        if (osswb::det(metric.gram_at(p)) != 0) return p;
    }
    throw osswb::DegenerateMetric("could not sample a nondegenerate base point");
}

// Metric route: curvature is computed pointwise at sampled base points and
// the direction sampling runs over the pointwise structures.
Json verify_metric(const Config& c, const PolynomialMetric& metric, int& samples_evaluated,
                   int& points_evaluated) {
    auto gamma = osswb::christoffel_first(metric);
    const int n_points = std::max(1, c.points);
    const int per_point = (c.samples + n_points - 1) / n_points;
    std::vector<VerdictAccumulator> accs;
    for (CausalType causal : causal_list(c.causal)) accs.push_back({causal});
    std::optional<osswb::Signature> sig;
    bool sig_constant = true;
    for (int pi = 0; pi < n_points; ++pi) {
        auto point = sample_base_point(metric, c.seed, static_cast<std::uint64_t>(pi));
        auto cp = osswb::curvature_at(metric, gamma, point);
        ++points_evaluated;
        auto s = osswb::sylvester_signature(cp.gram);
        if (!sig)
            sig = s;
        else if (!(s == *sig))
            sig_constant = false;
        InnerProduct g(cp.gram);
        for (auto& acc : accs) {
            osswb::JacobiBuilder build(cp.tensor, g);
            auto leading = osswb::canonical_candidates(g, acc.causal, per_point / 2);
            std::uint64_t draw = 0;
            for (int i = 0; i < per_point; ++i) {
                std::vector<Rational> x;
                if (static_cast<std::size_t>(i) < leading.size())
                    x = leading[static_cast<std::size_t>(i)];
                else
                    x = osswb::sample_vector_adaptive(
                        g, acc.causal, c.seed ^ static_cast<std::uint64_t>(pi + 1),
                        c.bound, draw++);
                auto rs = osswb::rank_sequence(build(x));
                osswb::SampleOutcome o{std::move(x), rs, osswb::partition_from_ranks(rs)};
                acc.feed(o, &point);
                ++samples_evaluated;
            }
        }
    }
    Json verdicts;
    verdicts["signature"] = signature_json(*sig);
    verdicts["signature_constant"] = sig_constant;
    Json witnesses = Json::object();
    for (const auto& acc : accs) {
        verdicts[osswb::causal_name(acc.causal)] = acc.to_json();
        if (acc.witness) {
            Json w;
            w["first"] = acc.witness->first;
            w["second"] = acc.witness->second;
            witnesses[osswb::causal_name(acc.causal)] = std::move(w);
        }
    }
    Json report;
    report["config"] = config_json(c);
    report["verdicts"] = std::move(verdicts);
    report["witnesses"] = std::move(witnesses);
    return report;
}

// Exit contract: with --expect-paper the run succeeds only if the report
// reproduces the family profile (spacelike constant of order 3, timelike
// non-constant).
bool expected_profile_met(const Json& report) {
    const Json& v = report.at("verdicts");
    if (v.contains("spacelike")) {
        const Json& s = v.at("spacelike");
        if (s.at("status") != "constant" || s.at("nilpotency_max") != 3) return false;
    }
    if (v.contains("timelike")) {
        if (v.at("timelike").at("status") != "non-constant") return false;
    }
    return true;
}

int run_verify(Config c) {
    if (c.samples < 2) throw osswb::InvalidInput("--samples must be >= 2");
    int samples_evaluated = 0, points_evaluated = 0;
    Json report;
    if (c.family == "lemma21") {
        if (c.s < 2) throw osswb::InvalidInput("--s must be >= 2 for built-in families");
        auto g = osswb::nil3_inner_product(c.s, RatMatrix(c.s, c.s));
        auto r = osswb::nil3_curvature(CurvatureTensor(c.s), osswb::csc_tensor(c.s));
        report = verify_algebraic(c, g, r, samples_evaluated);
    } else if (c.family == "lemma31") {
        if (c.s < 2) throw osswb::InvalidInput("--s must be >= 2 for built-in families");
        auto metric = osswb::nil3_polynomial_metric(c.s, osswb::csc_tensor(c.s));
        report = verify_metric(c, metric, samples_evaluated, points_evaluated);
    } else if (c.family == "remark32") {
        c.s = 2;
        report = verify_metric(c, osswb::nil3_example_metric(), samples_evaluated,
                               points_evaluated);
    } else if (c.family == "file") {
        if (c.inputs.size() != 1)
            throw osswb::InvalidInput("--family file requires exactly one --in spec");
        auto spec = osswb::spec_from_json(osswb::load_json_file(c.inputs[0]));
        if (spec.kind == osswb::ParsedSpec::Kind::Algebraic) {
            report = verify_algebraic(c, *spec.inner_product, *spec.curvature,
                                      samples_evaluated);
        } else {
            c.s = spec.metric->chart().s();
            report = verify_metric(c, *spec.metric, samples_evaluated, points_evaluated);
        }
    } else {
        throw osswb::InvalidInput("verify accepts --family lemma21|lemma31|remark32|file");
    }
    // deterministic work counters; wall-clock time would break the
    // byte-identical report guarantee
    Json timing;
    timing["samples_evaluated"] = samples_evaluated;
    timing["points_evaluated"] = points_evaluated;
    report["timing"] = std::move(timing);
    emit(c, report.dump(2));
    if (c.expect_paper && !expected_profile_met(report)) return kExitViolated;
    return kExitOk;
}

// ------------------------------------------------------------ realize ----

int run_realize(const Config& c) {
    std::optional<PolynomialMetric> metric;
    std::optional<CurvatureTensor> r2;
    bool family_route = false;
    if (c.family == "lemma31") {
        if (c.s < 2) throw osswb::InvalidInput("--s must be >= 2 for built-in families");
        r2 = osswb::csc_tensor(c.s);
        metric = osswb::nil3_polynomial_metric(c.s, *r2);
        family_route = true;
    } else if (c.family == "file") {
        if (c.inputs.size() != 2)
            throw osswb::InvalidInput(
                "realize --family file needs --in metric.json --in r2.json");
        auto spec = osswb::spec_from_json(osswb::load_json_file(c.inputs[0]));
        if (spec.kind != osswb::ParsedSpec::Kind::Metric)
            throw osswb::SpecParseError("first --in must be a metric spec");
        metric = std::move(*spec.metric);
        r2 = osswb::tensor_from_json(osswb::load_json_file(c.inputs[1]));
    } else {
        throw osswb::InvalidInput("realize accepts --family lemma31|file");
    }
    auto gamma = osswb::christoffel_first(*metric);
    bool all_pass = true;
    Json points = Json::array();
    int points_evaluated = 0;
    for (int pi = 0; pi < std::max(1, c.points); ++pi) {
        auto point = sample_base_point(*metric, c.seed, static_cast<std::uint64_t>(pi));
        auto res = osswb::realize_check(*metric, *r2, point);
        bool raised = osswb::raised_index_relations_hold(*metric, gamma, point);
        bool reduced = osswb::curvature_at(*metric, gamma, point).tensor ==
                       osswb::curvature_at_reduced(*metric, gamma, point).tensor;
        ++points_evaluated;
        Json pj;
        pj["point"] = vector_json(point);
        pj["realize"] = res.pass ? "pass" : "fail";
        if (!res.pass) {
            Json mm = Json::array();
            for (std::size_t i = 0; i < res.mismatches.size() && i < 20; ++i) {
                Json m;
                m["idx"] = res.mismatches[i].idx;
                m["computed"] = osswb::rat_to_string(res.mismatches[i].computed);
                m["expected"] = osswb::rat_to_string(res.mismatches[i].expected);
                mm.push_back(std::move(m));
            }
            pj["mismatches"] = std::move(mm);
        }
        pj["raised_index_relations"] = raised ? "pass" : "fail";
        pj["reduced_formula_agrees"] = reduced ? "pass" : "fail";
        pj["signature"] = signature_json(osswb::metric_signature_at(*metric, point));
        all_pass = all_pass && res.pass && raised && reduced;
        points.push_back(std::move(pj));
    }
    Json verdicts;
    if (family_route) {
        bool christoffel_ok = true;
        auto closed = osswb::christoffel_closed_form(metric->chart().s(), *r2);
        const int n = metric->dim();
        for (int i = 0; i < n && christoffel_ok; ++i)
            for (int j = 0; j < n && christoffel_ok; ++j)
                for (int k = 0; k < n; ++k)
                    if (gamma.at(i, j, k) != closed.at(i, j, k)) {
                        christoffel_ok = false;
                        break;
                    }
        verdicts["christoffel_closed_form"] = christoffel_ok ? "pass" : "fail";
        all_pass = all_pass && christoffel_ok;
    }
    verdicts["points"] = std::move(points);
    verdicts["all_pass"] = all_pass;
    Json report;
    report["config"] = config_json(c);
    report["verdicts"] = std::move(verdicts);
    report["witnesses"] = Json::object();
    Json timing;
    timing["samples_evaluated"] = 0;
    timing["points_evaluated"] = points_evaluated;
    report["timing"] = std::move(timing);
    emit(c, report.dump(2));
    return all_pass ? kExitOk : kExitViolated;
}

// ------------------------------------------------------------- report ----

std::string markdown_table(const Json& report) {
    std::string out = "| s | causal | status | partition | nilpotency_max |\n";
    out += "|---|--------|--------|-----------|----------------|\n";
    if (!report.contains("verdicts")) return out;
    const Json& v = report.at("verdicts");
    std::string s = report.contains("config") && report.at("config").contains("s")
                        ? report.at("config").at("s").dump()
                        : "-";
    for (const char* causal : {"spacelike", "timelike"}) {
        if (!v.contains(causal)) continue;
        const Json& c = v.at(causal);
        std::string partition = c.contains("partition") ? c.at("partition").dump() : "-";
        std::string order =
            c.contains("nilpotency_max") ? c.at("nilpotency_max").dump() : "-";
        out += "| " + s + " | " + causal + " | " + c.at("status").get<std::string>() +
               " | " + partition + " | " + order + " |\n";
    }
    return out;
}

int run_report(const Config& c) {
    Json report;
    if (c.inputs.empty()) {
        try {
            report = Json::parse(std::cin);
        } catch (const std::exception& e) {
            throw osswb::SpecParseError(std::string("invalid report on stdin: ") + e.what());
        }
    } else {
        report = osswb::load_json_file(c.inputs[0]);
    }
    if (c.format == "json")
        emit(c, report.dump(2));
    else if (c.format == "markdown")
        emit(c, markdown_table(report));
    else
        throw osswb::InvalidInput("--format must be json or markdown");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for curvature tensors, Jacobi operators, "
                 "and Jordan-Osserman verification"};
    app.require_subcommand(1);
    Config c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", c.family,
                        "lemma21 | lemma31 | remark32 | file (default lemma21)");
        sub->add_option("--s", c.s, "family size parameter s >= 2 (default 2)");
        sub->add_option("--samples", c.samples, "direction samples (default 200)");
        sub->add_option("--points", c.points, "base points for metric pipelines (default 20)");
        sub->add_option("--seed", c.seed, "random seed (default 0)");
        sub->add_option("--bound", c.bound, "integer component bound for samples (default 10)");
        sub->add_option("--causal", c.causal, "spacelike | timelike | both (default both)");
        sub->add_flag("--expect-paper", c.expect_paper,
                      "exit nonzero unless the family verdict profile is reproduced");
        sub->add_option("--format", c.format, "json | markdown (default json)");
        sub->add_option("--in", c.inputs, "input file(s)");
        sub->add_option("--out", c.output, "output file (default stdout)");
    };
    add_common(app.add_subcommand("gen", "write a family spec file"));
    add_common(app.add_subcommand("verify", "run symmetry validation and Osserman verdicts"));
    add_common(app.add_subcommand("realize", "check pointwise curvature against the target tensor"));
    add_common(app.add_subcommand("report", "render a report as JSON or markdown"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    c.command = app.get_subcommands().front()->get_name();
    try {
        if (c.command == "gen") return run_gen(c);
        if (c.command == "verify") return run_verify(c);
        if (c.command == "realize") return run_realize(c);
        return run_report(c);
    } catch (const osswb::NonNilpotent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolated;
    } catch (const osswb::SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const osswb::IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const osswb::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const osswb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolated;
    }
}

#include "quiverfan/cli.hpp"

#include "quiverfan/io.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace quiverfan::cli {

namespace {

using io::Json;

constexpr int coverage_samples = 1000;

struct Options {
    std::string verb;
    std::string quiver_path;
    std::string weight = "canonical";
    std::string fan_weight;
    std::string from;
    std::string to;
    std::string out;
    std::string detail = "summary";
    bool trace = false;
    std::uint64_t seed = 1;
};

// A failure attributable to the input documents or arguments (exit 1).
struct InputFailure {
    std::string code;
    std::string detail;
};

template <typename F>
auto as_input(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw InputFailure{std::string(to_string(e.code())), e.detail()};
    } catch (const io::IoError& e) {
        throw InputFailure{"IoError", e.what()};
    } catch (const Json::exception& e) {
        throw InputFailure{"MalformedInput", e.what()};
    }
}

struct Context {
    Options opt;
    Quiver quiver;
    Weight theta;
    std::optional<Weight> fan_weight;
    std::string summary;

    bool full() const { return opt.detail == "full"; }
};

Weight load_weight(const Quiver& quiver, const std::string& source) {
    if (source == "canonical") return canonical_weight(quiver);
    return as_input([&] { return io::weight_from_json(quiver, io::read_json(source)); });
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + ")";
}

Json trees_json(const Quiver& q, const std::vector<ArrowSet>& trees) {
    Json out = Json::array();
    for (const ArrowSet& t : trees) out.push_back(io::arrow_list(q, t));
    return out;
}

// Stable trees and the polytope vertex each one produces.
Json trace_json(const Quiver& q, const Weight& theta) {
    Json vertices = Json::array();
    for (const auto& [tree, flow] : polytope_vertices(q, theta))
        vertices.push_back({{"tree", io::arrow_list(q, tree)}, {"flow", io::flow_json(q, flow)}});
    return {{"weight", io::weight_json(q, theta)},
            {"stable_trees", trees_json(q, stable_trees(q, theta))},
            {"polytope_vertices", vertices}};
}

void merge(Json& into, const Json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

Json verb_validate(Context& c) {
    const Quiver& q = c.quiver;
    Json order = Json::array();
    for (VertexIndex v : q.topological_order()) order.push_back(q.vertex_id(v));
    c.summary = std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) +
                " arrows, moduli dimension " + std::to_string(q.moduli_dimension());
    return {{"valid", true},
            {"quiver", io::quiver_json(q)},
            {"num_vertices", q.num_vertices()},
            {"num_arrows", q.num_arrows()},
            {"moduli_dimension", q.moduli_dimension()},
            {"topological_order", order},
            {"canonical_weight", io::weight_json(q, canonical_weight(q))}};
}

Json verb_walls(Context& c) {
    const Quiver& q = c.quiver;
    const std::vector<Wall> walls = enumerate_walls(q);
    const PositionReport pos = weight_position(q, c.theta);
    Json all = Json::array();
    for (const Wall& w : walls) all.push_back(io::wall_json(q, w));
    Json out = {{"weight", io::weight_json(q, c.theta)}, {"walls", all}};
    merge(out, io::position_json(q, pos));
    c.summary = std::to_string(walls.size()) + " walls, " + std::to_string(pos.walls_hit.size()) +
                " through the weight; general position: " + yes_no(pos.general_position);
    return out;
}

Json verb_canonical(Context& c) {
    const Quiver& q = c.quiver;
    const Weight theta = canonical_weight(q);
    const PositionReport pos = weight_position(q, theta);
    const ArrowSet stable = stable_arrow_set(q, theta);
    Json out = {{"canonical_weight", io::weight_json(q, theta)}};
    merge(out, io::position_json(q, pos));
    out["stable_arrow_set"] = io::arrow_list(q, stable);
    out["full_arrow_set"] = stable.size() == q.num_arrows();
    c.summary = "canonical weight general position: " + yes_no(pos.general_position);
    if (pos.general_position) {
        const ReflexivityReport refl = reflexivity_report(q);
        out["reflexivity"] = io::reflexivity_json(q, refl);
        c.summary += "; reflexive: " + yes_no(refl.reflexive);
        if (c.opt.trace) out["trace"] = trace_json(q, theta);
    }
    return out;
}

Json verb_polytope(Context& c) {
    const Quiver& q = c.quiver;
    const Weight& general = c.fan_weight ? *c.fan_weight : c.theta;
    require_general_position(q, general);
    const FlowPolytope polytope = c.fan_weight ? section_polytope(q, c.theta, stable_arrow_set(q, *c.fan_weight))
                                               : regular_flow_polytope(q, c.theta);
    Json out = io::polytope_json(q, polytope, c.full());
    if (c.fan_weight) out["fan_weight"] = io::weight_json(q, *c.fan_weight);
    if (c.opt.trace) out["trace"] = trace_json(q, general);
    if (polytope.is_bounded())
        c.summary = std::to_string(out["vertices"].size()) + " vertices, " +
                    std::to_string(out["lattice_point_count"].get<std::size_t>()) + " lattice points, " +
                    std::to_string(out["interior_point_count"].get<std::size_t>()) + " interior";
    else
        c.summary = "unbounded polytope";
    return out;
}

Json verb_fan(Context& c) {
    const Quiver& q = c.quiver;
    const Fan fan = build_fan(q, c.theta);
    const FanChecks checks = fan_checks(fan);
    const std::size_t failures = coverage_failures(fan, coverage_samples, c.opt.seed);
    Json out = {{"weight", io::weight_json(q, c.theta)}};
    merge(out, io::fan_json(q, fan, checks));
    out["coverage"] = {{"samples", coverage_samples}, {"seed", c.opt.seed}, {"failures", failures}};
    if (c.opt.trace) out["trace"] = trace_json(q, c.theta);
    c.summary = std::to_string(fan.num_rays()) + " rays, " + std::to_string(fan.cones.size()) +
                " maximal cones; smooth: " + yes_no(checks.smooth) + ", complete: " + yes_no(checks.complete);
    return out;
}

Json verb_cohomology(Context& c) {
    const Quiver& q = c.quiver;
    const Weight fan_weight = c.fan_weight ? *c.fan_weight : canonical_weight(q);
    const CohomologyEngine engine(q, fan_weight);
    const CohomologyTable table = engine.compute(c.theta);
    Json out = {{"fan_weight", io::weight_json(q, fan_weight)}};
    merge(out, io::cohomology_json(q, table, c.full() || c.opt.trace));
    if (c.full()) {
        const GlobalGeneration gg = global_generation(engine, c.theta);
        out["globally_generated"] = gg.globally_generated;
        out["full_dimensional"] = gg.full_dimensional;
    }
    if (c.opt.trace) out["trace"] = trace_json(q, fan_weight);
    c.summary = "h = " + join(table.h) + ", euler " + std::to_string(table.euler);
    return out;
}

Json verb_hom(Context& c) {
    const Quiver& q = c.quiver;
    if (c.opt.from.empty() != c.opt.to.empty())
        throw InputFailure{"UsageError", "--from and --to must be given together"};
    Json out = {{"weight", io::weight_json(q, c.theta)}};
    if (!c.opt.from.empty()) {
        const VertexIndex p = as_input([&] { return q.vertex_index(c.opt.from); });
        const VertexIndex r = as_input([&] { return q.vertex_index(c.opt.to); });
        const std::size_t dim = hom_dim(q, c.theta, p, r);
        out["from"] = c.opt.from;
        out["to"] = c.opt.to;
        out["hom_dim"] = dim;
        if (bundle_iso_classes(q, c.theta).is_identity()) {
            Json paths = Json::array();
            for (const Walk& w : enumerate_paths(q, p, r)) {
                Json arrows = Json::array();
                for (const Step& s : w.steps()) arrows.push_back(q.arrow(s.arrow).id);
                paths.push_back(arrows);
            }
            out["paths"] = paths;
        }
        c.summary = "dim Hom(U_" + c.opt.from + ", U_" + c.opt.to + ") = " + std::to_string(dim);
        return out;
    }
    const EndAlgebraReport end = end_algebra_report(q, c.theta);
    Json matrix = Json::array();
    for (Index i = 0; i < end.hom.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < end.hom.cols(); ++j) row.push_back(end.hom(i, j));
        matrix.push_back(row);
    }
    out["vertices"] = q.vertex_ids();
    out["hom_matrix"] = matrix;
    out["dim"] = end.dim;
    c.summary = "Hom matrix total " + std::to_string(end.dim);
    return out;
}

Json verb_ext(Context& c) {
    const Quiver& q = c.quiver;
    const BundleIsoClasses classes = bundle_iso_classes(q, c.theta);
    Json out = {{"weight", io::weight_json(q, c.theta)}};
    ExtReport report;
    if (classes.is_identity()) {
        report = ext_table(q, c.theta);
        merge(out, io::ext_json(q, report, c.full()));
    } else {
        const Quiver reduced = classes.quotient.quiver();
        report = ext_table(reduced, classes.quotient.weight);
        out["quotient_vertices"] = classes.quotient.vertices;
        merge(out, io::ext_json(reduced, report, c.full()));
    }
    c.summary = "ext = " + join(report.ext) + "; vanishing holds: " + yes_no(report.vanishing_holds);
    return out;
}

Json verb_endalg(Context& c) {
    const ExceptionalReport report = exceptional_check(c.quiver, c.theta);
    Json out = {{"weight", io::weight_json(c.quiver, c.theta)}};
    merge(out, io::end_json(c.quiver, report));
    c.summary = "dim End = " + std::to_string(report.end.dim) + "; path algebra: " +
                yes_no(report.end.is_path_algebra);
    return out;
}

Json verb_exceptional(Context& c) {
    const ExceptionalReport report = exceptional_check(c.quiver, c.theta);
    Json out = {{"weight", io::weight_json(c.quiver, c.theta)}};
    merge(out, io::exceptional_json(c.quiver, report));
    c.summary = "strong exceptional: " + yes_no(report.strong_exceptional);
    return out;
}

Json verb_report(Context& c) {
    const Quiver& q = c.quiver;
    const PositionReport pos = weight_position(q, c.theta);
    require_general_position(q, c.theta);
    const FlowPolytope polytope = regular_flow_polytope(q, c.theta);
    const ExceptionalReport exc = exceptional_check(q, c.theta);
    const BundleIsoClasses& classes = exc.end.classes;

    std::optional<Quiver> reduced;
    if (!classes.is_identity()) reduced = classes.quotient.quiver();
    const Quiver& base = reduced ? *reduced : q;
    const Fan fan = build_fan(base, reduced ? classes.quotient.weight : c.theta);
    const FanChecks checks = fan_checks(fan);

    Json out = {{"quiver", io::quiver_json(q)},
                {"moduli_dimension", q.moduli_dimension()},
                {"weight", io::weight_json(q, c.theta)},
                {"walls_total", enumerate_walls(q).size()},
                {"position", io::position_json(q, pos)},
                {"polytope", io::polytope_json(q, polytope, c.full())}};
    if (c.theta == canonical_weight(q)) out["reflexivity"] = io::reflexivity_json(q, reflexivity_report(q));
    if (reduced) out["fan_quiver"] = io::quiver_json(base);
    out["fan"] = io::fan_json(base, fan, checks);
    out["ext"] = io::ext_json(base, exc.ext, c.full());
    out["end"] = io::end_json(q, exc);
    out["exceptional"] = io::exceptional_json(q, exc);
    out["vanishing_holds"] = exc.ext.vanishing_holds;
    out["dim_end"] = exc.end.dim;
    if (c.opt.trace) out["trace"] = trace_json(q, c.theta);
    c.summary = "fan: " + std::to_string(fan.num_rays()) + " rays, " + std::to_string(fan.cones.size()) +
                " cones; ext = " + join(exc.ext.ext) + "; dim End = " + std::to_string(exc.end.dim) +
                "; strong exceptional: " + yes_no(exc.strong_exceptional);
    return out;
}

const std::map<std::string, std::function<Json(Context&)>>& dispatch() {
    static const std::map<std::string, std::function<Json(Context&)>> table = {
        {"validate", verb_validate},   {"walls", verb_walls},   {"canonical", verb_canonical},
        {"polytope", verb_polytope},   {"fan", verb_fan},       {"cohomology", verb_cohomology},
        {"hom", verb_hom},             {"ext", verb_ext},       {"endalg", verb_endalg},
        {"exceptional", verb_exceptional}, {"report", verb_report},
    };
    return table;
}

std::string render(const Json& doc) { return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n"; }

RunResult failure(int exit_code, const std::string& code, const std::string& detail) {
    return {exit_code, render(io::error_json(code, detail)), "error: " + code + ": " + detail + "\n"};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    Options opt;
    std::vector<std::string> verbs;
    for (const auto& [name, fn] : dispatch()) verbs.push_back(name);

    CLI::App app{"Toric moduli of thin quiver representations: walls, flow polytopes, fans, line-bundle "
                 "cohomology and the universal bundle.",
                 "quiverfan"};
    app.add_option("verb", opt.verb, "Pipeline stage to run")->required()->check(CLI::IsMember(verbs));
    app.add_option("quiver", opt.quiver_path, "Quiver JSON file")->required();
    app.add_option("--weight", opt.weight, "Weight JSON file or 'canonical'")->capture_default_str();
    app.add_option("--fan-weight", opt.fan_weight,
                   "Weight whose fan defines the variety (cohomology, polytope of sections)");
    app.add_option("--from", opt.from, "Source vertex for hom");
    app.add_option("--to", opt.to, "Target vertex for hom");
    app.add_option("--out", opt.out, "Also write the JSON document to this file");
    app.add_option("--detail", opt.detail, "Detail level")
        ->check(CLI::IsMember({"summary", "full"}))
        ->capture_default_str();
    app.add_flag("--trace", opt.trace, "Include stable trees, polytope vertices and sign patterns");
    app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();

    std::vector<const char*> argv{"quiverfan"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return {0, app.help(), ""};
        return failure(1, "UsageError", e.what());
    }

    try {
        const Quiver quiver = as_input([&] { return io::quiver_from_json(io::read_json(opt.quiver_path)); });
        Context c{opt, quiver, load_weight(quiver, opt.weight), std::nullopt, ""};
        if (!opt.fan_weight.empty()) c.fan_weight = load_weight(quiver, opt.fan_weight);

        const Json doc = dispatch().at(opt.verb)(c);
        const std::string text = render(doc);
        if (!opt.out.empty()) as_input([&] { io::write_text(opt.out, text); });
        return {0, text, opt.verb + ": " + c.summary + "\n"};
    } catch (const InputFailure& f) {
        return failure(1, f.code, f.detail);
    } catch (const Error& e) {
        return failure(is_input_error(e.code()) ? 1 : 2, std::string(to_string(e.code())), e.detail());
    } catch (const std::exception& e) {
        return failure(2, "InternalError", e.what());
    }
}

}  // namespace quiverfan::cli

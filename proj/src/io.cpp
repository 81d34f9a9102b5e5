#include "quiverfan/io.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

namespace quiverfan::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

std::string string_field(const Json& doc, const char* key) {
    const Json& v = member(doc, key);
    if (!v.is_string()) malformed(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Integer integer_value(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    if (v.is_string()) {
        static const std::regex pattern("-?[0-9]+");
        const auto s = v.get<std::string>();
        if (std::regex_match(s, pattern)) return Integer(s);
    }
    malformed(where + " must be an integer");
}

Rational rational_value(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(integer_value(v, where));
    if (v.is_string()) {
        static const std::regex pattern("(-?[0-9]+)(/([0-9]+))?");
        std::smatch m;
        const auto s = v.get<std::string>();
        if (std::regex_match(s, m, pattern)) {
            const Integer num(m[1].str());
            const Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
            if (den == 0) malformed(where + " has a zero denominator");
            return Rational(num, den);
        }
    }
    malformed(where + " must be an integer or a \"n/d\" string");
}

// Values keyed by id; every id must appear exactly once.
template <typename Value, typename Parse>
std::vector<Value> keyed_values(const Json& doc, const std::vector<std::string>& ids, const char* kind,
                                ErrorCode unknown, Parse parse) {
    if (!doc.is_object()) malformed(std::string(kind) + " document must be an object");
    std::vector<Value> out;
    for (const std::string& id : ids) {
        if (!doc.contains(id)) malformed(std::string(kind) + " has no entry for \"" + id + "\"");
        out.push_back(parse(doc.at(id), std::string(kind) + " entry \"" + id + "\""));
    }
    const std::set<std::string> known(ids.begin(), ids.end());
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw Error(unknown, std::string(kind) + " names unknown id \"" + key + "\"");
    return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        malformed(path.string() + " is not valid JSON: " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

Quiver quiver_from_json(const Json& doc) {
    if (!doc.is_object()) malformed("quiver document must be an object");
    const Json& vertices = member(doc, "vertices");
    const Json& arrows = member(doc, "arrows");
    if (!vertices.is_array()) malformed("\"vertices\" must be an array");
    if (!arrows.is_array()) malformed("\"arrows\" must be an array");
    std::vector<std::string> ids;
    for (const Json& v : vertices) {
        if (!v.is_string()) malformed("vertex ids must be strings");
        ids.push_back(v.get<std::string>());
    }
    std::vector<ArrowSpec> specs;
    for (const Json& a : arrows) specs.push_back({string_field(a, "id"), string_field(a, "source"), string_field(a, "target")});
    return Quiver(std::move(ids), specs);
}

Weight weight_from_json(const Quiver& quiver, const Json& doc) {
    const auto values = keyed_values<Integer>(doc, quiver.vertex_ids(), "weight", ErrorCode::UnknownVertex, integer_value);
    IntVector v(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Index>(i)) = values[i];
    return Weight(v);
}

RatVector flow_from_json(const Quiver& quiver, const Json& doc) {
    std::vector<std::string> ids;
    for (const Arrow& a : quiver.arrows()) ids.push_back(a.id);
    const auto values = keyed_values<Rational>(doc, ids, "flow", ErrorCode::MalformedInput, rational_value);
    RatVector v(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Index>(i)) = values[i];
    return v;
}

Json number(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

Json number(const Rational& x) {
    if (is_integral(x)) return number(Integer(numerator(x)));
    return to_string(x);
}

Json quiver_json(const Quiver& quiver) {
    Json arrows = Json::array();
    for (const Arrow& a : quiver.arrows())
        arrows.push_back({{"id", a.id}, {"source", quiver.vertex_id(a.source)}, {"target", quiver.vertex_id(a.target)}});
    return {{"vertices", quiver.vertex_ids()}, {"arrows", arrows}};
}

Json weight_json(const Quiver& quiver, const Weight& theta) {
    Json out = Json::object();
    for (VertexIndex v = 0; v < quiver.num_vertices(); ++v) out[quiver.vertex_id(v)] = number(theta[static_cast<Index>(v)]);
    return out;
}

Json flow_json(const Quiver& quiver, const IntVector& flow) {
    Json out = Json::object();
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a) out[quiver.arrow(a).id] = number(flow(static_cast<Index>(a)));
    return out;
}

Json flow_json(const Quiver& quiver, const RatVector& flow) {
    Json out = Json::object();
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a) out[quiver.arrow(a).id] = number(flow(static_cast<Index>(a)));
    return out;
}

Json vertex_list(const Quiver& quiver, const VertexSet& set) { return quiver.vertex_ids(set); }

Json arrow_list(const Quiver& quiver, const ArrowSet& set) { return quiver.arrow_ids(set); }

Json wall_json(const Quiver& quiver, const Wall& wall) {
    return {{"partition_plus", vertex_list(quiver, wall.plus)}, {"t_plus", wall.t_plus}, {"t_minus", wall.t_minus}};
}

Json verdict_json(const Quiver& quiver, const StabilityVerdict& verdict) {
    Json out = {{"verdict", std::string(to_string(verdict.verdict))}};
    out["witness"] = verdict.witness ? vertex_list(quiver, *verdict.witness) : Json(nullptr);
    return out;
}

Json position_json(const Quiver& quiver, const PositionReport& report) {
    Json walls = Json::array();
    for (const Wall& w : report.walls_hit) walls.push_back(wall_json(quiver, w));
    Json out = {{"general_position", report.general_position},
                {"moduli_nonempty", report.moduli_nonempty},
                {"walls_hit", walls}};
    if (report.canonical) {
        const CanonicalDiagnostics& d = *report.canonical;
        out["canonical"] = {{"has_balanced_wall", d.has_balanced_wall},
                            {"has_thin_wall", d.has_thin_wall},
                            {"predicted_general_position", d.predicted_general_position},
                            {"predicted_full_arrow_set", d.predicted_full_arrow_set},
                            {"full_arrow_set", d.full_arrow_set},
                            {"consistent", d.consistent}};
    }
    return out;
}

Json reflexivity_json(const Quiver& quiver, const ReflexivityReport& report) {
    return {{"lattice_point_count", report.lattice_points},
            {"interior_point_count", report.interior_points},
            {"interior_is_all_ones", report.interior_is_all_ones},
            {"facet_arrows", arrow_list(quiver, report.facet_arrows)},
            {"facets_at_distance_one", report.facets_at_distance_one},
            {"reflexive", report.reflexive}};
}

Json polytope_json(const Quiver& quiver, const FlowPolytope& polytope, bool full) {
    Json out = {{"weight", weight_json(quiver, polytope.weight())},
                {"constrained_arrows", arrow_list(quiver, polytope.constrained_arrows())},
                {"bounded", polytope.is_bounded()}};
    if (!polytope.is_bounded()) return out;
    Json vertices = Json::array();
    for (const RatVector& v : enumerate_vertices(polytope)) {
        Json row = Json::array();
        for (Index a = 0; a < v.size(); ++a) row.push_back(number(v(a)));
        vertices.push_back(row);
    }
    out["vertices"] = vertices;
    const LatticePointSet points = lattice_points(polytope);
    out["lattice_point_count"] = points.count();
    out["interior_point_count"] = points.interior.size();
    out["dimension"] = affine_dimension(polytope);
    if (full) {
        Json pts = Json::array();
        for (const IntVector& p : points.points) {
            Json row = Json::array();
            for (Index a = 0; a < p.size(); ++a) row.push_back(number(p(a)));
            pts.push_back(row);
        }
        out["lattice_points"] = pts;
    }
    return out;
}

Json fan_json(const Quiver& quiver, const Fan& fan, const FanChecks& checks) {
    Json rays = Json::object();
    for (Index k = 0; k < fan.num_rays(); ++k) {
        Json coords = Json::array();
        for (Index j = 0; j < fan.dimension; ++j) coords.push_back(number(fan.rays(j, k)));
        rays[quiver.arrow(fan.ray_arrows[static_cast<std::size_t>(k)]).id] = coords;
    }
    Json cones = Json::array();
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        ArrowSet spanned;
        for (Index r : fan.cones[c]) spanned.push_back(fan.ray_arrows[static_cast<std::size_t>(r)]);
        cones.push_back({{"tree", arrow_list(quiver, fan.trees[c])}, {"rays", arrow_list(quiver, spanned)}});
    }
    return {{"dimension", fan.dimension},
            {"rays", rays},
            {"max_cones", cones},
            {"smooth", checks.smooth},
            {"complete", checks.complete},
            {"pairwise_intersections_ok", checks.pairwise_intersections_ok},
            {"issues", checks.issues}};
}

Json cohomology_json(const Quiver& quiver, const CohomologyTable& table, bool full) {
    Json out = {{"weight", weight_json(quiver, table.weight)}, {"h", table.h}, {"euler", table.euler}};
    if (full) {
        Json patterns = Json::array();
        for (const PatternContribution& p : table.patterns)
            patterns.push_back({{"below", arrow_list(quiver, p.below)},
                                {"lattice_points", p.lattice_points},
                                {"reduced_cohomology", p.reduced}});
        out["patterns"] = patterns;
    }
    return out;
}

Json ext_json(const Quiver& quiver, const ExtReport& report, bool full) {
    Json pairs = Json::object();
    for (const auto& [key, table] : report.pairs) {
        const std::string name = quiver.vertex_id(key.first) + "->" + quiver.vertex_id(key.second);
        pairs[name] = full ? cohomology_json(quiver, table, true) : Json(table.h);
    }
    return {{"pairs", pairs}, {"ext", report.ext}, {"vanishing_holds", report.vanishing_holds}};
}

Json end_json(const Quiver& quiver, const ExceptionalReport& report) {
    const EndAlgebraReport& end = report.end;
    Json matrix = Json::array();
    for (Index p = 0; p < end.hom.rows(); ++p) {
        Json row = Json::array();
        for (Index q = 0; q < end.hom.cols(); ++q) row.push_back(end.hom(p, q));
        matrix.push_back(row);
    }
    Json classes = Json::array();
    for (const VertexSet& c : end.classes.classes) classes.push_back(vertex_list(quiver, c));
    Json out = {{"hom_matrix", matrix},
                {"dim", end.dim},
                {"is_basic", end.is_basic},
                {"is_path_algebra", end.is_path_algebra},
                {"basic_dim", end.basic_dim},
                {"iso_classes", classes},
                {"inverted_arrows", arrow_list(quiver, end.classes.inverted_arrows)},
                {"sequence", vertex_list(quiver, report.sequence)},
                {"strong_exceptional", report.strong_exceptional}};
    if (!end.classes.is_identity()) {
        const QuotientQuiver& qq = end.classes.quotient;
        Json arrows = Json::array();
        for (const ArrowSpec& a : qq.arrows) arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
        Json weight = Json::object();
        for (std::size_t c = 0; c < qq.vertices.size(); ++c) weight[qq.vertices[c]] = number(qq.weight[static_cast<Index>(c)]);
        out["quotient"] = {{"vertices", qq.vertices},
                           {"arrows", arrows},
                           {"weight", weight},
                           {"acyclic", qq.acyclic},
                           {"full_arrow_set", qq.full_arrow_set}};
    }
    return out;
}

Json exceptional_json(const Quiver& quiver, const ExceptionalReport& report) {
    return {{"sequence", vertex_list(quiver, report.sequence)},
            {"summands_exceptional", report.summands_exceptional},
            {"ordered", report.ordered},
            {"directed", report.directed},
            {"exceptional", report.exceptional},
            {"strong_exceptional", report.strong_exceptional},
            {"ext", report.ext.ext},
            {"vanishing_holds", report.ext.vanishing_holds}};
}

Json error_json(std::string_view code, const std::string& detail) {
    return {{"error", std::string(code)}, {"detail", detail}};
}

}  // namespace quiverfan::io

#include "quiverfan/algebra.hpp"

#include <algorithm>
#include <functional>

namespace quiverfan {

namespace {

// Hom dimensions by both routes, with everything shared across pairs.
class HomOracle {
public:
    HomOracle(const Quiver& quiver, const Weight& theta)
        : quiver_(quiver), stable_(stable_arrow_set(quiver, theta)), classes_(bundle_iso_classes(quiver, theta)) {
        if (classes_.is_identity()) {
            paths_ = path_count_matrix(quiver);
        } else if (classes_.quotient.acyclic) {
            paths_ = path_count_matrix(classes_.quotient.quiver());
        }
    }

    const BundleIsoClasses& classes() const noexcept { return classes_; }

    std::size_t operator()(VertexIndex p, VertexIndex q) const {
        const FlowPolytope sections = section_polytope(quiver_, vertex_pair_weight(quiver_, p, q), stable_);
        const std::size_t by_lattice = count_lattice_points(sections);
        if (paths_) {
            const bool identity = classes_.is_identity();
            const auto i = static_cast<Index>(identity ? p : classes_.class_of[p]);
            const auto j = static_cast<Index>(identity ? q : classes_.class_of[q]);
            const auto by_paths = static_cast<std::size_t>((*paths_)(i, j));
            if (by_paths != by_lattice)
                throw Error(ErrorCode::InternalInconsistency,
                            "Hom(" + quiver_.vertex_id(p) + "," + quiver_.vertex_id(q) + "): " +
                                std::to_string(by_lattice) + " lattice points but " + std::to_string(by_paths) +
                                " paths");
        }
        return by_lattice;
    }

private:
    const Quiver& quiver_;
    ArrowSet stable_;
    BundleIsoClasses classes_;
    std::optional<MatrixX<long long>> paths_;
};

// Directed graph on n nodes given by an adjacency predicate has no cycle.
template <typename Edge>
bool is_acyclic(std::size_t n, Edge edge) {
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v || !edge(v, w)) continue;
            if (state[w] == 1) return false;
            if (state[w] == 0 && !visit(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && !visit(v)) return false;
    return true;
}

}  // namespace

Quiver QuotientQuiver::quiver() const {
    if (!acyclic) throw Error(ErrorCode::QuotientHasOrientedCycle, "the quotient quiver has an oriented cycle");
    return Quiver(vertices, arrows);
}

BundleIsoClasses bundle_iso_classes(const Quiver& quiver, const Weight& theta) {
    require_general_position(quiver, theta);
    const ArrowSet stable = stable_arrow_set(quiver, theta);

    BundleIsoClasses out;
    UnionFind uf(quiver.num_vertices());
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a) {
        if (std::binary_search(stable.begin(), stable.end(), a)) continue;
        out.inverted_arrows.push_back(a);
        uf.unite(quiver.arrow(a).source, quiver.arrow(a).target);
    }
    std::vector<std::size_t> root_class(quiver.num_vertices(), quiver.num_vertices());
    out.class_of.resize(quiver.num_vertices());
    for (VertexIndex v = 0; v < quiver.num_vertices(); ++v) {
        std::size_t& c = root_class[uf.find(v)];
        if (c == quiver.num_vertices()) {
            c = out.classes.size();
            out.classes.emplace_back();
        }
        out.classes[c].push_back(v);
        out.class_of[v] = c;
    }

    QuotientQuiver& qq = out.quotient;
    IntVector induced = IntVector::Zero(static_cast<Index>(out.classes.size()));
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        std::string name;
        for (VertexIndex v : out.classes[c]) {
            name += (name.empty() ? "" : "+") + quiver.vertex_id(v);
            induced(static_cast<Index>(c)) += theta[static_cast<Index>(v)];
        }
        qq.vertices.push_back(std::move(name));
    }
    qq.weight = Weight(induced);
    for (ArrowIndex a : stable) {
        const Arrow& arr = quiver.arrow(a);
        qq.arrows.push_back({arr.id, qq.vertices[out.class_of[arr.source]], qq.vertices[out.class_of[arr.target]]});
    }
    const std::size_t n = out.classes.size();
    qq.acyclic = std::none_of(stable.begin(), stable.end(),
                              [&](ArrowIndex a) {
                                  return out.class_of[quiver.arrow(a).source] == out.class_of[quiver.arrow(a).target];
                              }) &&
                 is_acyclic(n, [&](std::size_t i, std::size_t j) {
                     return std::any_of(stable.begin(), stable.end(), [&](ArrowIndex a) {
                         return out.class_of[quiver.arrow(a).source] == i && out.class_of[quiver.arrow(a).target] == j;
                     });
                 });
    if (qq.acyclic) {
        const Quiver reduced = qq.quiver();
        qq.full_arrow_set = stable_arrow_set(reduced, qq.weight).size() == reduced.num_arrows();
    }
    return out;
}

std::size_t hom_dim(const Quiver& quiver, const Weight& theta, VertexIndex p, VertexIndex q) {
    return HomOracle(quiver, theta)(p, q);
}

EndAlgebraReport end_algebra_report(const Quiver& quiver, const Weight& theta) {
    const HomOracle oracle(quiver, theta);
    const auto n = static_cast<Index>(quiver.num_vertices());
    EndAlgebraReport report;
    report.classes = oracle.classes();
    report.hom.resize(n, n);
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q)
            report.hom(p, q) = static_cast<long long>(oracle(static_cast<VertexIndex>(p), static_cast<VertexIndex>(q)));
    report.dim = report.hom.sum();
    report.is_basic = report.classes.is_identity();
    report.is_path_algebra = report.classes.is_identity();
    if (report.is_path_algebra && report.dim != path_count_matrix(quiver).sum())
        throw Error(ErrorCode::InternalInconsistency, "End dimension differs from the number of paths");
    for (const VertexSet& a : report.classes.classes)
        for (const VertexSet& b : report.classes.classes)
            report.basic_dim += report.hom(static_cast<Index>(a.front()), static_cast<Index>(b.front()));
    return report;
}

ExceptionalReport exceptional_check(const Quiver& quiver, const Weight& theta) {
    ExceptionalReport report;
    report.end = end_algebra_report(quiver, theta);
    const BundleIsoClasses& classes = report.end.classes;

    // Ext is computed on whichever quiver carries the fan; its vertices are the classes.
    std::optional<Quiver> reduced;
    if (!classes.is_identity()) reduced = classes.quotient.quiver();
    const Quiver& base = reduced ? *reduced : quiver;
    const CohomologyEngine engine(base, reduced ? classes.quotient.weight : theta);
    report.ext = ext_table(engine);

    const auto ext_of = [&](std::size_t i, std::size_t j) -> const std::vector<std::int64_t>& {
        return report.ext.pairs.at({i, j}).h;
    };
    const std::size_t n = classes.classes.size();
    const auto rep = [&](std::size_t c) { return static_cast<Index>(classes.classes[c].front()); };

    for (VertexIndex v : base.topological_order())
        report.sequence.push_back(classes.classes[v].front());

    report.summands_exceptional = true;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& h = ext_of(c, c);
        if (report.end.hom(rep(c), rep(c)) != 1 || h[0] != 1 ||
            std::any_of(h.begin() + 1, h.end(), [](std::int64_t x) { return x != 0; }))
            report.summands_exceptional = false;
    }

    const auto& order = base.topological_order();
    report.ordered = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const auto& h = ext_of(order[j], order[i]);
            if (report.end.hom(rep(order[j]), rep(order[i])) != 0 ||
                std::any_of(h.begin(), h.end(), [](std::int64_t x) { return x != 0; }))
                report.ordered = false;
        }
    }

    report.directed = is_acyclic(n, [&](std::size_t i, std::size_t j) { return report.end.hom(rep(i), rep(j)) != 0; });
    report.exceptional = report.summands_exceptional && report.ordered;
    report.strong_exceptional = report.exceptional && report.ext.vanishing_holds;
    return report;
}

}  // namespace quiverfan

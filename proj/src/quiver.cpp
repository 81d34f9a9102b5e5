#include "quiverfan/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace quiverfan {

UnionFind::UnionFind(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    --components_;
    return true;
}

namespace {

// Arrow ids forming one oriented cycle among the vertices Kahn could not remove.
std::string describe_cycle(const std::vector<Arrow>& arrows, const std::vector<int>& indegree,
                           std::size_t num_vertices) {
    std::vector<std::ptrdiff_t> incoming(num_vertices, -1);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Arrow& arr = arrows[a];
        if (indegree[arr.source] > 0 && indegree[arr.target] > 0 && incoming[arr.target] < 0)
            incoming[arr.target] = static_cast<std::ptrdiff_t>(a);
    }
    VertexIndex v = 0;
    while (indegree[v] <= 0) ++v;
    // walking backwards must revisit a vertex
    std::vector<int> seen(num_vertices, -1);
    std::vector<ArrowIndex> trail;
    while (seen[v] < 0) {
        seen[v] = static_cast<int>(trail.size());
        const auto a = static_cast<ArrowIndex>(incoming[v]);
        trail.push_back(a);
        v = arrows[a].source;
    }
    std::string out;
    for (std::size_t i = static_cast<std::size_t>(seen[v]); i < trail.size(); ++i) {
        if (!out.empty()) out += ",";
        out += arrows[trail[i]].id;
    }
    return out;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorCode::MalformedInput, "quiver has no vertices");
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!vertex_lookup_.emplace(vertices_[v], v).second)
            throw Error(ErrorCode::DuplicateId, "vertex '" + vertices_[v] + "'");
    }
    arrows_.reserve(arrows.size());
    for (const ArrowSpec& spec : arrows) {
        if (!arrow_lookup_.emplace(spec.id, arrows_.size()).second)
            throw Error(ErrorCode::DuplicateId, "arrow '" + spec.id + "'");
        auto src = vertex_lookup_.find(spec.source);
        auto dst = vertex_lookup_.find(spec.target);
        if (src == vertex_lookup_.end())
            throw Error(ErrorCode::UnknownVertex,
                        "arrow '" + spec.id + "' has unknown source '" + spec.source + "'");
        if (dst == vertex_lookup_.end())
            throw Error(ErrorCode::UnknownVertex,
                        "arrow '" + spec.id + "' has unknown target '" + spec.target + "'");
        if (src->second == dst->second)
            throw Error(ErrorCode::OrientedCycle, "loop at arrow '" + spec.id + "'");
        arrows_.push_back(Arrow{spec.id, src->second, dst->second});
    }

    UnionFind uf(vertices_.size());
    for (const Arrow& a : arrows_) uf.unite(a.source, a.target);
    if (uf.components() != 1) {
        VertexIndex stray = 0;
        while (uf.find(stray) == uf.find(0)) ++stray;
        throw Error(ErrorCode::DisconnectedQuiver,
                    "vertex '" + vertices_[stray] + "' is not connected to '" + vertices_[0] + "'");
    }

    std::vector<int> indegree(vertices_.size(), 0);
    for (const Arrow& a : arrows_) ++indegree[a.target];
    std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
    for (VertexIndex v = 0; v < vertices_.size(); ++v)
        if (indegree[v] == 0) ready.push(v);
    while (!ready.empty()) {
        const VertexIndex v = ready.top();
        ready.pop();
        topo_.push_back(v);
        indegree[v] = -1;
        for (const Arrow& a : arrows_)
            if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
    }
    if (topo_.size() != vertices_.size())
        throw Error(ErrorCode::OrientedCycle,
                    "arrows " + describe_cycle(arrows_, indegree, vertices_.size()));
}

VertexIndex Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw Error(ErrorCode::UnknownVertex, "'" + id + "'");
    return it->second;
}

ArrowIndex Quiver::arrow_index(const std::string& id) const {
    auto it = arrow_lookup_.find(id);
    if (it == arrow_lookup_.end()) throw Error(ErrorCode::MalformedInput, "unknown arrow '" + id + "'");
    return it->second;
}

std::vector<std::string> Quiver::arrow_ids(const ArrowSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (ArrowIndex a : set) out.push_back(arrows_.at(a).id);
    return out;
}

std::vector<std::string> Quiver::vertex_ids(const VertexSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (VertexIndex v : set) out.push_back(vertices_.at(v));
    return out;
}

Weight::Weight(IntVector values) : values_(std::move(values)) {
    if (values_.sum() != 0)
        throw Error(ErrorCode::MalformedInput, "weight values do not sum to zero");
}

Weight Weight::zero(std::size_t num_vertices) {
    return Weight(IntVector::Zero(static_cast<Index>(num_vertices)));
}

Integer Weight::sum_over(const VertexSet& set) const {
    Integer s(0);
    for (VertexIndex v : set) s += values_(static_cast<Index>(v));
    return s;
}

IntMatrix incidence_matrix(const Quiver& quiver) {
    IntMatrix c = IntMatrix::Zero(static_cast<Index>(quiver.num_vertices()),
                                  static_cast<Index>(quiver.num_arrows()));
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a) {
        c(static_cast<Index>(quiver.arrow(a).source), static_cast<Index>(a)) = 1;
        c(static_cast<Index>(quiver.arrow(a).target), static_cast<Index>(a)) = -1;
    }
    return c;
}

Weight weight_of_flow(const Quiver& quiver, const IntVector& flow) {
    return Weight(flow_input(quiver, flow));
}

RatVector weight_of_flow(const Quiver& quiver, const RatVector& flow) {
    return flow_input(quiver, flow);
}

Weight canonical_weight(const Quiver& quiver) {
    return weight_of_flow(quiver, IntVector(IntVector::Ones(static_cast<Index>(quiver.num_arrows()))));
}

Weight vertex_pair_weight(const Quiver& quiver, VertexIndex p, VertexIndex q) {
    if (p >= quiver.num_vertices() || q >= quiver.num_vertices())
        throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    IntVector v = IntVector::Zero(static_cast<Index>(quiver.num_vertices()));
    v(static_cast<Index>(p)) += 1;
    v(static_cast<Index>(q)) -= 1;
    return Weight(std::move(v));
}

bool is_regular(const RatVector& flow) {
    for (Index i = 0; i < flow.size(); ++i)
        if (flow(i) < 0) return false;
    return true;
}

Walk::Walk(const Quiver& quiver, VertexIndex start, std::vector<Step> steps)
    : start_(start), end_(start), steps_(std::move(steps)) {
    if (start >= quiver.num_vertices()) throw Error(ErrorCode::UnknownVertex, "walk start out of range");
    std::vector<bool> used(quiver.num_arrows(), false);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const Step& s = steps_[i];
        if (s.arrow >= quiver.num_arrows())
            throw Error(ErrorCode::NotAWalk, "step " + std::to_string(i) + " names no arrow");
        if (used[s.arrow])
            throw Error(ErrorCode::NotAWalk, "arrow '" + quiver.arrow(s.arrow).id + "' repeats");
        used[s.arrow] = true;
        const Arrow& a = quiver.arrow(s.arrow);
        const VertexIndex tail = s.forward ? a.source : a.target;
        const VertexIndex head = s.forward ? a.target : a.source;
        if (tail != end_)
            throw Error(ErrorCode::NotAWalk,
                        "step " + std::to_string(i) + " along '" + a.id + "' does not start at '" +
                            quiver.vertex_id(end_) + "'");
        end_ = head;
    }
}

bool Walk::is_path() const noexcept {
    return std::all_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.forward; });
}

IntVector walk_flow(const Quiver& quiver, const Walk& walk) {
    IntVector f = IntVector::Zero(static_cast<Index>(quiver.num_arrows()));
    for (const Step& s : walk.steps()) f(static_cast<Index>(s.arrow)) = s.forward ? 1 : -1;
    return f;
}

namespace {

void extend_paths(const Quiver& quiver, VertexIndex at, VertexIndex target, VertexIndex start,
                  std::vector<Step>& trail, std::vector<Walk>& out) {
    if (at == target) {
        out.emplace_back(quiver, start, trail);
        return;
    }
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a) {
        if (quiver.arrow(a).source != at) continue;
        trail.push_back(Step{a, true});
        extend_paths(quiver, quiver.arrow(a).target, target, start, trail, out);
        trail.pop_back();
    }
}

}  // namespace

std::vector<Walk> enumerate_paths(const Quiver& quiver, VertexIndex p, VertexIndex q) {
    if (p >= quiver.num_vertices() || q >= quiver.num_vertices())
        throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    std::vector<Walk> out;
    std::vector<Step> trail;
    extend_paths(quiver, p, q, p, trail, out);
    return out;
}

std::vector<Walk> enumerate_paths(const Quiver& quiver, const std::string& p, const std::string& q) {
    return enumerate_paths(quiver, quiver.vertex_index(p), quiver.vertex_index(q));
}

MatrixX<long long> path_count_matrix(const Quiver& quiver) {
    const auto n = static_cast<Index>(quiver.num_vertices());
    MatrixX<long long> count = MatrixX<long long>::Zero(n, n);
    const auto& topo = quiver.topological_order();
    // paths into v are extensions of paths into its predecessors
    for (Index p = 0; p < n; ++p) {
        count(p, p) = 1;
        for (VertexIndex v : topo) {
            for (const Arrow& a : quiver.arrows())
                if (a.target == v) count(p, static_cast<Index>(v)) += count(p, static_cast<Index>(a.source));
        }
    }
    return count;
}

}  // namespace quiverfan

#include "quiverfan/stability.hpp"

#include <algorithm>
#include <cstdint>

namespace quiverfan {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxVertices = 24;

void check_size(const Quiver& quiver) {
    if (quiver.num_vertices() > kMaxVertices)
        throw Error(ErrorCode::InstanceTooLarge,
                    "subset scans are limited to " + std::to_string(kMaxVertices) + " vertices");
}

VertexSet mask_to_set(Mask mask, std::size_t n) {
    VertexSet out;
    for (std::size_t v = 0; v < n; ++v)
        if (mask & (Mask{1} << v)) out.push_back(v);
    return out;
}

bool induced_connected(const Quiver& quiver, Mask mask) {
    if (mask == 0) return false;
    const Mask start = mask & (~mask + 1);
    Mask seen = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Arrow& a : quiver.arrows()) {
            const Mask s = Mask{1} << a.source;
            const Mask t = Mask{1} << a.target;
            if (!(mask & s) || !(mask & t)) continue;
            if ((seen & s) && !(seen & t)) { seen |= t; grew = true; }
            if ((seen & t) && !(seen & s)) { seen |= s; grew = true; }
        }
    }
    return seen == mask;
}

}  // namespace

StabilityVerdict classify_subquiver(const Quiver& quiver, const ArrowSet& arrows,
                                    const Weight& theta) {
    check_size(quiver);
    const std::size_t n = quiver.num_vertices();
    std::vector<Mask> successors(n, 0);
    for (ArrowIndex a : arrows) {
        const Arrow& arr = quiver.arrow(a);
        successors[arr.source] |= Mask{1} << arr.target;
    }
    const Mask full = (Mask{1} << n) - 1;

    std::optional<Integer> best;
    std::vector<Mask> best_masks;
    for (Mask s = 1; s < full; ++s) {
        bool closed = true;
        Integer sum(0);
        for (std::size_t v = 0; v < n && closed; ++v) {
            if (!(s & (Mask{1} << v))) continue;
            if ((successors[v] & s) != successors[v]) closed = false;
            sum += theta[static_cast<Index>(v)];
        }
        if (!closed) continue;
        if (!best || sum > *best) {
            best = sum;
            best_masks.assign(1, s);
        } else if (sum == *best) {
            best_masks.push_back(s);
        }
    }

    StabilityVerdict out{Verdict::stable, std::nullopt, best};
    if (!best || *best < 0) return out;
    out.verdict = *best == 0 ? Verdict::semistable : Verdict::unstable;
    std::vector<VertexSet> candidates;
    for (Mask m : best_masks) candidates.push_back(mask_to_set(m, n));
    out.witness = *std::min_element(candidates.begin(), candidates.end());
    return out;
}

bool is_spanning_tree(const Quiver& quiver, const ArrowSet& arrows) {
    if (arrows.size() + 1 != quiver.num_vertices()) return false;
    UnionFind uf(quiver.num_vertices());
    for (ArrowIndex a : arrows) {
        if (a >= quiver.num_arrows()) return false;
        if (!uf.unite(quiver.arrow(a).source, quiver.arrow(a).target)) return false;
    }
    return true;
}

namespace {

void choose_trees(const Quiver& quiver, std::size_t next, ArrowSet& chosen,
                  std::vector<ArrowSet>& out) {
    const std::size_t need = quiver.num_vertices() - 1;
    if (chosen.size() == need) {
        if (is_spanning_tree(quiver, chosen)) out.push_back(chosen);
        return;
    }
    for (std::size_t a = next; a + (need - chosen.size()) <= quiver.num_arrows(); ++a) {
        chosen.push_back(a);
        // prune as soon as the partial choice closes a cycle
        UnionFind uf(quiver.num_vertices());
        bool forest = true;
        for (ArrowIndex b : chosen) forest = forest && uf.unite(quiver.arrow(b).source, quiver.arrow(b).target);
        if (forest) choose_trees(quiver, a + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<ArrowSet> spanning_trees(const Quiver& quiver) {
    std::vector<ArrowSet> out;
    ArrowSet chosen;
    choose_trees(quiver, 0, chosen, out);
    return out;
}

std::vector<ArrowSet> stable_trees(const Quiver& quiver, const Weight& theta) {
    std::vector<ArrowSet> out;
    for (ArrowSet& tree : spanning_trees(quiver))
        if (classify_subquiver(quiver, tree, theta).verdict == Verdict::stable)
            out.push_back(std::move(tree));
    return out;
}

ArrowSet all_arrows(const Quiver& quiver) {
    ArrowSet out(quiver.num_arrows());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = a;
    return out;
}

ArrowSet stable_arrow_set(const Quiver& quiver, const Weight& theta) {
    ArrowSet out;
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a) {
        ArrowSet rest;
        for (ArrowIndex b = 0; b < quiver.num_arrows(); ++b)
            if (b != a) rest.push_back(b);
        if (classify_subquiver(quiver, rest, theta).verdict == Verdict::stable) out.push_back(a);
    }
    return out;
}

std::vector<Wall> enumerate_walls(const Quiver& quiver) {
    check_size(quiver);
    const std::size_t n = quiver.num_vertices();
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Wall> out;
    // canonical orientation: the plus side holds vertex 0
    for (Mask plus = 1; plus < full; plus += 2) {
        const Mask minus = full & ~plus;
        if (!induced_connected(quiver, plus) || !induced_connected(quiver, minus)) continue;
        Wall w;
        w.plus = mask_to_set(plus, n);
        w.minus = mask_to_set(minus, n);
        for (const Arrow& a : quiver.arrows()) {
            const bool s_plus = plus & (Mask{1} << a.source);
            const bool t_plus = plus & (Mask{1} << a.target);
            if (s_plus && !t_plus) ++w.t_plus;
            if (!s_plus && t_plus) ++w.t_minus;
        }
        out.push_back(std::move(w));
    }
    return out;
}

PositionReport weight_position(const Quiver& quiver, const Weight& theta) {
    PositionReport report;
    const std::vector<Wall> walls = enumerate_walls(quiver);
    for (const Wall& w : walls)
        if (w.contains(theta)) report.walls_hit.push_back(w);
    report.moduli_nonempty = !stable_trees(quiver, theta).empty();
    report.general_position = report.walls_hit.empty() && report.moduli_nonempty;

    if (theta == canonical_weight(quiver)) {
        CanonicalDiagnostics diag;
        for (const Wall& w : walls) {
            if (w.t_plus == w.t_minus) diag.has_balanced_wall = true;
            const int lo = std::min(w.t_plus, w.t_minus);
            const int hi = std::max(w.t_plus, w.t_minus);
            if (hi == 1 && (lo == 0 || lo == 1)) diag.has_thin_wall = true;
        }
        diag.predicted_general_position = !diag.has_balanced_wall;
        diag.predicted_full_arrow_set = !diag.has_thin_wall;
        diag.general_position = report.general_position;
        diag.full_arrow_set = stable_arrow_set(quiver, theta).size() == quiver.num_arrows();
        diag.consistent = diag.predicted_general_position == diag.general_position &&
                          diag.predicted_full_arrow_set == diag.full_arrow_set;
        report.canonical = diag;
    }
    return report;
}

void require_general_position(const Quiver& quiver, const Weight& theta) {
    for (const Wall& w : enumerate_walls(quiver)) {
        if (!w.contains(theta)) continue;
        std::string part;
        for (const std::string& id : quiver.vertex_ids(w.plus)) part += (part.empty() ? "" : ",") + id;
        throw Error(ErrorCode::NotGeneralPosition,
                    "weight lies on the (" + std::to_string(w.t_plus) + "," +
                        std::to_string(w.t_minus) + ")-wall with plus part {" + part + "}");
    }
    if (stable_trees(quiver, theta).empty())
        throw Error(ErrorCode::NotGeneralPosition, "no stable spanning tree: moduli space is empty");
}

}  // namespace quiverfan

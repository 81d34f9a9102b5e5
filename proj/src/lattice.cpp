#include "quiverfan/lattice.hpp"

#include "quiverfan/linalg.hpp"
#include "quiverfan/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace quiverfan {

namespace {

constexpr double kMaxBoxPoints = 1e7;

// First spanning tree in lexicographic arrow order (greedy union-find).
ArrowSet first_spanning_tree(const Quiver& quiver) {
    ArrowSet tree;
    UnionFind uf(quiver.num_vertices());
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a)
        if (uf.unite(quiver.arrow(a).source, quiver.arrow(a).target)) tree.push_back(a);
    return tree;
}

bool lex_less(const RatVector& a, const RatVector& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return false;
}

}  // namespace

IntVector CirculationBasis::coordinates_of(const IntVector& circulation) const {
    IntVector x(rank());
    for (Index j = 0; j < rank(); ++j) x(j) = circulation(static_cast<Index>(cycle_arrows[static_cast<std::size_t>(j)]));
    return x;
}

VertexSet source_side(const Quiver& quiver, const ArrowSet& tree, ArrowIndex alpha) {
    std::vector<bool> reached(quiver.num_vertices(), false);
    std::vector<VertexIndex> stack{quiver.arrow(alpha).source};
    reached[quiver.arrow(alpha).source] = true;
    while (!stack.empty()) {
        const VertexIndex v = stack.back();
        stack.pop_back();
        for (ArrowIndex b : tree) {
            if (b == alpha) continue;
            const Arrow& arr = quiver.arrow(b);
            VertexIndex other;
            if (arr.source == v) other = arr.target;
            else if (arr.target == v) other = arr.source;
            else continue;
            if (!reached[other]) {
                reached[other] = true;
                stack.push_back(other);
            }
        }
    }
    VertexSet out;
    for (VertexIndex v = 0; v < reached.size(); ++v)
        if (reached[v]) out.push_back(v);
    return out;
}

IntVector tree_completion(const Quiver& quiver, const ArrowSet& tree, const Weight& theta,
                          const IntVector& eps) {
    return tree_completion<Integer>(quiver, tree, theta.values(), eps);
}

CirculationBasis circulation_basis(const Quiver& quiver) {
    CirculationBasis basis;
    basis.reference_tree = first_spanning_tree(quiver);
    for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a)
        if (!std::binary_search(basis.reference_tree.begin(), basis.reference_tree.end(), a))
            basis.cycle_arrows.push_back(a);

    const auto d = static_cast<Index>(basis.cycle_arrows.size());
    const auto m = static_cast<Index>(quiver.num_arrows());
    basis.vectors = IntMatrix::Zero(m, d);
    const IntVector zero_weight = IntVector::Zero(static_cast<Index>(quiver.num_vertices()));
    for (Index j = 0; j < d; ++j) {
        IntVector eps = IntVector::Zero(m);
        eps(static_cast<Index>(basis.cycle_arrows[static_cast<std::size_t>(j)])) = 1;
        basis.vectors.col(j) = tree_completion<Integer>(quiver, basis.reference_tree, zero_weight, eps);
    }

    // lattice basis check: the rows on the cycle arrows form a unimodular block
    IntMatrix block(d, d);
    for (Index j = 0; j < d; ++j)
        block.row(j) = basis.vectors.row(static_cast<Index>(basis.cycle_arrows[static_cast<std::size_t>(j)]));
    const Integer det = determinant_of(block);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::InternalInconsistency, "circulation basis is not unimodular");
    return basis;
}

FlowPolytope::FlowPolytope(const Quiver& quiver, Weight weight, std::vector<FlowBound> bounds)
    : quiver_(quiver), weight_(std::move(weight)), bounds_(std::move(bounds)), basis_(circulation_basis(quiver)) {
    if (static_cast<std::size_t>(weight_.size()) != quiver.num_vertices())
        throw Error(ErrorCode::MalformedInput, "weight has the wrong number of entries");
    base_ = tree_completion(quiver, basis_.reference_tree, weight_,
                            IntVector(IntVector::Zero(static_cast<Index>(quiver.num_arrows()))));

    const Index d = basis_.rank();
    const auto rows = static_cast<Index>(bounds_.size());
    normals_.resize(rows, d);
    rhs_.resize(rows);
    for (Index i = 0; i < rows; ++i) {
        const FlowBound& b = bounds_[static_cast<std::size_t>(i)];
        if (b.arrow >= quiver.num_arrows()) throw Error(ErrorCode::MalformedInput, "bound on unknown arrow");
        const auto a = static_cast<Index>(b.arrow);
        if (b.upper) {
            normals_.row(i) = -basis_.vectors.row(a);
            rhs_(i) = base_(a) - b.value;
        } else {
            normals_.row(i) = basis_.vectors.row(a);
            rhs_(i) = b.value - base_(a);
        }
    }

    const RatMatrix a = normals_.cast<Rational>();
    const RatVector r = rhs_.cast<Rational>();
    empty_ = !lp::is_feasible(a, r);
    if (empty_) {
        bounded_ = true;
        return;
    }
    bounded_ = true;
    for (Index j = 0; j < d && bounded_; ++j) {
        RatVector e = RatVector::Zero(d);
        e(j) = 1;
        const lp::Result lo = lp::minimize(e, a, r);
        const lp::Result hi = lp::maximize(e, a, r);
        if (lo.status != lp::Status::optimal || hi.status != lp::Status::optimal) {
            bounded_ = false;
            box_.clear();
            break;
        }
        box_.emplace_back(ceil_of(lo.value), floor_of(hi.value));
    }
}

ArrowSet FlowPolytope::constrained_arrows() const {
    std::set<ArrowIndex> arrows;
    for (const FlowBound& b : bounds_) arrows.insert(b.arrow);
    return {arrows.begin(), arrows.end()};
}

IntVector FlowPolytope::to_flow(const IntVector& coords) const {
    return base_ + basis_.vectors * coords;
}

RatVector FlowPolytope::to_flow(const RatVector& coords) const {
    return base_.cast<Rational>() + basis_.vectors.cast<Rational>() * coords;
}

bool FlowPolytope::contains_coords(const IntVector& coords, bool strictly) const {
    for (Index i = 0; i < normals_.rows(); ++i) {
        const Integer lhs = normals_.row(i).dot(coords);
        if (strictly ? lhs <= rhs_(i) : lhs < rhs_(i)) return false;
    }
    return true;
}

bool FlowPolytope::contains_flow(const IntVector& flow) const {
    if (flow_input(quiver_, flow) != weight_.values()) return false;
    for (const FlowBound& b : bounds_) {
        const Integer& v = flow(static_cast<Index>(b.arrow));
        if (b.upper ? v > b.value : v < b.value) return false;
    }
    return true;
}

FlowPolytope flow_polytope(const Quiver& quiver, const Weight& theta, const ArrowSet& constrained,
                           const std::vector<Integer>& lower) {
    if (!lower.empty() && lower.size() != constrained.size())
        throw Error(ErrorCode::MalformedInput, "one lower bound per constrained arrow");
    std::vector<FlowBound> bounds;
    for (std::size_t i = 0; i < constrained.size(); ++i)
        bounds.push_back(FlowBound{constrained[i], lower.empty() ? Integer(0) : lower[i], false});
    FlowPolytope p(quiver, theta, std::move(bounds));
    if (constrained.size() == quiver.num_arrows() && !p.is_bounded())
        throw Error(ErrorCode::InternalInconsistency, "regular flows of an acyclic quiver are unbounded");
    return p;
}

FlowPolytope regular_flow_polytope(const Quiver& quiver, const Weight& theta) {
    return flow_polytope(quiver, theta, all_arrows(quiver));
}

FlowPolytope section_polytope(const Quiver& quiver, const Weight& theta, const ArrowSet& stable_arrows) {
    return flow_polytope(quiver, theta, stable_arrows);
}

namespace {

void require_scannable(const FlowPolytope& polytope) {
    if (!polytope.is_bounded())
        throw Error(ErrorCode::UnboundedPolytope, "lattice points of an unbounded polytope");
    double size = 1;
    for (const auto& [lo, hi] : polytope.box()) size *= std::max(0.0, (hi - lo + 1).convert_to<double>());
    if (size > kMaxBoxPoints)
        throw Error(ErrorCode::InstanceTooLarge, "bounding box holds more than 10^7 candidates");
}

// Odometer over the bounding box.
template <typename Visit>
void scan_box(const FlowPolytope& polytope, Visit&& visit) {
    if (polytope.is_empty()) return;
    const auto& box = polytope.box();
    const Index d = polytope.ambient_dimension();
    for (const auto& [lo, hi] : box)
        if (lo > hi) return;
    IntVector x(d);
    for (Index j = 0; j < d; ++j) x(j) = box[static_cast<std::size_t>(j)].first;
    for (;;) {
        if (polytope.contains_coords(x)) visit(x);
        Index j = d - 1;
        while (j >= 0 && x(j) == box[static_cast<std::size_t>(j)].second) {
            x(j) = box[static_cast<std::size_t>(j)].first;
            --j;
        }
        if (j < 0) return;
        x(j) += 1;
    }
}

}  // namespace

LatticePointSet lattice_points(const FlowPolytope& polytope) {
    require_scannable(polytope);
    LatticePointSet out;
    scan_box(polytope, [&](const IntVector& x) {
        out.points.push_back(polytope.to_flow(x));
        if (polytope.contains_coords(x, true)) out.interior.push_back(out.points.back());
    });
    return out;
}

std::size_t count_lattice_points(const FlowPolytope& polytope) {
    require_scannable(polytope);
    std::size_t count = 0;
    scan_box(polytope, [&](const IntVector&) { ++count; });
    return count;
}

std::vector<RatVector> enumerate_vertices(const FlowPolytope& polytope) {
    if (!polytope.is_bounded())
        throw Error(ErrorCode::UnboundedPolytope, "vertices of an unbounded polytope");
    std::vector<RatVector> out;
    if (polytope.is_empty()) return out;
    const Index d = polytope.ambient_dimension();
    const Index m = polytope.normals().rows();
    const RatMatrix a = polytope.normals().cast<Rational>();
    const RatVector b = polytope.rhs().cast<Rational>();

    auto feasible = [&](const RatVector& x) {
        for (Index i = 0; i < m; ++i)
            if (a.row(i).dot(x) < b(i)) return false;
        return true;
    };
    if (d == 0) {
        out.push_back(polytope.to_flow(RatVector(RatVector::Zero(0))));
        return out;
    }

    std::vector<Index> pick(static_cast<std::size_t>(d));
    std::vector<RatVector> coords;
    // all d-subsets of the m inequalities
    std::function<void(Index, Index)> choose = [&](Index start, Index depth) {
        if (depth == d) {
            RatMatrix sys(d, d);
            RatVector rhs(d);
            for (Index k = 0; k < d; ++k) {
                sys.row(k) = a.row(pick[static_cast<std::size_t>(k)]);
                rhs(k) = b(pick[static_cast<std::size_t>(k)]);
            }
            if (auto x = solve_square(sys, rhs); x && feasible(*x)) coords.push_back(*x);
            return;
        }
        for (Index i = start; i + (d - depth) <= m; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    for (const RatVector& x : coords) out.push_back(polytope.to_flow(x));
    std::sort(out.begin(), out.end(), [](const RatVector& l, const RatVector& r) { return lex_less(l, r); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Index affine_dimension(const FlowPolytope& polytope) {
    if (polytope.is_empty()) return -1;
    const Index d = polytope.ambient_dimension();
    const RatMatrix a = polytope.normals().cast<Rational>();
    const RatVector b = polytope.rhs().cast<Rational>();
    // rows that hold with equality on the whole polytope cut the dimension
    std::vector<Index> implicit;
    for (Index i = 0; i < a.rows(); ++i) {
        const lp::Result r = lp::maximize(RatVector(a.row(i).transpose()), a, b);
        if (r.status == lp::Status::optimal && r.value == b(i)) implicit.push_back(i);
    }
    if (implicit.empty()) return d;
    RatMatrix eq(static_cast<Index>(implicit.size()), d);
    for (std::size_t k = 0; k < implicit.size(); ++k) eq.row(static_cast<Index>(k)) = a.row(implicit[k]);
    return d - rank_of(eq);
}

std::vector<std::pair<ArrowSet, IntVector>> polytope_vertices(const Quiver& quiver, const Weight& theta) {
    require_general_position(quiver, theta);
    const IntVector zero = IntVector::Zero(static_cast<Index>(quiver.num_arrows()));
    std::vector<std::pair<ArrowSet, IntVector>> out;
    for (ArrowSet& tree : stable_trees(quiver, theta)) {
        IntVector v = tree_completion(quiver, tree, theta, zero);
        out.emplace_back(std::move(tree), std::move(v));
    }
    return out;
}

ReflexivityReport reflexivity_report(const Quiver& quiver) {
    const Weight canonical = canonical_weight(quiver);
    require_general_position(quiver, canonical);
    const FlowPolytope delta = regular_flow_polytope(quiver, canonical);
    const LatticePointSet pts = lattice_points(delta);

    ReflexivityReport report;
    report.lattice_points = pts.count();
    report.interior_points = pts.interior.size();
    report.interior_is_all_ones =
        pts.interior.size() == 1 && pts.interior.front() == IntVector::Ones(static_cast<Index>(quiver.num_arrows()));

    // Centred at the all-ones flow every inequality reads <a^alpha, y> >= -1,
    // a^alpha being the row of the circulation basis at alpha.
    const CirculationBasis& basis = delta.basis();
    const Index d = basis.rank();
    const RatMatrix a = basis.vectors.cast<Rational>();
    const RatVector b = RatVector::Constant(a.rows(), Rational(-1));
    std::vector<IntVector> seen;
    report.facets_at_distance_one = true;
    for (ArrowIndex alpha = 0; alpha < quiver.num_arrows(); ++alpha) {
        const IntVector normal = basis.vectors.row(static_cast<Index>(alpha)).transpose();
        if (normal.isZero()) continue;
        if (std::find(seen.begin(), seen.end(), normal) != seen.end()) continue;
        seen.push_back(normal);
        // irredundant iff dropping every copy of the row lets the polytope cross it
        std::vector<Index> keep;
        for (Index i = 0; i < a.rows(); ++i)
            if (basis.vectors.row(i).transpose() != normal) keep.push_back(i);
        RatMatrix sub(static_cast<Index>(keep.size()), d);
        RatVector rhs(static_cast<Index>(keep.size()));
        for (std::size_t k = 0; k < keep.size(); ++k) {
            sub.row(static_cast<Index>(k)) = a.row(keep[k]);
            rhs(static_cast<Index>(k)) = b(keep[k]);
        }
        const lp::Result r = lp::minimize(normal.cast<Rational>(), sub, rhs);
        const bool facet = r.status == lp::Status::unbounded || (r.status == lp::Status::optimal && r.value < -1);
        if (!facet) continue;
        report.facet_arrows.push_back(alpha);
        if (gcd_of(normal) != 1) report.facets_at_distance_one = false;
    }
    report.reflexive = report.interior_is_all_ones && report.facets_at_distance_one;
    return report;
}

}  // namespace quiverfan

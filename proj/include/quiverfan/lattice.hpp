#ifndef QUIVERFAN_LATTICE_HPP
#define QUIVERFAN_LATTICE_HPP

#include "quiverfan/quiver.hpp"
#include "quiverfan/stability.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace quiverfan {

/// Lattice basis of the integral circulations M = M^0: one fundamental cycle
/// per arrow outside the reference spanning tree.
struct CirculationBasis {
    ArrowSet reference_tree;
    std::vector<ArrowIndex> cycle_arrows;  // one per basis vector, increasing
    IntMatrix vectors;                     // #Q_1 x d, column j is m^(j)

    Index rank() const noexcept { return vectors.cols(); }

    /// Coordinates of an integral circulation: its values on cycle_arrows.
    IntVector coordinates_of(const IntVector& circulation) const;
};

CirculationBasis circulation_basis(const Quiver& quiver);

/// Vertices on the source side of `alpha` once it is cut out of the tree.
VertexSet source_side(const Quiver& quiver, const ArrowSet& tree, ArrowIndex alpha);

/// The unique r with input theta that agrees with eps off the tree:
///   r_a = eps_a + sum_{S} theta + sum_{T->S} eps - sum_{S->T} eps  for a in the tree,
/// S and T being the source and target sides of a.
template <typename Scalar>
VectorX<Scalar> tree_completion(const Quiver& quiver, const ArrowSet& tree,
                                const VectorX<Scalar>& theta, const VectorX<Scalar>& eps) {
    if (!is_spanning_tree(quiver, tree))
        throw Error(ErrorCode::NotASpanningTree, "arrow set is not a spanning tree");
    VectorX<Scalar> r = eps;
    std::vector<bool> on_source(quiver.num_vertices());
    for (ArrowIndex alpha : tree) {
        std::fill(on_source.begin(), on_source.end(), false);
        Scalar value = eps(static_cast<Index>(alpha));
        for (VertexIndex v : source_side(quiver, tree, alpha)) {
            on_source[v] = true;
            value += theta(static_cast<Index>(v));
        }
        for (ArrowIndex b = 0; b < quiver.num_arrows(); ++b) {
            const bool s = on_source[quiver.arrow(b).source];
            const bool t = on_source[quiver.arrow(b).target];
            if (!s && t) value += eps(static_cast<Index>(b));
            if (s && !t) value -= eps(static_cast<Index>(b));
        }
        r(static_cast<Index>(alpha)) = value;
    }
    return r;
}

IntVector tree_completion(const Quiver& quiver, const ArrowSet& tree, const Weight& theta,
                          const IntVector& eps);

/// r_arrow >= value, or r_arrow <= value when `upper`.
struct FlowBound {
    ArrowIndex arrow;
    Integer value;
    bool upper = false;
};

/// H-polytope inside the affine fiber of flows with a fixed input, stored in
/// circulation coordinates x: flow = base_point + basis * x, constraints
/// normals * x >= rhs. Emptiness and boundedness are decided exactly on
/// construction.
class FlowPolytope {
public:
    FlowPolytope(const Quiver& quiver, Weight weight, std::vector<FlowBound> bounds);

    const Weight& weight() const noexcept { return weight_; }
    const std::vector<FlowBound>& bounds() const noexcept { return bounds_; }
    const CirculationBasis& basis() const noexcept { return basis_; }
    const IntVector& base_point() const noexcept { return base_; }
    const IntMatrix& normals() const noexcept { return normals_; }
    const IntVector& rhs() const noexcept { return rhs_; }
    Index ambient_dimension() const noexcept { return basis_.rank(); }

    bool is_empty() const noexcept { return empty_; }
    bool is_bounded() const noexcept { return bounded_; }

    /// Integral bounding box in circulation coordinates (bounded, non-empty only).
    const std::vector<std::pair<Integer, Integer>>& box() const noexcept { return box_; }

    ArrowSet constrained_arrows() const;

    IntVector to_flow(const IntVector& coords) const;
    RatVector to_flow(const RatVector& coords) const;

    bool contains_coords(const IntVector& coords, bool strictly = false) const;
    /// Flow membership: correct input and every bound satisfied.
    bool contains_flow(const IntVector& flow) const;

private:
    Quiver quiver_;
    Weight weight_;
    std::vector<FlowBound> bounds_;
    CirculationBasis basis_;
    IntVector base_;
    IntMatrix normals_;
    IntVector rhs_;
    bool empty_ = true;
    bool bounded_ = false;
    std::vector<std::pair<Integer, Integer>> box_;
};

/// r_a >= c_a for a in `constrained` (c defaults to 0). All arrows gives Delta(theta).
FlowPolytope flow_polytope(const Quiver& quiver, const Weight& theta, const ArrowSet& constrained,
                           const std::vector<Integer>& lower = {});

/// Delta(theta) itself.
FlowPolytope regular_flow_polytope(const Quiver& quiver, const Weight& theta);

/// Sections polytope: non-negativity only on Q_1(fan_weight).
FlowPolytope section_polytope(const Quiver& quiver, const Weight& theta, const ArrowSet& stable_arrows);

struct LatticePointSet {
    std::vector<IntVector> points;    // full flows, lexicographic in coordinates
    std::vector<IntVector> interior;  // satisfy every inequality strictly

    std::size_t count() const noexcept { return points.size(); }
};

/// Bounding-box scan; refuses boxes with more than 10^7 candidates.
LatticePointSet lattice_points(const FlowPolytope& polytope);

/// Lattice-point count only (no materialised list).
std::size_t count_lattice_points(const FlowPolytope& polytope);

/// Generic vertex enumeration over d-subsets of the inequalities (full flows,
/// sorted). Needs a bounded polytope.
std::vector<RatVector> enumerate_vertices(const FlowPolytope& polytope);

/// Dimension of the affine hull; -1 when empty.
Index affine_dimension(const FlowPolytope& polytope);

/// Vertex of Delta(theta) at each theta-stable tree (tree completion of the
/// zero flow). theta must be in general position.
std::vector<std::pair<ArrowSet, IntVector>> polytope_vertices(const Quiver& quiver, const Weight& theta);

struct ReflexivityReport {
    std::size_t lattice_points = 0;
    std::size_t interior_points = 0;
    bool interior_is_all_ones = false;
    ArrowSet facet_arrows;         // one arrow per distinct facet
    bool facets_at_distance_one = false;
    bool reflexive = false;
};

/// Reflexivity of Delta(canonical weight); the canonical weight must be in
/// general position.
ReflexivityReport reflexivity_report(const Quiver& quiver);

}  // namespace quiverfan

#endif  // QUIVERFAN_LATTICE_HPP

#ifndef QUIVERFAN_STABILITY_HPP
#define QUIVERFAN_STABILITY_HPP

#include "quiverfan/quiver.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace quiverfan {

enum class Verdict { stable, semistable, unstable };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable: return "semistable";
        case Verdict::unstable: return "unstable";
    }
    return "unknown";
}

struct StabilityVerdict {
    Verdict verdict;
    /// Successor-closed set with maximal weight sum; absent when stable.
    std::optional<VertexSet> witness;
    /// Maximal weight sum over proper non-trivial successor-closed sets.
    /// Unset for the one-vertex quiver, which has no such set.
    std::optional<Integer> max_sum;
};

/// Stability of the subquiver with all vertices and the given arrows.
///
/// Every proper non-trivial vertex subset closed under successors along
/// `arrows` is scanned, so the cost is 2^#Q_0; quivers with more than 24
/// vertices are refused with InstanceTooLarge.
StabilityVerdict classify_subquiver(const Quiver& quiver, const ArrowSet& arrows,
                                    const Weight& theta);

/// All spanning trees, as arrow sets, in lexicographic order.
std::vector<ArrowSet> spanning_trees(const Quiver& quiver);

bool is_spanning_tree(const Quiver& quiver, const ArrowSet& arrows);

/// Spanning trees T with classify_subquiver(T, theta) == stable.
std::vector<ArrowSet> stable_trees(const Quiver& quiver, const Weight& theta);

/// Q_1(theta): arrows whose removal leaves a theta-stable subquiver.
ArrowSet stable_arrow_set(const Quiver& quiver, const Weight& theta);

ArrowSet all_arrows(const Quiver& quiver);

struct Wall {
    VertexSet plus;   // contains the first vertex
    VertexSet minus;
    int t_plus = 0;   // arrows plus -> minus
    int t_minus = 0;  // arrows minus -> plus

    bool contains(const Weight& theta) const { return theta.sum_over(plus) == 0; }
};

std::vector<Wall> enumerate_walls(const Quiver& quiver);

/// Consistency of the canonical-weight wall criteria with direct computation.
struct CanonicalDiagnostics {
    bool has_balanced_wall = false;        // some (t,t)-wall
    bool has_thin_wall = false;            // some (1,0)- or (1,1)-wall, either orientation
    bool predicted_general_position = false;
    bool predicted_full_arrow_set = false;
    bool general_position = false;
    bool full_arrow_set = false;
    bool consistent = false;
};

struct PositionReport {
    bool general_position = false;
    bool moduli_nonempty = false;
    std::vector<Wall> walls_hit;
    std::optional<CanonicalDiagnostics> canonical;
};

PositionReport weight_position(const Quiver& quiver, const Weight& theta);

/// Throws NotGeneralPosition naming the first wall hit (or empty moduli).
void require_general_position(const Quiver& quiver, const Weight& theta);

}  // namespace quiverfan

#endif  // QUIVERFAN_STABILITY_HPP

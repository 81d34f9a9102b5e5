#ifndef QUIVERFAN_FAN_HPP
#define QUIVERFAN_FAN_HPP

#include "quiverfan/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quiverfan {

/// Simplicial fan in N = Z^d, d the moduli dimension. Ray k is the image
/// a^alpha of the unit flow on ray_arrows[k]; its coordinates are the values
/// of the circulation basis vectors on that arrow, so <a^alpha, m> = m_alpha.
struct Fan {
    Index dimension = 0;
    CirculationBasis basis;
    std::vector<ArrowIndex> ray_arrows;
    IntMatrix rays;                            // d x #rays
    std::vector<std::vector<Index>> cones;     // sorted ray indices per maximal cone
    std::vector<ArrowSet> trees;               // stable tree behind each maximal cone

    Index num_rays() const noexcept { return rays.cols(); }
    IntVector ray(Index k) const { return rays.col(k); }
    /// Ray index of an arrow, or -1 when the arrow spans no ray.
    Index ray_of_arrow(ArrowIndex alpha) const;
};

/// Maximal cones are spanned by the arrows outside each stable tree. Requires
/// general position and Q_1(theta) = Q_1; otherwise NotGeneralPosition or
/// StableArrowSetNotFull (use the quotient quiver).
Fan build_fan(const Quiver& quiver, const Weight& theta);

struct FanChecks {
    bool smooth = false;
    bool complete = false;
    bool pairwise_intersections_ok = false;
    std::vector<std::string> issues;
};

/// smooth: every maximal cone is unimodular. complete: pure of dimension d and
/// every facet of a maximal cone lies in exactly two maximal cones.
/// pairwise_intersections_ok: any two maximal cones meet in the cone on their
/// common rays (decided by exact LP).
FanChecks fan_checks(const Fan& fan);

/// Throws FanNotSmooth / FanNotComplete on failure.
void require_smooth_complete(const Fan& fan);

/// Indices of maximal cones containing `direction`; `on_boundary` is set when
/// the direction lies on a proper face of one of them.
std::vector<std::size_t> cones_containing(const Fan& fan, const RatVector& direction, bool& on_boundary);

/// Draws `samples` random integral directions (boundary hits are redrawn) and
/// counts those not lying in exactly one maximal cone.
std::size_t coverage_failures(const Fan& fan, int samples, std::uint64_t seed);

}  // namespace quiverfan

#endif  // QUIVERFAN_FAN_HPP

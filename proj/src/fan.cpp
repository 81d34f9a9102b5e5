#include "quiverfan/fan.hpp"

#include "quiverfan/linalg.hpp"
#include "quiverfan/lp.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace quiverfan {

Index Fan::ray_of_arrow(ArrowIndex alpha) const {
    auto it = std::find(ray_arrows.begin(), ray_arrows.end(), alpha);
    return it == ray_arrows.end() ? -1 : static_cast<Index>(it - ray_arrows.begin());
}

Fan build_fan(const Quiver& quiver, const Weight& theta) {
    require_general_position(quiver, theta);
    const ArrowSet stable = stable_arrow_set(quiver, theta);
    if (stable.size() != quiver.num_arrows()) {
        std::string missing;
        for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a)
            if (!std::binary_search(stable.begin(), stable.end(), a))
                missing += (missing.empty() ? "" : ",") + quiver.arrow(a).id;
        throw Error(ErrorCode::StableArrowSetNotFull,
                    "arrows {" + missing + "} span no ray; pass the quotient quiver instead");
    }

    Fan fan;
    fan.basis = circulation_basis(quiver);
    fan.dimension = fan.basis.rank();
    fan.ray_arrows = stable;
    fan.rays = fan.basis.vectors.transpose();
    for (ArrowSet& tree : stable_trees(quiver, theta)) {
        std::vector<Index> cone;
        for (ArrowIndex a = 0; a < quiver.num_arrows(); ++a)
            if (!std::binary_search(tree.begin(), tree.end(), a)) cone.push_back(fan.ray_of_arrow(a));
        fan.cones.push_back(std::move(cone));
        fan.trees.push_back(std::move(tree));
    }
    return fan;
}

namespace {

RatMatrix cone_matrix(const Fan& fan, const std::vector<Index>& cone) {
    RatMatrix m(fan.dimension, static_cast<Index>(cone.size()));
    for (std::size_t k = 0; k < cone.size(); ++k)
        m.col(static_cast<Index>(k)) = fan.rays.col(cone[k]).cast<Rational>();
    return m;
}

// Is the intersection of the two full-dimensional simplicial cones exactly the
// cone on their common rays? inv_a/inv_b map a direction to its coordinates
// in the ray bases.
bool meet_in_common_face(const std::vector<Index>& cone_a, const RatMatrix& inv_a,
                         const std::vector<Index>& cone_b, const RatMatrix& inv_b) {
    const Index d = inv_a.rows();
    // y with inv_a y >= 0 and inv_b y >= 0, plus a cap row added per query
    RatMatrix base(2 * d + 1, d);
    base << inv_a, inv_b, RatMatrix::Zero(1, d);
    RatVector rhs = RatVector::Zero(2 * d + 1);
    rhs(2 * d) = -1;

    auto all_zero_outside = [&](const std::vector<Index>& cone, const std::vector<Index>& other,
                                const RatMatrix& inv) {
        for (std::size_t k = 0; k < cone.size(); ++k) {
            if (std::binary_search(other.begin(), other.end(), cone[k])) continue;
            RatMatrix a = base;
            a.row(2 * d) = -inv.row(static_cast<Index>(k));  // coefficient <= 1
            const lp::Result r = lp::maximize(RatVector(inv.row(static_cast<Index>(k)).transpose()), a, rhs);
            if (r.status != lp::Status::optimal || r.value > 0) return false;
        }
        return true;
    };
    return all_zero_outside(cone_a, cone_b, inv_a) && all_zero_outside(cone_b, cone_a, inv_b);
}

}  // namespace

FanChecks fan_checks(const Fan& fan) {
    FanChecks out;
    const Index d = fan.dimension;
    out.smooth = true;
    bool pure = true;
    std::vector<std::optional<RatMatrix>> inverses;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const auto& cone = fan.cones[c];
        if (static_cast<Index>(cone.size()) != d) {
            pure = false;
            out.smooth = false;
            out.issues.push_back("cone " + std::to_string(c) + " has " + std::to_string(cone.size()) + " rays");
            inverses.emplace_back();
            continue;
        }
        IntMatrix m(d, d);
        for (Index k = 0; k < d; ++k) m.col(k) = fan.rays.col(cone[static_cast<std::size_t>(k)]);
        const Integer det = determinant_of(m);
        if (det == 0) pure = false;
        if (det != 1 && det != -1) {
            out.smooth = false;
            out.issues.push_back("cone " + std::to_string(c) + " has determinant " + det.str());
        }
        inverses.push_back(inverse_of(cone_matrix(fan, cone)));
    }

    if (d == 0) {
        out.complete = fan.cones.size() == 1;
        if (!out.complete) out.issues.push_back("a zero-dimensional fan needs exactly one cone");
    } else {
        std::map<std::vector<Index>, int> facet_uses;
        for (const auto& cone : fan.cones) {
            for (std::size_t drop = 0; drop < cone.size(); ++drop) {
                std::vector<Index> facet;
                for (std::size_t k = 0; k < cone.size(); ++k)
                    if (k != drop) facet.push_back(cone[k]);
                ++facet_uses[facet];
            }
        }
        out.complete = pure && !fan.cones.empty();
        for (const auto& [facet, uses] : facet_uses) {
            if (uses == 2) continue;
            out.complete = false;
            std::string rays;
            for (Index r : facet) rays += (rays.empty() ? "" : ",") + std::to_string(r);
            out.issues.push_back("facet {" + rays + "} lies in " + std::to_string(uses) + " maximal cone(s)");
        }
    }

    out.pairwise_intersections_ok = pure;
    for (std::size_t i = 0; i < fan.cones.size() && out.pairwise_intersections_ok; ++i) {
        for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
            if (!inverses[i] || !inverses[j]) continue;
            if (!meet_in_common_face(fan.cones[i], *inverses[i], fan.cones[j], *inverses[j])) {
                out.pairwise_intersections_ok = false;
                out.issues.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) +
                                     " overlap beyond a common face");
                break;
            }
        }
    }
    return out;
}

void require_smooth_complete(const Fan& fan) {
    const FanChecks checks = fan_checks(fan);
    auto joined = [&] {
        std::string s;
        for (const auto& issue : checks.issues) s += (s.empty() ? "" : "; ") + issue;
        return s;
    };
    if (!checks.smooth) throw Error(ErrorCode::FanNotSmooth, joined());
    if (!checks.complete || !checks.pairwise_intersections_ok)
        throw Error(ErrorCode::FanNotComplete, joined());
}

std::vector<std::size_t> cones_containing(const Fan& fan, const RatVector& direction, bool& on_boundary) {
    on_boundary = false;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const auto coords = solve_square(cone_matrix(fan, fan.cones[c]), direction);
        if (!coords) continue;
        if ((coords->array() < 0).any()) continue;
        if ((coords->array() == 0).any()) on_boundary = true;
        out.push_back(c);
    }
    return out;
}

std::size_t coverage_failures(const Fan& fan, int samples, std::uint64_t seed) {
    if (fan.dimension == 0) return fan.cones.size() == 1 ? 0 : static_cast<std::size_t>(samples);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-1000000, 1000000);
    std::size_t failures = 0;
    for (int s = 0; s < samples;) {
        RatVector y(fan.dimension);
        for (Index j = 0; j < fan.dimension; ++j) y(j) = coord(rng);
        if (y.isZero()) continue;
        bool boundary = false;
        const auto hits = cones_containing(fan, y, boundary);
        if (boundary) continue;
        if (hits.size() != 1) ++failures;
        ++s;
    }
    return failures;
}

}  // namespace quiverfan

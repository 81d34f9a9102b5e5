#ifndef QUIVERFAN_COHOMOLOGY_HPP
#define QUIVERFAN_COHOMOLOGY_HPP

#include "quiverfan/fan.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quiverfan {

/// One sign pattern that contributed to a cohomology table.
struct PatternContribution {
    ArrowSet below;                       // rays with s_alpha < 0
    std::int64_t lattice_points = 0;      // chamber size
    std::vector<std::int64_t> reduced;    // reduced[l] = dim H~^{l-1}(K_S), l = 0..d
};

struct CohomologyTable {
    Weight weight;
    std::vector<std::int64_t> h;  // h^0 .. h^d
    std::int64_t euler = 0;
    std::vector<PatternContribution> patterns;

    bool higher_vanishes() const;
};

/// Line-bundle cohomology on the smooth complete toric variety of one fan.
///
/// For a divisor flow r, a character m (an integral circulation) falls in the
/// chamber of S = {alpha : r_alpha + m_alpha < 0}, and contributes
/// dim H~^{l-1}(K_S) to h^l, where K_S is the complex of subsets of S spanning
/// a cone. Chambers use r + m <= -1 on S and r + m >= 0 elsewhere.
///
/// Reduced cohomology of K_S is cached per pattern, so one engine must not be
/// shared between threads.
class CohomologyEngine {
public:
    /// Builds the fan of fan_weight; throws unless it is smooth and complete.
    CohomologyEngine(Quiver quiver, const Weight& fan_weight);

    const Quiver& quiver() const noexcept { return quiver_; }
    const Fan& fan() const noexcept { return fan_; }
    const Weight& fan_weight() const noexcept { return fan_weight_; }

    /// Uses the tree completion of the zero flow on the reference tree as
    /// divisor representative.
    CohomologyTable compute(const Weight& theta) const;
    CohomologyTable compute_with_representative(const IntVector& divisor_flow) const;

    /// dim H~^{l-1}(K_S) for l = 0..d; S given as a bit mask over rays.
    const std::vector<std::int64_t>& reduced_cohomology(std::uint32_t pattern) const;

    /// -(reduced Euler characteristic of K_S), from face counts alone.
    std::int64_t pattern_euler(std::uint32_t pattern) const;

private:
    Quiver quiver_;
    Weight fan_weight_;
    Fan fan_;
    std::vector<std::uint32_t> cone_masks_;
    mutable std::unordered_map<std::uint32_t, std::vector<std::int64_t>> reduced_cache_;
};

CohomologyTable line_bundle_cohomology(const Quiver& quiver, const Weight& fan_weight, const Weight& theta);

struct GlobalGeneration {
    bool globally_generated = false;
    bool full_dimensional = false;
};

/// Local generator per maximal cone: the tree completion of the zero flow on
/// the cone's tree must be a regular flow.
GlobalGeneration global_generation(const CohomologyEngine& engine, const Weight& theta);
GlobalGeneration global_generation(const Quiver& quiver, const Weight& fan_weight, const Weight& theta);

struct ExtReport {
    std::map<std::pair<VertexIndex, VertexIndex>, CohomologyTable> pairs;
    std::vector<std::int64_t> ext;
    bool vanishing_holds = false;
};

/// h^l of L(theta_{p,q}) for all ordered vertex pairs, summed into Ext^l(U,U).
ExtReport ext_table(const CohomologyEngine& engine);
ExtReport ext_table(const Quiver& quiver, const Weight& theta);

struct KodairaViolation {
    Weight theta;
    CohomologyTable table;  // of theta - canonical weight
};

struct KodairaReport {
    std::size_t tested = 0;
    std::size_t skipped = 0;  // not globally generated or not full-dimensional
    std::vector<KodairaViolation> violations;
};

KodairaReport kodaira_suite(const CohomologyEngine& engine, const std::vector<Weight>& weights);

/// Distinct globally generated full-dimensional classes, drawn as the
/// canonical weight plus the input of a random small regular flow.
std::vector<Weight> kodaira_test_classes(const CohomologyEngine& engine, std::size_t count, std::uint64_t seed);

}  // namespace quiverfan

#endif  // QUIVERFAN_COHOMOLOGY_HPP

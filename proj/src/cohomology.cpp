#include "quiverfan/cohomology.hpp"

#include "quiverfan/linalg.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace quiverfan {

namespace {

constexpr Index kMaxRays = 20;

std::vector<std::uint32_t> submasks(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = mask;; s = (s - 1) & mask) {
        out.push_back(s);
        if (s == 0) break;
    }
    return out;
}

// All faces of K_S grouped by cardinality (index 0 holds the empty face).
std::vector<std::vector<std::uint32_t>> faces_of(const std::vector<std::uint32_t>& cones, std::uint32_t pattern) {
    std::set<std::uint32_t> faces;
    for (std::uint32_t cone : cones)
        for (std::uint32_t f : submasks(cone & pattern)) faces.insert(f);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(std::popcount(pattern)) + 1);
    for (std::uint32_t f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    return by_size;
}

// Rank of the coboundary from faces of size k to faces of size k + 1.
Index coboundary_rank(const std::vector<std::uint32_t>& lower, const std::vector<std::uint32_t>& upper) {
    if (lower.empty() || upper.empty()) return 0;
    IntMatrix m = IntMatrix::Zero(static_cast<Index>(upper.size()), static_cast<Index>(lower.size()));
    for (std::size_t i = 0; i < upper.size(); ++i) {
        int position = 0;
        for (std::uint32_t bits = upper[i]; bits != 0; bits &= bits - 1, ++position) {
            const std::uint32_t removed = bits & (~bits + 1);
            const auto it = std::lower_bound(lower.begin(), lower.end(), upper[i] & ~removed);
            m(static_cast<Index>(i), static_cast<Index>(it - lower.begin())) = position % 2 == 0 ? 1 : -1;
        }
    }
    return rank_of(m);
}

}  // namespace

bool CohomologyTable::higher_vanishes() const {
    return std::all_of(h.begin() + (h.empty() ? 0 : 1), h.end(), [](std::int64_t x) { return x == 0; });
}

CohomologyEngine::CohomologyEngine(Quiver quiver, const Weight& fan_weight)
    : quiver_(std::move(quiver)), fan_weight_(fan_weight), fan_(build_fan(quiver_, fan_weight)) {
    if (fan_.num_rays() > kMaxRays)
        throw Error(ErrorCode::InstanceTooLarge,
                    std::to_string(fan_.num_rays()) + " rays exceed the sign-pattern limit of 20");
    require_smooth_complete(fan_);
    for (const auto& cone : fan_.cones) {
        std::uint32_t mask = 0;
        for (Index r : cone) mask |= std::uint32_t{1} << r;
        cone_masks_.push_back(mask);
    }
}

const std::vector<std::int64_t>& CohomologyEngine::reduced_cohomology(std::uint32_t pattern) const {
    if (auto it = reduced_cache_.find(pattern); it != reduced_cache_.end()) return it->second;

    const auto d = static_cast<std::size_t>(fan_.dimension);
    std::vector<std::int64_t> reduced(d + 1, 0);
    const bool simplex = pattern != 0 && std::any_of(cone_masks_.begin(), cone_masks_.end(), [&](std::uint32_t c) {
                             return (c & pattern) == pattern;
                         });
    if (pattern == 0) {
        reduced[0] = 1;
    } else if (!simplex) {
        const auto faces = faces_of(cone_masks_, pattern);
        // cochains in degree k live on faces of size k + 1; reduced[l] is degree l - 1
        std::vector<Index> rank(faces.size(), 0);  // rank[k]: size k -> size k + 1
        for (std::size_t k = 0; k + 1 < faces.size(); ++k) rank[k] = coboundary_rank(faces[k], faces[k + 1]);
        for (std::size_t size = 0; size < faces.size() && size <= d; ++size) {
            const Index incoming = size == 0 ? 0 : rank[size - 1];
            reduced[size] = static_cast<std::int64_t>(faces[size].size()) - rank[size] - incoming;
        }
    }
    return reduced_cache_.emplace(pattern, std::move(reduced)).first->second;
}

std::int64_t CohomologyEngine::pattern_euler(std::uint32_t pattern) const {
    // -sum_{k >= -1} (-1)^k f_k with f_k the number of faces of size k + 1
    std::int64_t total = 0;
    const auto faces = faces_of(cone_masks_, pattern);
    for (std::size_t size = 0; size < faces.size(); ++size)
        total += (size % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(faces[size].size());
    return total;
}

CohomologyTable CohomologyEngine::compute(const Weight& theta) const {
    const IntVector r = tree_completion(quiver_, fan_.basis.reference_tree, theta,
                                        IntVector(IntVector::Zero(static_cast<Index>(quiver_.num_arrows()))));
    return compute_with_representative(r);
}

CohomologyTable CohomologyEngine::compute_with_representative(const IntVector& divisor_flow) const {
    if (divisor_flow.size() != static_cast<Index>(quiver_.num_arrows()))
        throw Error(ErrorCode::MalformedInput, "divisor flow has the wrong number of entries");
    const auto d = static_cast<std::size_t>(fan_.dimension);
    const auto rays = static_cast<std::uint32_t>(fan_.num_rays());
    CohomologyTable table{weight_of_flow(quiver_, divisor_flow), std::vector<std::int64_t>(d + 1, 0), 0, {}};
    const Weight zero = Weight::zero(quiver_.num_vertices());

    std::int64_t euler_from_faces = 0;
    for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << rays); ++pattern) {
        const auto& reduced = reduced_cohomology(pattern);
        if (std::all_of(reduced.begin(), reduced.end(), [](std::int64_t x) { return x == 0; })) continue;

        // characters m with r + m <= -1 on the pattern and r + m >= 0 off it
        std::vector<FlowBound> bounds;
        ArrowSet below;
        for (std::uint32_t k = 0; k < rays; ++k) {
            const ArrowIndex alpha = fan_.ray_arrows[k];
            const Integer r_alpha = divisor_flow(static_cast<Index>(alpha));
            if (pattern >> k & 1U) {
                bounds.push_back({alpha, -r_alpha - 1, true});
                below.push_back(alpha);
            } else {
                bounds.push_back({alpha, -r_alpha, false});
            }
        }
        const FlowPolytope chamber(quiver_, zero, std::move(bounds));
        if (chamber.is_empty()) continue;
        if (!chamber.is_bounded())
            throw Error(ErrorCode::InternalInconsistency,
                        "unbounded chamber with non-zero cohomology for rays {" +
                            [&] {
                                std::string s;
                                for (const auto& id : quiver_.arrow_ids(below)) s += (s.empty() ? "" : ",") + id;
                                return s;
                            }() + "}");
        const auto count = static_cast<std::int64_t>(count_lattice_points(chamber));
        if (count == 0) continue;
        for (std::size_t l = 0; l <= d; ++l) table.h[l] += count * reduced[l];
        euler_from_faces += count * pattern_euler(pattern);
        table.patterns.push_back({std::move(below), count, reduced});
    }

    for (std::size_t l = 0; l <= d; ++l) table.euler += (l % 2 == 0 ? 1 : -1) * table.h[l];
    if (table.euler != euler_from_faces)
        throw Error(ErrorCode::InternalInconsistency,
                    "Euler characteristic " + std::to_string(table.euler) + " disagrees with face count " +
                        std::to_string(euler_from_faces));
    return table;
}

CohomologyTable line_bundle_cohomology(const Quiver& quiver, const Weight& fan_weight, const Weight& theta) {
    return CohomologyEngine(quiver, fan_weight).compute(theta);
}

GlobalGeneration global_generation(const CohomologyEngine& engine, const Weight& theta) {
    const Quiver& quiver = engine.quiver();
    const Fan& fan = engine.fan();
    const FlowPolytope sections = section_polytope(quiver, theta, fan.ray_arrows);
    if (!sections.is_bounded()) throw Error(ErrorCode::UnboundedPolytope, "section polytope is unbounded");

    GlobalGeneration out;
    out.full_dimensional = affine_dimension(sections) == fan.dimension;
    out.globally_generated = true;
    const IntVector zero = IntVector::Zero(static_cast<Index>(quiver.num_arrows()));
    for (const ArrowSet& tree : fan.trees) {
        const IntVector s = tree_completion(quiver, tree, theta, zero);
        for (ArrowIndex alpha : fan.ray_arrows) {
            if (s(static_cast<Index>(alpha)) < 0) {
                out.globally_generated = false;
                return out;
            }
        }
    }
    return out;
}

GlobalGeneration global_generation(const Quiver& quiver, const Weight& fan_weight, const Weight& theta) {
    return global_generation(CohomologyEngine(quiver, fan_weight), theta);
}

ExtReport ext_table(const CohomologyEngine& engine) {
    const Quiver& quiver = engine.quiver();
    ExtReport report;
    report.ext.assign(static_cast<std::size_t>(engine.fan().dimension) + 1, 0);
    for (VertexIndex p = 0; p < quiver.num_vertices(); ++p) {
        for (VertexIndex q = 0; q < quiver.num_vertices(); ++q) {
            CohomologyTable table = engine.compute(vertex_pair_weight(quiver, p, q));
            for (std::size_t l = 0; l < report.ext.size(); ++l) report.ext[l] += table.h[l];
            report.pairs.emplace(std::make_pair(p, q), std::move(table));
        }
    }
    report.vanishing_holds =
        std::all_of(report.ext.begin() + 1, report.ext.end(), [](std::int64_t x) { return x == 0; });
    return report;
}

ExtReport ext_table(const Quiver& quiver, const Weight& theta) {
    return ext_table(CohomologyEngine(quiver, theta));
}

KodairaReport kodaira_suite(const CohomologyEngine& engine, const std::vector<Weight>& weights) {
    const Weight canonical = canonical_weight(engine.quiver());
    KodairaReport report;
    for (const Weight& theta : weights) {
        const GlobalGeneration gg = global_generation(engine, theta);
        if (!gg.globally_generated || !gg.full_dimensional) {
            ++report.skipped;
            continue;
        }
        ++report.tested;
        CohomologyTable table = engine.compute(theta - canonical);
        if (!table.higher_vanishes()) report.violations.push_back({theta, std::move(table)});
    }
    return report;
}

std::vector<Weight> kodaira_test_classes(const CohomologyEngine& engine, std::size_t count, std::uint64_t seed) {
    const Quiver& quiver = engine.quiver();
    const Weight canonical = canonical_weight(quiver);
    std::mt19937_64 rng(seed);
    std::vector<Weight> out;
    std::set<std::vector<std::string>> seen;
    const std::size_t attempts = 50 * count + 100;
    for (std::size_t attempt = 0; attempt < attempts && out.size() < count; ++attempt) {
        // widen the range as the small classes get used up
        std::uniform_int_distribution<std::size_t> entry(0, 2 + attempt / (count + 10));
        IntVector flow(static_cast<Index>(quiver.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) flow(a) = Integer(entry(rng));
        const Weight theta = canonical + weight_of_flow(quiver, flow);
        std::vector<std::string> key;
        for (Index v = 0; v < theta.size(); ++v) key.push_back(theta[v].str());
        if (!seen.insert(key).second) continue;
        const GlobalGeneration gg = global_generation(engine, theta);
        if (gg.globally_generated && gg.full_dimensional) out.push_back(theta);
    }
    return out;
}

}  // namespace quiverfan

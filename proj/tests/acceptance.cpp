// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "quiverfan/algebra.hpp"
#include "quiverfan/cli.hpp"
#include "quiverfan/io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace quiverfan;

namespace {

const std::filesystem::path data_dir = QUIVERFAN_DATA_DIR;

class Criterion {
public:
    void expect(bool condition, const std::string& what) {
        if (!condition && failures_.size() < 5) failures_.push_back(what);
        if (!condition) ++failed_;
    }
    void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

    bool ok() const { return failed_ == 0; }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::string& notes() const { return notes_; }
    std::size_t failed() const { return failed_; }

private:
    std::vector<std::string> failures_;
    std::size_t failed_ = 0;
    std::string notes_;
};

oracle::Row as_row(const VectorX<Integer>& v) {
    oracle::Row out;
    for (Index i = 0; i < v.size(); ++i) out.emplace_back(v(i));
    return out;
}

oracle::Row as_row(const RatVector& v) { return {v.data(), v.data() + v.size()}; }

std::vector<long> as_longs(const Weight& w) {
    std::vector<long> out;
    for (Index i = 0; i < w.size(); ++i) out.push_back(w[i].convert_to<long>());
    return out;
}

std::string show(const std::vector<std::int64_t>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

bool same_table(const CohomologyTable& a, const CohomologyTable& b) {
    if (a.h != b.h || a.euler != b.euler || a.patterns.size() != b.patterns.size()) return false;
    for (std::size_t i = 0; i < a.patterns.size(); ++i) {
        const PatternContribution& x = a.patterns[i];
        const PatternContribution& y = b.patterns[i];
        if (x.below != y.below || x.lattice_points != y.lattice_points || x.reduced != y.reduced) return false;
    }
    return true;
}

using Seconds = std::chrono::duration<double>;

// 1. The worked pentagon example.
void worked_example(Criterion& c) {
    const Quiver q = corpus::pentagon();
    const Weight theta = canonical_weight(q);
    c.expect(theta == corpus::weight({2, 1, -1, -2}), "canonical weight is (2,1,-1,-2)");
    c.expect(spanning_trees(q).size() == 8, "8 spanning trees");
    c.expect(stable_trees(q, theta).size() == 5, "5 stable trees");
    const FlowPolytope polytope = regular_flow_polytope(q, theta);
    c.expect(enumerate_vertices(polytope).size() == 5, "5 polytope vertices");
    const LatticePointSet points = lattice_points(polytope);
    c.expect(points.count() == 8, "8 lattice points");
    c.expect(points.interior.size() == 1, "1 interior point");
    c.expect(reflexivity_report(q).reflexive, "reflexive");
    const Fan fan = build_fan(q, theta);
    const FanChecks checks = fan_checks(fan);
    c.expect(fan.num_rays() == 5, "5 rays");
    c.expect(fan.cones.size() == 5, "5 maximal cones");
    c.expect(checks.smooth, "smooth");
    c.expect(checks.complete, "complete");
    c.note("8 trees, 5 stable, 5 vertices, 8 points, 1 interior, 5 rays, 5 cones");
}

// 2. Ext groups of the universal bundle.
void ext_vanishing(Criterion& c) {
    for (const auto& [name, q, expected] :
         {std::tuple{"pentagon", corpus::pentagon(), std::vector<std::int64_t>{14, 0, 0}},
          std::tuple{"kronecker", corpus::kronecker(), std::vector<std::int64_t>{4, 0}}}) {
        const auto start = std::chrono::steady_clock::now();
        const ExtReport report = ext_table(q, canonical_weight(q));
        const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
        c.expect(report.ext == expected, std::string(name) + " ext = " + show(report.ext));
        c.expect(report.vanishing_holds, std::string(name) + " vanishing");
        c.expect(elapsed < 1.0, std::string(name) + " under 1 s");
        c.note(std::string(name) + " ext " + show(report.ext));
    }
}

// 3. End(U) is the path algebra on the pentagon.
void endomorphism_algebra(Criterion& c) {
    const Quiver q = corpus::pentagon();
    const Weight theta = canonical_weight(q);
    const EndAlgebraReport end = end_algebra_report(q, theta);
    const auto paths = oracle::path_counts_by_powers(q);
    for (Index i = 0; i < end.hom.rows(); ++i)
        for (Index j = 0; j < end.hom.cols(); ++j)
            c.expect(end.hom(i, j) == paths[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     "hom entry matches path count");
    c.expect(end.dim == 14, "dim End = 14");
    c.expect(end.is_path_algebra, "path algebra");
    const PositionReport pos = weight_position(q, theta);
    c.expect(pos.canonical && !pos.canonical->has_thin_wall, "no (1,0)/(1,1)-wall");
    c.expect(stable_arrow_set(q, theta) == all_arrows(q), "Q_1(theta^c) = Q_1");
    c.note("dim End = " + std::to_string(end.dim));
}

// 4. The commuting square sits on a (1,1)-wall.
void negative_control(Criterion& c) {
    const Quiver q = corpus::square();
    const Weight theta = canonical_weight(q);
    c.expect(theta == corpus::weight({2, 0, 0, -2}), "canonical weight is (2,0,0,-2)");
    bool on_thin_wall = false;
    for (const Wall& w : enumerate_walls(q))
        if (w.t_plus == 1 && w.t_minus == 1 && w.contains(theta)) on_thin_wall = true;
    c.expect(on_thin_wall, "a (1,1)-wall contains theta^c");
    c.expect(!weight_position(q, theta).general_position, "not in general position");
    const std::string path = (data_dir / "quivers" / "square.json").string();
    for (const char* verb : {"polytope", "fan", "cohomology", "hom", "ext", "endalg", "exceptional", "report"}) {
        const cli::RunResult r = cli::run({verb, path, "--weight", "canonical"});
        const auto doc = io::Json::parse(r.out);
        c.expect(r.exit_code == 2 && doc.value("error", "") == "NotGeneralPosition",
                 std::string(verb) + " exits with NotGeneralPosition");
    }
    c.note("8 geometry verbs refused");
}

// 5. Library routes against independent oracles on random quivers.
void oracle_equivalence(Criterion& c) {
    std::mt19937_64 rng(20261016);
    std::size_t general = 0, attempts = 0, identity = 0, via_quotient = 0, unchecked_hom = 0, fans = 0;
    while ((general < 200 || identity < 200) && attempts < 20000) {
        ++attempts;
        const Quiver q = corpus::random_quiver(rng, 3, 5, 8);
        const Weight theta = canonical_weight(q);
        if (!weight_position(q, theta).general_position) continue;
        ++general;
        const ArrowSet stable = stable_arrow_set(q, theta);
        const BundleIsoClasses classes = bundle_iso_classes(q, theta);

        // (a) Hom dimensions: lattice points against path counts.
        std::optional<Quiver> reduced;
        if (!classes.is_identity() && classes.quotient.acyclic) reduced = classes.quotient.quiver();
        const auto paths = classes.is_identity() ? oracle::path_counts_by_powers(q)
                           : reduced           ? oracle::path_counts_by_powers(*reduced)
                                               : std::vector<std::vector<long>>{};
        if (classes.is_identity()) ++identity;
        else if (reduced) ++via_quotient;
        else ++unchecked_hom;
        for (VertexIndex p = 0; p < q.num_vertices(); ++p) {
            for (VertexIndex r = 0; r < q.num_vertices(); ++r) {
                const Weight pq = vertex_pair_weight(q, p, r);
                const auto lattice = static_cast<long>(count_lattice_points(section_polytope(q, pq, stable)));
                if (classes.is_identity()) {
                    c.expect(lattice == paths[p][r], "hom equals path count");
                    c.expect(lattice == static_cast<long>(oracle::lattice_points_by_scan(q, as_longs(pq)).size()),
                             "hom equals scanned lattice count");
                } else if (reduced) {
                    c.expect(lattice == paths[classes.class_of[p]][classes.class_of[r]],
                             "hom equals quotient path count");
                }
            }
        }

        // (b) Vertices from stable trees against basic feasible solutions.
        std::vector<oracle::Row> from_trees;
        for (const auto& [tree, vertex] : polytope_vertices(q, theta)) {
            const oracle::Row row = as_row(vertex);
            if (std::find(from_trees.begin(), from_trees.end(), row) == from_trees.end()) from_trees.push_back(row);
        }
        std::sort(from_trees.begin(), from_trees.end());
        c.expect(from_trees == oracle::vertices_by_basic_solutions(q, as_row(theta.values())),
                 "tree vertices equal basic solutions");

        // (c) Tree completion against a direct linear solve.
        std::uniform_int_distribution<int> small(-3, 3);
        for (const ArrowSet& tree : spanning_trees(q)) {
            IntVector eps(static_cast<Index>(q.num_arrows()));
            for (Index a = 0; a < eps.size(); ++a) eps(a) = small(rng);
            const IntVector r = tree_completion(q, tree, theta, eps);
            c.expect(as_row(r) == oracle::flow_by_linear_solve(q, tree, as_row(theta.values()), as_row(eps)),
                     "tree completion equals linear solve");
        }

        // (d) Smoothness of the fan, on the quotient quiver when Q_1(theta) is smaller.
        if (classes.is_identity()) {
            c.expect(fan_checks(build_fan(q, theta)).smooth, "fan is smooth");
            ++fans;
        } else if (reduced && classes.quotient.full_arrow_set) {
            c.expect(fan_checks(build_fan(*reduced, classes.quotient.weight)).smooth, "quotient fan is smooth");
            ++fans;
        }
    }
    c.expect(general >= 200, "at least 200 general-position instances");
    c.expect(identity >= 200, "at least 200 instances compared with paths in Q itself");
    c.expect(fans == general, "a fan was checked for every instance");
    c.note(std::to_string(general) + " instances from " + std::to_string(attempts) + " draws; hom via Q " +
           std::to_string(identity) + ", via quotient " + std::to_string(via_quotient) + ", unchecked " +
           std::to_string(unchecked_hom) + "; fans " + std::to_string(fans));
    c.expect(unchecked_hom == 0, "every Hom matrix had a path oracle");
}

// Weights theta^c + pi(r) for random regular flows r on q, pushed to the
// quiver carrying the fan by summing over iso classes; kept when the pushed
// class is globally generated and full-dimensional.
std::vector<Weight> pushed_test_classes(const Quiver& q, const BundleIsoClasses& classes,
                                        const CohomologyEngine& engine, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Weight> out;
    std::set<std::vector<std::string>> seen;
    for (std::size_t attempt = 0; attempt < 50 * count + 100 && out.size() < count; ++attempt) {
        std::uniform_int_distribution<int> entry(0, 2 + static_cast<int>(attempt / (count + 10)));
        IntVector flow(static_cast<Index>(q.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) flow(a) = entry(rng);
        const Weight theta = canonical_weight(q) + weight_of_flow(q, flow);
        std::vector<std::string> key;
        for (Index v = 0; v < theta.size(); ++v) key.push_back(theta[v].str());
        if (!seen.insert(key).second) continue;
        IntVector pushed = IntVector::Zero(static_cast<Index>(classes.classes.size()));
        for (VertexIndex v = 0; v < q.num_vertices(); ++v)
            pushed(static_cast<Index>(classes.class_of[v])) += theta[static_cast<Index>(v)];
        const GlobalGeneration gg = global_generation(engine, Weight(pushed));
        if (gg.globally_generated && gg.full_dimensional) out.push_back(Weight(pushed));
    }
    return out;
}

// 6. Kodaira vanishing for globally generated full-dimensional classes.
void kodaira(Criterion& c) {
    std::uint64_t seed = 6;
    for (const auto& [name, q] : corpus::all()) {
        const Weight theta = canonical_weight(q);
        if (!weight_position(q, theta).general_position) continue;
        const BundleIsoClasses classes = bundle_iso_classes(q, theta);
        std::vector<Weight> tests;
        std::optional<Quiver> reduced;
        if (!classes.is_identity()) reduced = classes.quotient.quiver();
        const Quiver& base = reduced ? *reduced : q;
        const CohomologyEngine engine(base, reduced ? classes.quotient.weight : theta);
        if (reduced) {
            c.expect(classes.quotient.weight == canonical_weight(base), name + " pushes theta^c to theta^c");
            tests = pushed_test_classes(q, classes, engine, 20, seed++);
        } else {
            tests = kodaira_test_classes(engine, 20, seed++);
        }
        const KodairaReport report = kodaira_suite(engine, tests);
        c.expect(report.violations.empty(), name + " has no violations");
        c.expect(report.tested == tests.size() && report.skipped == 0, name + " tested every class");
        c.expect(tests.size() >= 20, name + " has 20 test classes (got " + std::to_string(tests.size()) + ")");
        c.note(name + " " + std::to_string(report.tested) + (reduced ? " via quotient" : ""));
    }
}

// 7. The projective line.
void projective_line(Criterion& c) {
    const Quiver q = corpus::kronecker();
    const CohomologyEngine engine(q, canonical_weight(q));
    for (long n = -10; n <= 10; ++n) {
        const CohomologyTable t = engine.compute(corpus::weight({n, -n}));
        c.expect(t.h == oracle::projective_line(n), "O(" + std::to_string(n) + ") = " + show(t.h));
    }
    c.note("21 degrees");
}

// 8. Tables do not depend on the divisor representative.
void representative_independence(Criterion& c) {
    const Quiver q = corpus::pentagon();
    const CohomologyEngine engine(q, canonical_weight(q));
    const CirculationBasis& basis = engine.fan().basis;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntVector flow(static_cast<Index>(q.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) flow(a) = small(rng);
        const Weight theta = weight_of_flow(q, flow);
        IntVector coords(basis.rank());
        for (Index j = 0; j < coords.size(); ++j) coords(j) = small(rng) * 5;
        const IntVector representative = flow + basis.vectors * coords;
        c.expect(same_table(engine.compute(theta), engine.compute_with_representative(representative)),
                 "trial " + std::to_string(trial));
    }
    c.note("100 representatives");
}

}  // namespace

int main() {
    const std::vector<std::tuple<int, std::function<void(Criterion&)>, double>> criteria = {
        {1, worked_example, 1.0},      {2, ext_vanishing, 2.0},   {3, endomorphism_algebra, 0},
        {4, negative_control, 0},      {5, oracle_equivalence, 300.0}, {6, kodaira, 300.0},
        {7, projective_line, 0},       {8, representative_independence, 0},
    };
    bool all_ok = true;
    for (const auto& [number, body, limit] : criteria) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
        if (limit > 0) c.expect(elapsed < limit, "time limit " + std::to_string(limit) + " s");
        all_ok = all_ok && c.ok();

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "criterion " << number << ": " << (c.ok() ? "PASS" : "FAIL") << " (" << elapsed << " s) "
             << c.notes();
        if (!c.ok()) {
            line << " | " << c.failed() << " failed:";
            for (const std::string& f : c.failures()) line << " [" << f << "]";
        }
        std::cout << line.str() << std::endl;
    }
    return all_ok ? 0 : 1;
}

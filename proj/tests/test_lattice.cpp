#include "doctest.h"

#include "quiverfan/lattice.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace quiverfan;

namespace {

IntVector ints(std::initializer_list<long> values) {
    IntVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long x : values) v(i++) = x;
    return v;
}

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

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("pentagon circulation basis") {
    const Quiver q = corpus::pentagon();
    const CirculationBasis basis = circulation_basis(q);
    CHECK(basis.reference_tree == ArrowSet{0, 1, 3});
    CHECK(basis.cycle_arrows == std::vector<ArrowIndex>{2, 4});
    REQUIRE(basis.rank() == 2);
    CHECK(basis.vectors.col(0) == ints({1, -1, 1, 0, 0}));
    CHECK(basis.vectors.col(1) == ints({-1, 1, 0, -1, 1}));
    for (Index j = 0; j < basis.rank(); ++j) CHECK(flow_input<Integer>(q, basis.vectors.col(j)).isZero());
}

TEST_CASE("pentagon tree completions") {
    const Quiver q = corpus::pentagon();
    const Weight theta = canonical_weight(q);
    const IntVector zero = IntVector::Zero(5);
    CHECK(tree_completion(q, {0, 1, 3}, theta, zero) == ints({1, 1, 0, 2, 0}));
    CHECK(tree_completion(q, {0, 2, 4}, theta, zero) == ints({2, 0, 3, 0, 2}));
    CHECK_THROWS_AS(tree_completion(q, {0, 1, 2}, theta, zero), Error);
}

TEST_CASE("tree completion agrees with a direct linear solve") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 80; ++trial) {
        const Quiver q = corpus::random_quiver(rng, 2, 6, 9);
        IntVector flow(static_cast<Index>(q.num_arrows())), eps(static_cast<Index>(q.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) {
            flow(a) = coeff(rng);
            eps(a) = coeff(rng);
        }
        const Weight theta = weight_of_flow(q, flow);
        for (const ArrowSet& tree : spanning_trees(q)) {
            const IntVector r = tree_completion(q, tree, theta, eps);
            CHECK(weight_of_flow(q, r) == theta);
            CHECK(as_row(r) == oracle::flow_by_linear_solve(q, tree, as_row(theta.values()), as_row(eps)));
        }
    }
}

TEST_CASE("pentagon canonical polytope") {
    const Quiver q = corpus::pentagon();
    const Weight theta = canonical_weight(q);
    const FlowPolytope delta = regular_flow_polytope(q, theta);
    CHECK(delta.is_bounded());
    CHECK(affine_dimension(delta) == 2);
    CHECK(enumerate_vertices(delta).size() == 5);
    CHECK(polytope_vertices(q, theta).size() == 5);

    const LatticePointSet points = lattice_points(delta);
    CHECK(points.count() == oracle::lattice_points_by_scan(q, as_longs(theta)).size());
    CHECK(points.count() == 8);
    REQUIRE(points.interior.size() == 1);
    CHECK(points.interior[0] == IntVector::Ones(5));

    const ReflexivityReport report = reflexivity_report(q);
    CHECK(report.reflexive);
    CHECK(report.facet_arrows.size() == 5);
}

TEST_CASE("vertices from stable trees match the basic feasible solutions") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const Quiver q = corpus::random_quiver(rng, 3, 5, 8);
        const Weight theta = canonical_weight(q);
        if (!weight_position(q, theta).general_position) continue;
        ++checked;
        std::vector<oracle::Row> from_trees;
        for (const auto& [tree, vertex] : polytope_vertices(q, theta)) {
            const oracle::Row row = as_row(vertex);
            if (std::find(from_trees.begin(), from_trees.end(), row) == from_trees.end()) from_trees.push_back(row);
        }
        std::sort(from_trees.begin(), from_trees.end());
        CHECK(from_trees == oracle::vertices_by_basic_solutions(q, as_row(theta.values())));

        std::vector<oracle::Row> from_h;
        for (const RatVector& v : enumerate_vertices(regular_flow_polytope(q, theta))) {
            CHECK(is_integral(v));
            from_h.push_back(as_row(v));
        }
        CHECK(from_h == from_trees);
    }
    CHECK(checked >= 20);
}

TEST_CASE("lattice points of path weights are the paths") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Quiver q = corpus::random_quiver(rng, 2, 5, 7);
        for (VertexIndex p = 0; p < q.num_vertices(); ++p) {
            for (VertexIndex t = 0; t < q.num_vertices(); ++t) {
                const Weight theta = vertex_pair_weight(q, p, t);
                const LatticePointSet points = lattice_points(regular_flow_polytope(q, theta));
                const auto paths = enumerate_paths(q, p, t);
                CHECK(points.count() == paths.size());
                CHECK(points.count() == oracle::lattice_points_by_scan(q, as_longs(theta)).size());
                for (const IntVector& r : points.points)
                    for (Index a = 0; a < r.size(); ++a) CHECK((r(a) == 0 || r(a) == 1));
                for (const Walk& w : paths)
                    CHECK(std::find(points.points.begin(), points.points.end(), walk_flow(q, w)) != points.points.end());
            }
        }
    }
}

TEST_CASE("lattice counts agree with a flow-space scan") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coeff(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const Quiver q = corpus::random_quiver(rng, 2, 4, 5);
        IntVector flow(static_cast<Index>(q.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) flow(a) = coeff(rng);
        const Weight theta = weight_of_flow(q, flow);
        CHECK(count_lattice_points(regular_flow_polytope(q, theta)) ==
              oracle::lattice_points_by_scan(q, as_longs(theta)).size());
    }
}

TEST_CASE("empty and unbounded polytopes") {
    const Quiver k = corpus::kronecker();
    const FlowPolytope empty = regular_flow_polytope(k, corpus::weight({-1, 1}));
    CHECK(empty.is_empty());
    CHECK(count_lattice_points(empty) == 0);
    CHECK(affine_dimension(empty) == -1);
    CHECK(enumerate_vertices(empty).empty());

    const FlowPolytope open = section_polytope(k, corpus::weight({1, -1}), {});
    CHECK_FALSE(open.is_bounded());
    try {
        (void)lattice_points(open);
        FAIL("expected UnboundedPolytope");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundedPolytope);
    }
}

TEST_CASE("general position polytopes are lattice polytopes") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> coeff(0, 3);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 40; ++trial) {
        const Quiver q = corpus::random_quiver(rng, 2, 5, 7);
        IntVector flow(static_cast<Index>(q.num_arrows()));
        for (Index a = 0; a < flow.size(); ++a) flow(a) = coeff(rng);
        const Weight theta = weight_of_flow(q, flow);
        if (!weight_position(q, theta).general_position) continue;
        ++checked;
        for (const RatVector& v : enumerate_vertices(regular_flow_polytope(q, theta))) CHECK(is_integral(v));
    }
    CHECK(checked >= 10);
}

TEST_CASE("reflexivity on the corpus") {
    for (const auto& [name, q] : corpus::all()) {
        CAPTURE(name);
        if (!weight_position(q, canonical_weight(q)).general_position) {
            CHECK_THROWS_AS(reflexivity_report(q), Error);
            continue;
        }
        CHECK(reflexivity_report(q).reflexive);
    }
}

}  // TEST_SUITE

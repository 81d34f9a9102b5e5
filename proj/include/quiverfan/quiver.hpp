#ifndef QUIVERFAN_QUIVER_HPP
#define QUIVERFAN_QUIVER_HPP

#include "quiverfan/errors.hpp"
#include "quiverfan/scalar.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace quiverfan {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

/// Sorted, duplicate-free list of arrow indices.
using ArrowSet = std::vector<ArrowIndex>;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexIndex>;

struct ArrowSpec {
    std::string id;
    std::string source;
    std::string target;
};

struct Arrow {
    std::string id;
    VertexIndex source;
    VertexIndex target;
};

/// A finite connected quiver without oriented cycles. Vertices and arrows keep
/// their input order; that order is the dense index used everywhere else.
class Quiver {
public:
    /// Validates identifiers, endpoints, connectivity and acyclicity.
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_arrows() const noexcept { return arrows_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::vector<std::string>& vertex_ids() const noexcept { return vertices_; }

    VertexIndex vertex_index(const std::string& id) const;
    ArrowIndex arrow_index(const std::string& id) const;

    /// #Q_1 - #Q_0 + 1.
    std::size_t moduli_dimension() const noexcept {
        return arrows_.size() + 1 - vertices_.size();
    }

    /// Kahn order, ties broken by input order.
    const std::vector<VertexIndex>& topological_order() const noexcept { return topo_; }

    std::vector<std::string> arrow_ids(const ArrowSet& set) const;
    std::vector<std::string> vertex_ids(const VertexSet& set) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, ArrowIndex> arrow_lookup_;
    std::vector<VertexIndex> topo_;
};

/// Integral weight: values on vertices summing to zero.
class Weight {
public:
    Weight() = default;
    explicit Weight(IntVector values);

    static Weight zero(std::size_t num_vertices);

    const IntVector& values() const noexcept { return values_; }
    Index size() const noexcept { return values_.size(); }
    const Integer& operator[](Index i) const { return values_(i); }

    Integer sum_over(const VertexSet& set) const;

    Weight operator+(const Weight& other) const { return Weight(IntVector(values_ + other.values_)); }
    Weight operator-(const Weight& other) const { return Weight(IntVector(values_ - other.values_)); }
    Weight operator-() const { return Weight(IntVector(-values_)); }
    Weight scaled(const Integer& k) const { return Weight(IntVector(values_ * k)); }

    bool operator==(const Weight& other) const { return values_ == other.values_; }

private:
    IntVector values_;
};

IntMatrix incidence_matrix(const Quiver& quiver);

/// Net outflow at each vertex, for any scalar type.
template <typename Scalar>
VectorX<Scalar> flow_input(const Quiver& quiver, const VectorX<Scalar>& flow) {
    VectorX<Scalar> out = VectorX<Scalar>::Zero(static_cast<Index>(quiver.num_vertices()));
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a) {
        const Arrow& arr = quiver.arrow(a);
        out(static_cast<Index>(arr.source)) += flow(static_cast<Index>(a));
        out(static_cast<Index>(arr.target)) -= flow(static_cast<Index>(a));
    }
    return out;
}

Weight weight_of_flow(const Quiver& quiver, const IntVector& flow);
RatVector weight_of_flow(const Quiver& quiver, const RatVector& flow);

Weight canonical_weight(const Quiver& quiver);

/// +1 at p, -1 at q, 0 elsewhere; zero when p == q.
Weight vertex_pair_weight(const Quiver& quiver, VertexIndex p, VertexIndex q);

bool is_regular(const RatVector& flow);

struct Step {
    ArrowIndex arrow;
    bool forward;

    bool operator==(const Step&) const = default;
};

/// Walk along possibly reversed arrows, no arrow repeated.
class Walk {
public:
    /// Throws NotAWalk if the steps are not incident head to tail.
    Walk(const Quiver& quiver, VertexIndex start, std::vector<Step> steps);

    VertexIndex start() const noexcept { return start_; }
    VertexIndex end() const noexcept { return end_; }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    bool is_path() const noexcept;

private:
    VertexIndex start_;
    VertexIndex end_;
    std::vector<Step> steps_;
};

IntVector walk_flow(const Quiver& quiver, const Walk& walk);

/// All directed paths p -> q (the empty path when p == q), lexicographic in
/// arrow order.
std::vector<Walk> enumerate_paths(const Quiver& quiver, VertexIndex p, VertexIndex q);
std::vector<Walk> enumerate_paths(const Quiver& quiver, const std::string& p, const std::string& q);

/// Path-count matrix (#paths p -> q).
MatrixX<long long> path_count_matrix(const Quiver& quiver);

/// Undirected spanning-forest helper shared by several modules.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    bool unite(std::size_t a, std::size_t b);
    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t components_;
};

}  // namespace quiverfan

#endif  // QUIVERFAN_QUIVER_HPP

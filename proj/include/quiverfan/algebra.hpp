#ifndef QUIVERFAN_ALGEBRA_HPP
#define QUIVERFAN_ALGEBRA_HPP

#include "quiverfan/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quiverfan {

/// Q / (Q_1 \ Q_1(theta)). Kept as raw data because the contraction may
/// create oriented cycles, which a Quiver refuses.
struct QuotientQuiver {
    std::vector<std::string> vertices;  // member ids joined by '+'
    std::vector<ArrowSpec> arrows;      // the arrows of Q_1(theta), endpoints mapped
    Weight weight;                      // theta summed over each class
    bool acyclic = false;
    /// Q̄_1(θ̄) = Q̄_1; only meaningful when acyclic.
    bool full_arrow_set = false;

    /// Throws QuotientHasOrientedCycle when not acyclic.
    Quiver quiver() const;
};

/// U_p and U_q are isomorphic iff p, q are joined by a walk avoiding Q_1(theta).
struct BundleIsoClasses {
    std::vector<VertexSet> classes;       // ordered by smallest member
    std::vector<std::size_t> class_of;    // per vertex
    ArrowSet inverted_arrows;             // Q_1 \ Q_1(theta)
    QuotientQuiver quotient;

    bool is_identity() const noexcept { return inverted_arrows.empty(); }
};

BundleIsoClasses bundle_iso_classes(const Quiver& quiver, const Weight& theta);

/// dim Hom(U_p, U_q) as the lattice-point count of the sections polytope of
/// theta_{p,q}, cross-checked against the number of paths p -> q in Q (or in
/// the quotient when Q_1(theta) is smaller and the quotient is acyclic).
std::size_t hom_dim(const Quiver& quiver, const Weight& theta, VertexIndex p, VertexIndex q);

struct EndAlgebraReport {
    MatrixX<long long> hom;        // hom(p, q) = dim Hom(U_p, U_q)
    long long dim = 0;
    bool is_basic = false;
    bool is_path_algebra = false;
    long long basic_dim = 0;        // End of one summand per iso class
    BundleIsoClasses classes;
};

EndAlgebraReport end_algebra_report(const Quiver& quiver, const Weight& theta);

struct ExceptionalReport {
    std::vector<VertexIndex> sequence;  // one representative per iso class
    bool summands_exceptional = false;
    bool ordered = false;               // nothing maps or extends backwards
    bool directed = false;              // Hom != 0 is a partial order
    bool exceptional = false;
    bool strong_exceptional = false;
    ExtReport ext;                      // over the quiver the fan was built on
    EndAlgebraReport end;
};

/// Ext groups are taken on the quotient quiver when Q_1(theta) != Q_1, since
/// both carry the same moduli space and U_p depends only on the class of p.
ExceptionalReport exceptional_check(const Quiver& quiver, const Weight& theta);

}  // namespace quiverfan

#endif  // QUIVERFAN_ALGEBRA_HPP

#ifndef QUIVERFAN_LP_HPP
#define QUIVERFAN_LP_HPP

#include "quiverfan/scalar.hpp"

namespace quiverfan::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational value;    // meaningful when optimal
    RatVector point;   // an optimal point when optimal
};

/// min c.x subject to a x >= b with x free. Exact two-phase simplex over the
/// rationals; Bland's rule guarantees termination on degenerate problems.
Result minimize(const RatVector& c, const RatMatrix& a, const RatVector& b);

inline Result maximize(const RatVector& c, const RatMatrix& a, const RatVector& b) {
    Result r = minimize(RatVector(-c), a, b);
    if (r.status == Status::optimal) r.value = -r.value;
    return r;
}

inline bool is_feasible(const RatMatrix& a, const RatVector& b) {
    return minimize(RatVector::Zero(a.cols()), a, b).status != Status::infeasible;
}

}  // namespace quiverfan::lp

#endif  // QUIVERFAN_LP_HPP

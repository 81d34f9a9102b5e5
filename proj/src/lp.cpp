#include "quiverfan/lp.hpp"

#include <vector>

namespace quiverfan::lp {

namespace {

// Dense tableau in canonical form. Row `rows` holds reduced costs; its last
// entry is minus the objective value.
class Tableau {
public:
    Tableau(RatMatrix body, std::vector<Index> basis) : t_(std::move(body)), basis_(std::move(basis)) {}

    Index rows() const { return t_.rows() - 1; }
    Index cols() const { return t_.cols() - 1; }
    RatMatrix& data() { return t_; }
    std::vector<Index>& basis() { return basis_; }

    void pivot(Index row, Index col) {
        const Rational p = t_(row, col);
        t_.row(row) /= p;
        for (Index r = 0; r < t_.rows(); ++r) {
            if (r == row || t_(r, col) == 0) continue;
            const Rational f = t_(r, col);
            t_.row(r) -= f * t_.row(row);
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    void price(const RatVector& cost) {
        const Index obj = rows();
        t_.row(obj).setZero();
        for (Index j = 0; j < cost.size(); ++j) t_(obj, j) = cost(j);
        for (Index r = 0; r < rows(); ++r) {
            const Rational cb = cost(basis_[static_cast<std::size_t>(r)]);
            if (cb != 0) t_.row(obj) -= cb * t_.row(r);
        }
    }

    /// Bland's rule; columns >= `allowed` never enter. False when unbounded.
    bool optimize(Index allowed) {
        const Index obj = rows();
        for (;;) {
            Index enter = -1;
            for (Index j = 0; j < allowed; ++j) {
                if (t_(obj, j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            Index leave = -1;
            Rational best;
            for (Index r = 0; r < rows(); ++r) {
                if (t_(r, enter) <= 0) continue;
                const Rational ratio = t_(r, cols()) / t_(r, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(r)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

private:
    RatMatrix t_;
    std::vector<Index> basis_;
};

}  // namespace

Result minimize(const RatVector& c, const RatMatrix& a, const RatVector& b) {
    const Index m = a.rows();
    const Index d = a.cols();
    Result result;
    if (m == 0) {
        // unconstrained: bounded only for a zero objective
        if (c.isZero()) {
            result.status = Status::optimal;
            result.value = 0;
            result.point = RatVector::Zero(d);
        } else {
            result.status = Status::unbounded;
        }
        return result;
    }

    // columns: u (d) | v (d) | slack (m) | artificial (m) | rhs ; x = u - v
    const Index n_real = 2 * d + m;
    const Index n_total = n_real + m;
    RatMatrix body = RatMatrix::Zero(m + 1, n_total + 1);
    std::vector<Index> basis(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) {
        const bool flip = b(i) < 0;
        const Rational sign = flip ? Rational(-1) : Rational(1);
        for (Index j = 0; j < d; ++j) {
            body(i, j) = sign * a(i, j);
            body(i, d + j) = -sign * a(i, j);
        }
        body(i, 2 * d + i) = -sign;
        body(i, n_real + i) = 1;
        body(i, n_total) = sign * b(i);
        basis[static_cast<std::size_t>(i)] = n_real + i;
    }
    Tableau tab(std::move(body), std::move(basis));

    RatVector phase1 = RatVector::Zero(n_total);
    for (Index i = 0; i < m; ++i) phase1(n_real + i) = 1;
    tab.price(phase1);
    tab.optimize(n_total);
    if (tab.data()(m, n_total) != 0) {  // minus the residual infeasibility
        result.status = Status::infeasible;
        return result;
    }

    // drive zero-level artificials out; rows where that fails are redundant
    for (Index r = 0; r < m; ++r) {
        if (tab.basis()[static_cast<std::size_t>(r)] < n_real) continue;
        for (Index j = 0; j < n_real; ++j) {
            if (tab.data()(r, j) != 0) {
                tab.pivot(r, j);
                break;
            }
        }
    }

    RatVector phase2 = RatVector::Zero(n_total);
    for (Index j = 0; j < d; ++j) {
        phase2(j) = c(j);
        phase2(d + j) = -c(j);
    }
    tab.price(phase2);
    if (!tab.optimize(n_real)) {
        result.status = Status::unbounded;
        return result;
    }

    RatVector y = RatVector::Zero(n_total);
    for (Index r = 0; r < m; ++r) y(tab.basis()[static_cast<std::size_t>(r)]) = tab.data()(r, n_total);
    result.status = Status::optimal;
    result.point = y.head(d) - y.segment(d, d);
    result.value = c.dot(result.point);
    return result;
}

}  // namespace quiverfan::lp

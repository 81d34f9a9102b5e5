#ifndef QUIVERFAN_LINALG_HPP
#define QUIVERFAN_LINALG_HPP

// Exact dense linear algebra over Integer and Rational matrices.

#include "quiverfan/scalar.hpp"

#include <optional>
#include <vector>
#include <utility>

namespace quiverfan {

/// Bareiss elimination in place. Returns the rank; `det_sign` tracks row swaps.
/// After the call the last non-zero pivot equals the determinant up to sign
/// when the matrix is square and of full rank.
template <typename Scalar>
Index bareiss_eliminate(MatrixX<Scalar>& m, int& det_sign) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    Scalar prev(1);
    Index rank = 0;
    det_sign = 1;
    for (Index col = 0; col < cols && rank < rows; ++col) {
        Index pivot = rank;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            m.row(pivot).swap(m.row(rank));
            det_sign = -det_sign;
        }
        for (Index r = rank + 1; r < rows; ++r) {
            for (Index c = col + 1; c < cols; ++c)
                m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
            m(r, col) = Scalar(0);
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

/// Fraction-free rank.
template <typename Scalar>
Index rank_of(MatrixX<Scalar> m) {
    int sign = 1;
    return bareiss_eliminate(m, sign);
}

/// Fraction-free determinant of a square matrix.
template <typename Scalar>
Scalar determinant_of(MatrixX<Scalar> m) {
    const Index n = m.rows();
    if (n == 0) return Scalar(1);
    int sign = 1;
    if (bareiss_eliminate(m, sign) < n) return Scalar(0);
    Scalar det = m(n - 1, n - 1);
    return sign > 0 ? det : Scalar(-det);
}

/// Unique solution of a square system, or nullopt when singular.
inline std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col) {
        Index pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        for (Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col) / a(col, col);
            a.row(r) -= f * a.row(col);
            b(r) -= f * b(col);
        }
    }
    RatVector x(n);
    for (Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
    return x;
}

/// Reduced row echelon form; returns pivot columns.
inline std::vector<Index> row_reduce(RatMatrix& a) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        a.row(pivot).swap(a.row(row));
        const Rational lead = a(row, col);
        a.row(row) /= lead;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            a.row(r) -= f * a.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::optional<RatMatrix> inverse_of(const RatMatrix& a) {
    const Index n = a.rows();
    RatMatrix aug(n, 2 * n);
    aug << a, RatMatrix::Identity(n, n);
    const std::vector<Index> pivots = row_reduce(aug);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    return RatMatrix(aug.rightCols(n));
}

inline Integer gcd_of(const IntVector& v) {
    Integer g(0);
    for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, Integer(abs(v(i))));
    return g;
}

}  // namespace quiverfan

#endif  // QUIVERFAN_LINALG_HPP

#ifndef QUIVERFAN_SCALAR_HPP
#define QUIVERFAN_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace quiverfan {

// Expression templates are switched off so that Eigen expressions over these
// scalars never capture boost proxies.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

using Index = Eigen::Index;

inline Integer floor_of(const Rational& x) {
    Integer n = boost::multiprecision::numerator(x);
    Integer d = boost::multiprecision::denominator(x);  // always positive
    Integer q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

inline Integer ceil_of(const Rational& x) { return -floor_of(-x); }

inline bool is_integral(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& x) {
    if (is_integral(x)) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

inline std::string to_string(const Integer& x) { return x.str(); }

template <typename Scalar>
VectorX<Rational> to_rational(const VectorX<Scalar>& v) {
    VectorX<Rational> out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

inline bool is_integral(const RatVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_integral(v(i))) return false;
    return true;
}

/// Caller guarantees integrality.
inline IntVector to_integer(const RatVector& v) {
    IntVector out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = boost::multiprecision::numerator(v(i));
    return out;
}

}  // namespace quiverfan

#endif  // QUIVERFAN_SCALAR_HPP

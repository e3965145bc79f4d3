#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <string>
#include <string_view>

namespace nambu {

/// Exact rational scalar (GMP `mpq_t`, always kept in lowest terms with a
/// positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
/// Arbitrary-precision integer used by the fraction-free elimination.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using SparseMatrix = Eigen::SparseMatrix<Rational, Eigen::RowMajor>;
using Index = Eigen::Index;

/// Parses `[+-]?digits(/digits)?`. Returns false on malformed input or a zero
/// denominator.
bool parse_rational(std::string_view text, Rational& out);

/// `p` when the denominator is one, `p/q` otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Unit vector e_i of length d.
inline Vector unit_vector(Index d, Index i) {
  Vector v = Vector::Zero(d);
  v(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline bool is_zero(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const SparseMatrix& m);

/// Integer power of a square matrix; power -1 is the zero map and 0 the identity.
Matrix matrix_power(const Matrix& a, int k);

}  // namespace nambu

#pragma once

// The fundamental set L(N) = ^{n-1} N with [x, y]_a = sum_i (a y_1, .., L(x) y_i, .., a y_{n-1}),
// and its tensor counterpart on N^{(x) n-1}.

#include "nambu/algebra.hpp"

#include <span>
#include <vector>

namespace nambu {

/// Coordinates of v_1 ^ ... ^ v_m in the increasing-tuple basis of ^m.
Vector wedge_of(std::span<const Vector> factors, int dim);
/// Coordinates of v_1 (x) ... (x) v_m in the mixed-radix basis of (x)^m.
Vector tensor_of(std::span<const Vector> factors, int dim);

/// Matrix of ^m a (the induced map on ^m N).
Matrix wedge_power(const Matrix& a, int m);
/// Matrix of (x)^m a.
Matrix tensor_power(const Matrix& a, int m);
/// e_{i_1} (x) .. (x) e_{i_m} -> e_{i_1} ^ .. ^ e_{i_m}, a C(d,m) x d^m matrix.
Matrix antisymmetrizer(int dim, int m);

/// L(x) z = [x_1, ..., x_{n-1}, z] for x in ^{n-1} N given by coordinates.
Vector L_action(const HomNambuAlgebra& alg, const Vector& x, const Vector& z);
/// Matrix of z -> L(x) z.
Matrix L_matrix(const HomNambuAlgebra& alg, const Vector& x);

/// [x, y]_a on ^{n-1} N, in wedge coordinates.
Vector fundamental_bracket(const HomNambuAlgebra& alg, const Vector& x, const Vector& y);

/// Binary algebra (V, [.,.], a) by structure constants. Column a*D + b of
/// `constants` is [e_a, e_b]; no skewness is assumed.
class HomLeibnizAlgebra {
 public:
  HomLeibnizAlgebra() = default;
  HomLeibnizAlgebra(Matrix constants, Matrix twist);

  int dim() const { return static_cast<int>(twist_.rows()); }
  const Matrix& constants() const { return constants_; }
  const Matrix& twist() const { return twist_; }

  Vector basis_bracket(int a, int b) const { return constants_.col(static_cast<Index>(a) * dim() + b); }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [e_a, y].
  Matrix left_matrix(int a) const;
  /// Matrix of y -> [x, y].
  Matrix left_matrix(const Vector& x) const;

  bool operator==(const HomLeibnizAlgebra& o) const { return constants_ == o.constants_ && twist_ == o.twist_; }

 private:
  Matrix constants_;
  Matrix twist_;
  std::vector<Matrix> left_;
};

/// (^{n-1} N, [.,.]_a, ^{n-1} a). For n = 2 this is the algebra itself.
HomLeibnizAlgebra build_fundamental(const HomNambuAlgebra& alg);
/// (N^{(x) n-1}, [.,.]_a, (x)^{n-1} a) on ordered tuples.
HomLeibnizAlgebra build_tensor_fundamental(const HomNambuAlgebra& alg);

/// [a(x),[y,z]] = [[x,y],a(z)] + [a(y),[x,z]] on basis triples.
std::vector<Violation> check_hom_leibniz(const HomLeibnizAlgebra& leib);

/// L([x,y]_a) a(z) = L(a x) L(y) z - L(a y) L(x) z on wedge basis pairs and basis z.
std::vector<Violation> check_lemma_3_1(const HomNambuAlgebra& alg);

}  // namespace nambu

#pragma once

// alpha^k-derivations, inner derivations and representations.
//
// A d x d matrix is flattened column-major (entry (r, c) at r + c*d), which is
// Eigen's default storage, so `Eigen::Map` converts in both directions.

#include "nambu/algebra.hpp"
#include "nambu/exact_linalg.hpp"

#include <vector>

namespace nambu {

/// D with D alpha = alpha D and D[x_1..x_n] = sum_i [a^k x_1,..,D x_i,..,a^k x_n].
struct Derivation {
  Matrix matrix;
  int level = 0;
};

Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, Index rows, Index cols);

/// Violations of the commutation rule and the level-k Leibniz rule.
/// Level -1 uses alpha^-1 = 0, which turns the rule into D[x] = 0.
std::vector<Violation> check_derivation(const HomNambuAlgebra& alg, const Matrix& d, int level);
inline bool is_derivation(const HomNambuAlgebra& alg, const Matrix& d, int level) {
  return check_derivation(alg, d, level).empty();
}

/// Kernel of the stacked linear system over the d^2 entries of D, as
/// flattened matrices in reduced echelon form.
Subspace derivation_space(const HomNambuAlgebra& alg, int level);
std::vector<Matrix> derivation_basis(const HomNambuAlgebra& alg, int level);

/// ad_k(x)(y) = [x_1,...,x_{n-1}, alpha^k y], an alpha^{k+1}-derivation when
/// alpha fixes every x_i. Throws PreconditionError("fixed-point precondition
/// violated ...") otherwise.
Derivation inner_derivation(const HomNambuAlgebra& alg, std::span<const Vector> xs, int k);

/// D D' - D' D at level k + k'. Throws std::invalid_argument("level
/// underflow") below -1 and PreconditionError when an input is not a
/// derivation at its level. The result is re-checked before returning.
Derivation derivation_commutator(const HomNambuAlgebra& alg, const Derivation& a, const Derivation& b);

/// Skew (n-1)-linear map rho: N^{n-1} -> End(V) with an auxiliary nu in End(V).
struct RepresentationMap {
  int algebra_dim = 0;
  int arity = 0;          // n; rho takes n-1 arguments
  int module_dim = 0;
  std::vector<Matrix> rho;  // indexed by increasing (n-1)-tuples
  Matrix nu;

  TupleIndex tuples() const { return TupleIndex(algebra_dim, arity - 1); }
  /// Multilinear, skew evaluation.
  Matrix operator()(std::span<const Vector> xs) const;
};

/// rho = ad, nu = alpha.
RepresentationMap adjoint_representation(const HomNambuAlgebra& alg);
/// rho = 0 on a module of the given dimension.
RepresentationMap zero_representation(const HomNambuAlgebra& alg, int module_dim, const Matrix& nu);

/// rho(a x) rho(y) - rho(a y) rho(x) = sum_i rho(a y_1,..,ad(x)(y_i),..,a y_{n-1}) nu
/// on increasing basis tuples x, y. For n = 2 this is the Hom-Lie condition
/// rho([x,y]) nu = rho(a x) rho(y) - rho(a y) rho(x).
std::vector<Violation> check_representation(const HomNambuAlgebra& alg, const RepresentationMap& rep);

/// f rho(x) = rho'(x) f on every increasing basis tuple. Throws
/// PreconditionError("singular f") when f is not invertible.
bool check_rep_equivalence(const RepresentationMap& rep, const RepresentationMap& other, const Matrix& f);

}  // namespace nambu

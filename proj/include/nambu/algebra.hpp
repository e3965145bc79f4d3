#pragma once

// n-ary multiplicative Hom-Nambu(-Lie) algebras given by structure constants.
//
// A bracket is stored only on strictly increasing basis tuples, so
// skew-symmetry is structural: a permuted tuple evaluates to the sign of the
// sorting permutation times the stored vector, and a tuple with a repeated
// index evaluates to zero.
//
// Exhaustive checks iterate x over increasing (n-1)-tuples and y over
// increasing n-tuples of basis vectors. This is sufficient: both sides of
// every identity checked here are multilinear, and they are skew in the x
// block and in the y block separately, so any other basis tuple is either
// zero on both sides or a signed copy of an increasing one.

#include "nambu/combinatorics.hpp"
#include "nambu/scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace nambu {

/// Skew-symmetric n-linear bracket on a d-dimensional space.
class StructureTensor {
 public:
  StructureTensor() = default;
  /// The zero bracket. Requires d >= 1 and n >= 2.
  StructureTensor(int dim, int arity);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const TupleIndex& tuples() const { return tuples_; }
  /// d x C(d, n); column k is the bracket of increasing tuple k.
  const Matrix& coefficients() const { return coeffs_; }

  /// Bracket of basis vectors in any order.
  Vector basis_value(std::span<const int> indices) const;
  /// Stores `value` for the tuple after sorting it (the sign of the sort is
  /// applied). Throws std::invalid_argument for a repeated index with a
  /// nonzero value.
  void set(std::span<const int> indices, const Vector& value);
  /// Full multilinear expansion over the supports of the arguments.
  Vector evaluate(std::span<const Vector> args) const;
  /// rho composed after the bracket.
  StructureTensor compose(const Matrix& rho) const;

  bool operator==(const StructureTensor& other) const {
    return dim_ == other.dim_ && arity_ == other.arity_ && coeffs_ == other.coeffs_;
  }

 private:
  int dim_ = 0;
  int arity_ = 0;
  TupleIndex tuples_;
  Matrix coeffs_;
};

struct ValidationFlags {
  bool skew_checked = false;
  bool hom_nambu_checked = false;
  bool multiplicative_checked = false;
  bool all() const { return skew_checked && hom_nambu_checked && multiplicative_checked; }
};

/// A failed identity on a basis tuple. `arguments` holds the 0-based index
/// groups the identity was evaluated on; `residual` is LHS - RHS.
struct Violation {
  std::string identity;
  std::vector<Tuple> arguments;
  Vector residual;
};

/// Human-readable, 1-based rendering of a violation.
std::string describe(const Violation& v);

/// (N, [.,...,.], alpha) with a single twist map.
class HomNambuAlgebra {
 public:
  HomNambuAlgebra() = default;
  /// Unvalidated algebra; all flags are false.
  HomNambuAlgebra(StructureTensor bracket, Matrix twist);

  int dim() const { return bracket_.dim(); }
  int arity() const { return bracket_.arity(); }
  const StructureTensor& structure() const { return bracket_; }
  const Matrix& twist() const { return twist_; }
  const ValidationFlags& flags() const { return flags_; }

  Vector bracket(std::span<const Vector> args) const { return bracket_.evaluate(args); }
  /// alpha^k, with alpha^-1 = 0 and alpha^0 = id.
  Matrix twist_power(int k) const { return matrix_power(twist_, k); }

  /// Copy with the flags of every validator that passes set.
  HomNambuAlgebra validated() const;

  bool operator==(const HomNambuAlgebra& other) const {
    return bracket_ == other.bracket_ && twist_ == other.twist_;
  }

 private:
  StructureTensor bracket_;
  Matrix twist_;
  ValidationFlags flags_;
};

/// Evaluates the bracket; throws DimensionError on arity or length mismatch.
Vector bracket_eval(const HomNambuAlgebra& alg, std::span<const Vector> args);

/// Checks that every permutation of every increasing tuple evaluates to the
/// signed stored value.
std::vector<Violation> check_skew_symmetry(const HomNambuAlgebra& alg);

/// [a(x_1),...,a(x_{n-1}),[y_1,...,y_n]] = sum_i [a(y_1),...,[x,y_i],...,a(y_n)]
/// on all basis tuples. Empty iff the identity holds.
std::vector<Violation> check_hom_nambu_identity(const HomNambuAlgebra& alg);

/// a([x_1,...,x_n]) = [a(x_1),...,a(x_n)] on increasing basis tuples.
std::vector<Violation> check_multiplicativity(const HomNambuAlgebra& alg);

/// f([x]_A) = [f(x)]_B and f a_A = a_B f.
std::vector<Violation> check_morphism(const Matrix& f, const HomNambuAlgebra& source,
                                      const HomNambuAlgebra& target);

/// (N, rho o [.], rho) from a classical Nambu algebra (twist = id, identity
/// holding) and an endomorphism rho. Throws PreconditionError("not an
/// endomorphism ...") naming the first failing tuple.
HomNambuAlgebra yau_twist(const HomNambuAlgebra& nambu, const Matrix& rho);

/// (n+1)-dimensional algebra with [e_1,...,^e_i,...,e_{n+1}] = (-1)^{i+1} eps_i e_i
/// and twist = id. `signs` holds n+1 entries of +1 or -1.
HomNambuAlgebra filippov_algebra(int arity, const std::vector<int>& signs);

/// Zero bracket with the given twist (identity when empty).
HomNambuAlgebra zero_algebra(int dim, int arity, const Matrix& twist = Matrix());

/// Matrix of y -> [x_1,...,x_{n-1},y].
Matrix ad_matrix(const HomNambuAlgebra& alg, std::span<const Vector> xs);

/// Signed permutation matrices f with f o [.] = [.] o f and f a = a f. Brute
/// force over 2^d d! candidates; meant for fixtures with d <= 6.
std::vector<Matrix> signed_permutation_automorphisms(const HomNambuAlgebra& alg);

}  // namespace nambu

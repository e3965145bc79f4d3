#pragma once

// The cochain complex of a multiplicative Hom-Nambu-Lie algebra with trivial
// or adjoint coefficients. For x_1, ..., x_{p+1} blocks and z in N:
//
//   (d phi)(x, z) = sum_{i<j} (-1)^i phi(a x_1, .., ^x_i, .., [x_i, x_j]_a, .., a x_{p+1}, a z)
//                 + sum_i (-1)^i phi(a x_1, .., ^x_i, .., a x_{p+1}, L(x_i) z)
//
// and with adjoint coefficients additionally
//
//                 + sum_i (-1)^{i+1} L(a^p x_i) phi(x_1, .., ^x_i, .., x_{p+1}, z)
//                 + (-1)^p sum_k [a^p x^1_{p+1}, .., phi(x_1, .., x_p, x^k_{p+1}), .., a^p x^{n-1}_{p+1}, a^p z].
//
// The same formula at p = 0 gives -phi o [.] for scalar cochains and
// sum_i [x_1, .., phi x_i, .., x_n] - phi([x_1, .., x_n]) for N-valued ones.
// Adjoint cochains are meant to be equivariant (a o phi = phi o (a, ..., a));
// cohomology is computed inside that subspace.

#include "nambu/algebra.hpp"
#include "nambu/cochain.hpp"
#include "nambu/exact_linalg.hpp"
#include "nambu/fundamental.hpp"

#include <optional>

namespace nambu {

enum class Coefficients { Trivial, Adjoint };

const char* to_string(Coefficients c);

struct CohomologyReport {
  int degree = 0;
  Index dim_C = 0;
  Index dim_Z = 0;
  Index dim_B = 0;
  Index dim_H = 0;
  Subspace cocycle_basis;
  Subspace coboundary_basis;
  /// Cocycles completing a basis of B to a basis of Z.
  Subspace representatives;
  /// For adjoint coefficients in degree 1: dim Z, i.e. H^1 when no degree-0
  /// coboundaries are admitted.
  std::optional<Index> dim_H_without_degree0;
};

class NambuComplex {
 public:
  NambuComplex(HomNambuAlgebra alg, Coefficients coefficients, Symmetry symmetry = Symmetry::LastBlockSkew);

  const HomNambuAlgebra& algebra() const { return alg_; }
  /// Fundamental algebra on the block space (wedge or tensor).
  const HomLeibnizAlgebra& block_algebra() const { return blocks_; }
  Coefficients coefficients() const { return coefficients_; }
  Symmetry symmetry() const { return symmetry_; }
  int value_dim() const { return coefficients_ == Coefficients::Trivial ? 1 : alg_.dim(); }

  CochainSpace space(int p) const;

  /// Matrix of d^p : C^p -> C^{p+1}.
  SparseMatrix coboundary_matrix(int p) const;
  Cochain coboundary(const Cochain& phi) const;
  /// (d^p phi)(blocks, z) on basis arguments in any order, straight from the
  /// formula (no use of the symmetry of the output).
  Vector coboundary_value(const Cochain& phi, std::span<const int> blocks, int z) const;

  /// phi -> a o phi - phi o (a, ..., a) on C^p. Adjoint coefficients only.
  SparseMatrix equivariance_matrix(int p) const;
  /// Basis of the equivariant cochains (all of C^p for trivial coefficients).
  Subspace cochain_subspace(int p) const;
  /// d^p restricted to the equivariant cochains: coboundary_matrix(p) times
  /// the basis of cochain_subspace(p).
  SparseMatrix restricted_coboundary(int p) const;
  bool is_equivariant(const Cochain& phi) const;

  CohomologyReport cohomology(int p) const;

 private:
  struct Tables;
  Tables tables(int p) const;
  void emit(const Tables& t, int p, std::span<const int> blocks, int z, TermSink& sink) const;

  HomNambuAlgebra alg_;
  Coefficients coefficients_;
  Symmetry symmetry_;
  HomLeibnizAlgebra blocks_;
};

Matrix to_dense(const SparseMatrix& m);
SparseMatrix to_sparse(const Matrix& m);

}  // namespace nambu

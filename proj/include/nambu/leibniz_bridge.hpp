#pragma once

// Hom-Leibniz cohomology with adjoint coefficients and the lift from the
// Nambu complex on tensor blocks.
//
// For a Hom-Leibniz algebra (A, [.,.], a) and phi in Hom(A^{(x) p}, A):
//
//   (d phi)(a_1, .., a_{p+1}) = sum_{k=1}^p (-1)^{k-1} [a^{p-1} a_k, phi(a_1, .., ^a_k, .., a_{p+1})]
//                            + (-1)^{p+1} [phi(a_1, .., a_p), a^{p-1} a_{p+1}]
//                            + sum_{k<j} (-1)^k phi(a a_1, .., ^a_k, .., [a_k, a_j], .., a a_{p+1})
//
// with [a_k, a_j] in slot j, and d phi (a) = -[phi, a] in degree 0.
//
// With A = N^{(x) n-1} and a Nambu cochain phi of degree p on tensor blocks,
//
//   (D phi)(a_1, .., a_{p+1}) = sum_i a^p x^1 (x) .. (x) phi(a_1, .., a_p, x^i) (x) .. (x) a^p x^{n-1}
//
// for a_{p+1} = x^1 (x) .. (x) x^{n-1}, and d o D = D o delta.

#include "nambu/complex.hpp"
#include "nambu/exact_linalg.hpp"
#include "nambu/fundamental.hpp"

namespace nambu {

/// Element of Hom(A^{(x) p}, A): column k holds the value on the ordered
/// basis tuple with mixed-radix key k.
struct LeibnizCochain {
  int dim = 0;
  int degree = 0;
  Matrix values;

  LeibnizCochain() = default;
  LeibnizCochain(int dim, int degree, Matrix values);
  static LeibnizCochain zero(int dim, int degree);

  Vector value(std::span<const int> basis_tuple) const;
  /// Multilinear evaluation.
  Vector evaluate(std::span<const Vector> args) const;
};

LeibnizCochain leibniz_coboundary(const HomLeibnizAlgebra& leib, const LeibnizCochain& phi);
/// Matrix of d^p on the coordinates of LeibnizCochain::values (column-major).
Matrix leibniz_coboundary_matrix(const HomLeibnizAlgebra& leib, int p);

/// Cochains with a o phi = phi o (a (x) .. (x) a), in the coordinates of
/// leibniz_coboundary_matrix. d o d vanishes on them from degree 1 on; the
/// degree-0 rule ignores the twist, so d^1 d^0 = 0 needs a = id.
Subspace equivariant_leibniz_cochains(const HomLeibnizAlgebra& leib, int p);

/// The adjoint Nambu complex on tensor blocks, whose coboundary D intertwines.
NambuComplex tensor_complex(const HomNambuAlgebra& alg);

/// D phi for an N-valued cochain on tensor blocks.
LeibnizCochain delta_lift(const HomNambuAlgebra& alg, const Cochain& phi);
/// D phi for n = 3 from the two-term formula
///   a^p x_1 (x) phi(a_1, .., a_p, x_2) + phi(a_1, .., a_p, x_1) (x) a^p x_2.
LeibnizCochain delta_lift_ternary(const HomNambuAlgebra& alg, const Cochain& phi);

/// phi o (A, .., A, id) for a wedge-block cochain phi, A the antisymmetrizer.
Cochain pullback_to_tensor(const Cochain& phi);

struct SquareVerdict {
  bool holds = false;
  /// d(D phi) - D(delta phi).
  LeibnizCochain residual;
};

/// Compares d(D phi) with D(delta phi). `ternary` uses the n = 3 formula for D.
/// Throws PreconditionError when phi is not equivariant (the square fails
/// for such cochains once a != id).
SquareVerdict check_commuting_square(const HomNambuAlgebra& alg, const Cochain& phi, bool ternary = false);

}  // namespace nambu

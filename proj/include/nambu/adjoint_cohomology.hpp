#pragma once

// N-valued cochains, the deformation complex, and first-order deformations.
//
// Adjoint p-cochains have the symmetry of scalar ones and are equivariant:
// a(phi(x_1, ..., x_p, z)) = phi(a x_1, ..., a x_p, a z).

#include "nambu/complex.hpp"

#include <utility>

namespace nambu {

/// Zero N-valued cochain of degree p on alg.
Cochain adjoint_cochain(const HomNambuAlgebra& alg, int p, Symmetry symmetry = Symmetry::LastBlockSkew);

/// delta^p psi. Throws PreconditionError("... not equivariant at ...") when
/// psi is not equivariant, DimensionError when it does not live on alg.
Cochain adjoint_coboundary(const HomNambuAlgebra& alg, const Cochain& psi);

/// Cohomology inside the equivariant cochains. In degree 1 the coboundaries
/// come from equivariant degree-0 maps; dim_H_without_degree0 reports H^1
/// when they are not admitted.
CohomologyReport adjoint_cohomology(const HomNambuAlgebra& alg, int p, Symmetry symmetry = Symmetry::LastBlockSkew);

/// (delta^1 psi)(x, y, z) evaluated directly from
///   psi(a x, L(y) z) - psi(a y, L(x) z) - psi([x, y]_a, a z)
///   + L(a x) psi(y, z) - L(a y) psi(x, z) - sum_k [a y^1, .., psi(x, y^k), .., a y^{n-1}, a z]
/// for x, y in ^{n-1} N (wedge coordinates, y = y^1 ^ .. ^ y^{n-1} expanded
/// multilinearly) and z in N.
Vector adjoint_degree1_coboundary(const HomNambuAlgebra& alg, const Cochain& psi, const Vector& x, const Vector& y,
                                  const Vector& z);

/// Element v + t w of N[t]/(t^2).
struct DualVector {
  Vector value;
  Vector t;
};

/// [args]_t = [args] + t psi(args) with t^2 = 0, for a degree-1 cochain psi.
/// Returns (value, t-coefficient).
std::pair<Vector, Vector> dual_number_bracket(const HomNambuAlgebra& alg, const Cochain& psi,
                                              std::span<const DualVector> args);
/// Same on plain vectors.
std::pair<Vector, Vector> dual_number_bracket(const HomNambuAlgebra& alg, const Cochain& psi,
                                              std::span<const Vector> args);

/// t-coefficient of [a x_1, .., a x_{n-1}, [y_1, .., y_n]_t]_t - sum_i [a y_1, .., [x, y_i]_t, .., a y_n]_t.
Vector deformation_residual(const HomNambuAlgebra& alg, const Cochain& psi, std::span<const Vector> x,
                            std::span<const Vector> y);

struct DeformationVerdict {
  /// delta^1 psi = 0.
  bool cocycle = false;
  /// The t-linear Hom-Nambu residual vanishes on all basis tuples.
  bool residual_vanishes = false;
  bool agree() const { return cocycle == residual_vanishes; }
  /// First basis tuple with a nonzero residual, if any.
  std::optional<Violation> witness;
};

DeformationVerdict check_infinitesimal_deformation(const HomNambuAlgebra& alg, const Cochain& psi);

/// Random equivariant cochain: a combination of the equivariant basis with
/// coefficients drawn by `draw()`.
template <class Draw>
Cochain random_equivariant_cochain(const NambuComplex& complex, int p, Draw&& draw) {
  const Subspace k = complex.cochain_subspace(p);
  Vector c(k.dim());
  for (Index i = 0; i < c.size(); ++i) c(i) = draw();
  return Cochain(complex.space(p), k.vectors() * c);
}

}  // namespace nambu

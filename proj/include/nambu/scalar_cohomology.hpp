#pragma once

// Scalar cochains, their cohomology, and central extensions by one generator.
//
// A scalar p-cochain is a Cochain of a trivial-coefficient NambuComplex: a
// covector for p = 0, an n-form for p = 1, and in general a function of p
// blocks and z that is skew in each block and in (x_p, z).

#include "nambu/complex.hpp"

namespace nambu {

/// delta^p phi. Throws DimensionError when phi does not live on alg.
Cochain scalar_coboundary(const HomNambuAlgebra& alg, const Cochain& phi);

CohomologyReport scalar_cohomology(const HomNambuAlgebra& alg, int p, Symmetry symmetry = Symmetry::LastBlockSkew);

/// Zero scalar cochain of degree p on alg.
Cochain scalar_cochain(const HomNambuAlgebra& alg, int p, Symmetry symmetry = Symmetry::LastBlockSkew);

/// (delta^1 phi)(x, y, z) = phi(a x, L(y) z) - phi(a y, L(x) z) - phi([x, y]_a, a z)
/// for x, y in ^{n-1} N (wedge coordinates) and z in N, evaluated directly.
Rational scalar_degree1_coboundary(const HomNambuAlgebra& alg, const Cochain& phi, const Vector& x, const Vector& y,
                                   const Vector& z);

struct CentralExtension {
  /// Basis e_1, ..., e_d, e with e central.
  HomNambuAlgebra algebra;
  /// Whether beta is an endomorphism of the extended bracket.
  bool twist_multiplicative = false;
};

/// N + Ke with [x_1, ..., x_n]~ = [x_1, ..., x_n] + phi(x_1, ..., x_n) e, e central,
/// and beta(x) = a(x) + lambda(x) e, beta(e) = c e. `lambda` may be empty
/// (zero). Throws PreconditionError("... not a cocycle at ...") when
/// delta^1 phi != 0.
CentralExtension central_extension(const HomNambuAlgebra& alg, const Cochain& phi, const Vector& lambda = Vector(),
                                   const Rational& c = Rational(1));

/// For phi = delta^0 psi, the basis change f(x) = x + psi(x) e identifies
/// central_extension(alg, phi, lambda, c) with the extension by the zero
/// cocycle and twist covector lambda + psi o a - c psi.
struct Trivialization {
  Matrix map;
  HomNambuAlgebra target;
};
Trivialization coboundary_trivialization(const HomNambuAlgebra& alg, const Vector& psi,
                                         const Vector& lambda = Vector(), const Rational& c = Rational(1));

/// For a Filippov algebra with the given signs, twisted by an invertible
/// morphism a, the 0-cochain psi with delta^0 psi = phi for a 1-cochain phi:
/// psi(a e_m) = -(-1)^m eps_m phi(e_1, .., ^e_m, .., e_{n+1}) (0-based m).
Vector filippov_potential(const std::vector<int>& signs, const Matrix& twist, const Cochain& phi);

}  // namespace nambu

#include "nambu/scalar_cohomology.hpp"

#include "nambu/errors.hpp"

#include <sstream>

namespace nambu {

namespace {

void require_on(const HomNambuAlgebra& alg, const Cochain& phi) {
  const auto& s = phi.space;
  if (s.dim() != alg.dim() || s.arity() != alg.arity() || s.value_dim() != 1)
    throw DimensionError("scalar cochain does not match the algebra");
}

std::string format_arguments(const CochainSpace& s, Index basis) {
  const auto a = s.arguments(basis);
  std::ostringstream os;
  for (int b : a.blocks) {
    os << '(';
    const Tuple& t = s.block_tuples()[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
    os << ")";
  }
  os << '(' << a.z + 1 << ')';
  return os.str();
}

Vector or_zero(const Vector& v, int d) { return v.size() == 0 ? Vector(Vector::Zero(d)) : v; }

}  // namespace

Cochain scalar_cochain(const HomNambuAlgebra& alg, int p, Symmetry symmetry) {
  return Cochain::zero(CochainSpace(alg.dim(), alg.arity(), p, symmetry, 1));
}

Cochain scalar_coboundary(const HomNambuAlgebra& alg, const Cochain& phi) {
  require_on(alg, phi);
  return NambuComplex(alg, Coefficients::Trivial, phi.space.symmetry()).coboundary(phi);
}

CohomologyReport scalar_cohomology(const HomNambuAlgebra& alg, int p, Symmetry symmetry) {
  return NambuComplex(alg, Coefficients::Trivial, symmetry).cohomology(p);
}

Rational scalar_degree1_coboundary(const HomNambuAlgebra& alg, const Cochain& phi, const Vector& x, const Vector& y,
                                   const Vector& z) {
  require_on(alg, phi);
  if (phi.space.degree() != 1) throw DimensionError("expected a 1-cochain");
  const Matrix aw = wedge_power(alg.twist(), alg.arity() - 1);
  const Vector ax = aw * x;
  const Vector ay = aw * y;
  const Vector az = alg.twist() * z;
  const auto at = [&](const Vector& b, const Vector& w) {
    return phi.evaluate(std::span<const Vector>(&b, 1), w)(0);
  };
  return at(ax, L_action(alg, y, z)) - at(ay, L_action(alg, x, z)) - at(fundamental_bracket(alg, x, y), az);
}

CentralExtension central_extension(const HomNambuAlgebra& alg, const Cochain& phi, const Vector& lambda,
                                   const Rational& c) {
  require_on(alg, phi);
  if (phi.space.degree() != 1 || phi.space.symmetry() == Symmetry::Tensor)
    throw DimensionError("central_extension: expected a skew 1-cochain");
  const int d = alg.dim();
  const int n = alg.arity();
  const Vector lam = or_zero(lambda, d);
  if (lam.size() != d) throw DimensionError("central_extension: lambda must have length d");

  const NambuComplex complex(alg, Coefficients::Trivial, phi.space.symmetry());
  const Cochain dphi = complex.coboundary(phi);
  for (Index k = 0; k < dphi.values.size(); ++k)
    if (!dphi.values(k).is_zero())
      throw PreconditionError("central_extension: not a cocycle at " + format_arguments(dphi.space, k));

  StructureTensor s(d + 1, n);
  const auto& tuples = alg.structure().tuples();
  for (int k = 0; k < tuples.size(); ++k) {
    const Tuple& t = tuples.tuple(k);
    Vector v(d + 1);
    v.head(d) = alg.structure().coefficients().col(k);
    const auto [sign, idx] = phi.space.locate_flat(t);
    v(d) = sign == 0 ? Rational(0) : Rational(sign) * phi.values(idx);
    s.set(t, v);
  }
  Matrix beta = Matrix::Zero(d + 1, d + 1);
  beta.topLeftCorner(d, d) = alg.twist();
  beta.block(d, 0, 1, d) = lam.transpose();
  beta(d, d) = c;

  CentralExtension out;
  out.algebra = HomNambuAlgebra(std::move(s), std::move(beta)).validated();
  out.twist_multiplicative = out.algebra.flags().multiplicative_checked;
  return out;
}

Trivialization coboundary_trivialization(const HomNambuAlgebra& alg, const Vector& psi, const Vector& lambda,
                                         const Rational& c) {
  const int d = alg.dim();
  if (psi.size() != d) throw DimensionError("trivialization: psi must have length d");
  const Vector lam = or_zero(lambda, d);
  Trivialization t;
  t.map = Matrix::Identity(d + 1, d + 1);
  t.map.block(d, 0, 1, d) = psi.transpose();
  const Vector lam0 = lam + alg.twist().transpose() * psi - c * psi;
  t.target = central_extension(alg, scalar_cochain(alg, 1), lam0, c).algebra;
  return t;
}

Vector filippov_potential(const std::vector<int>& signs, const Matrix& twist, const Cochain& phi) {
  const int d = static_cast<int>(signs.size());
  const int n = d - 1;
  if (phi.space.dim() != d || phi.space.arity() != n || phi.space.degree() != 1 || phi.space.value_dim() != 1)
    throw DimensionError("filippov_potential: expected a scalar 1-cochain on the Filippov algebra");
  if (twist.rows() != d || twist.cols() != d) throw DimensionError("filippov_potential: twist must be d x d");
  // rhs_m = psi(a e_m)
  Vector rhs(d);
  for (int m = 0; m < d; ++m) {
    Tuple omitted;
    for (int i = 0; i < d; ++i)
      if (i != m) omitted.push_back(i);
    const auto [sign, idx] = phi.space.locate_flat(omitted);
    const Rational value = sign == 0 ? Rational(0) : Rational(sign) * phi.values(idx);
    rhs(m) = (m % 2 == 0 ? -1 : 1) * signs[static_cast<std::size_t>(m)] * value;
  }
  const auto psi = solve(Matrix(twist.transpose()), rhs);
  if (!psi) throw PreconditionError("filippov_potential: twist is not invertible");
  return *psi;
}

}  // namespace nambu

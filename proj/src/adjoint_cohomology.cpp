#include "nambu/adjoint_cohomology.hpp"

#include "nambu/errors.hpp"

#include <sstream>

namespace nambu {

namespace {

void require_on(const HomNambuAlgebra& alg, const Cochain& psi) {
  const auto& s = psi.space;
  if (s.dim() != alg.dim() || s.arity() != alg.arity() || s.value_dim() != alg.dim())
    throw DimensionError("N-valued cochain does not match the algebra");
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

// First canonical argument tuple where the value block of v is nonzero.
std::optional<Index> first_nonzero_block(const Vector& v, int vd) {
  for (Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) return k / vd;
  return std::nullopt;
}

Vector block_of(const Cochain& psi, std::span<const Vector> args) {
  const int m = psi.space.arity() - 1;
  const auto head = args.first(static_cast<std::size_t>(m));
  return psi.space.symmetry() == Symmetry::Tensor ? tensor_of(head, psi.space.dim()) : wedge_of(head, psi.space.dim());
}

Vector psi_of(const Cochain& psi, std::span<const Vector> args) {
  const Vector b = block_of(psi, args);
  return psi.evaluate(std::span<const Vector>(&b, 1), args.back());
}

}  // namespace

Cochain adjoint_cochain(const HomNambuAlgebra& alg, int p, Symmetry symmetry) {
  return Cochain::zero(CochainSpace(alg.dim(), alg.arity(), p, symmetry, alg.dim()));
}

Cochain adjoint_coboundary(const HomNambuAlgebra& alg, const Cochain& psi) {
  require_on(alg, psi);
  const NambuComplex complex(alg, Coefficients::Adjoint, psi.space.symmetry());
  const int p = psi.space.degree();
  if (const auto bad = first_nonzero_block(Vector(complex.equivariance_matrix(p) * psi.values), alg.dim()))
    throw PreconditionError("adjoint_coboundary: not equivariant at " + format_arguments(psi.space, *bad));
  Cochain out = complex.coboundary(psi);
  if (const auto bad = first_nonzero_block(Vector(complex.equivariance_matrix(p + 1) * out.values), alg.dim()))
    throw std::logic_error("adjoint_coboundary: output not equivariant at " + format_arguments(out.space, *bad));
  return out;
}

CohomologyReport adjoint_cohomology(const HomNambuAlgebra& alg, int p, Symmetry symmetry) {
  return NambuComplex(alg, Coefficients::Adjoint, symmetry).cohomology(p);
}

Vector adjoint_degree1_coboundary(const HomNambuAlgebra& alg, const Cochain& psi, const Vector& x, const Vector& y,
                                  const Vector& z) {
  require_on(alg, psi);
  if (psi.space.degree() != 1 || psi.space.symmetry() == Symmetry::Tensor)
    throw DimensionError("expected a skew N-valued 1-cochain");
  const int d = alg.dim();
  const int m = alg.arity() - 1;
  const Matrix& a = alg.twist();
  const Matrix aw = wedge_power(a, m);
  const Vector ax = aw * x;
  const Vector ay = aw * y;
  const Vector az = a * z;
  const auto at = [&](const Vector& b, const Vector& w) { return psi.evaluate(std::span<const Vector>(&b, 1), w); };

  Vector out = at(ax, L_action(alg, y, z)) - at(ay, L_action(alg, x, z)) - at(fundamental_bracket(alg, x, y), az) +
               L_action(alg, ax, at(y, z)) - L_action(alg, ay, at(x, z));
  const TupleIndex wedge(d, m);
  std::vector<Vector> args(static_cast<std::size_t>(m + 1));
  for (int b = 0; b < wedge.size(); ++b) {
    if (y(b).is_zero()) continue;
    const Tuple& t = wedge.tuple(b);
    for (int k = 0; k < m; ++k) {
      for (int s = 0; s < m; ++s) args[static_cast<std::size_t>(s)] = a.col(t[static_cast<std::size_t>(s)]);
      args[static_cast<std::size_t>(k)] = at(x, unit_vector(d, t[static_cast<std::size_t>(k)]));
      args[static_cast<std::size_t>(m)] = az;
      out -= y(b) * alg.bracket(args);
    }
  }
  return out;
}

std::pair<Vector, Vector> dual_number_bracket(const HomNambuAlgebra& alg, const Cochain& psi,
                                              std::span<const DualVector> args) {
  require_on(alg, psi);
  if (psi.space.degree() != 1) throw DimensionError("dual_number_bracket: psi must have degree 1");
  if (static_cast<int>(args.size()) != alg.arity()) throw DimensionError("dual_number_bracket: wrong number of arguments");
  std::vector<Vector> values;
  for (const auto& v : args) values.push_back(v.value);
  const Vector value = alg.bracket(values);
  Vector t = psi_of(psi, values);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].t.size() == 0 || is_zero(args[i].t)) continue;
    std::vector<Vector> shifted = values;
    shifted[i] = args[i].t;
    t += alg.bracket(shifted);
  }
  return {value, t};
}

std::pair<Vector, Vector> dual_number_bracket(const HomNambuAlgebra& alg, const Cochain& psi,
                                              std::span<const Vector> args) {
  std::vector<DualVector> dual;
  for (const auto& v : args) dual.push_back({v, Vector()});
  return dual_number_bracket(alg, psi, dual);
}

Vector deformation_residual(const HomNambuAlgebra& alg, const Cochain& psi, std::span<const Vector> x,
                            std::span<const Vector> y) {
  const int n = alg.arity();
  if (static_cast<int>(x.size()) != n - 1 || static_cast<int>(y.size()) != n)
    throw DimensionError("deformation_residual: expected n-1 and n arguments");
  const Matrix& a = alg.twist();
  const auto lift = [](const std::pair<Vector, Vector>& p) { return DualVector{p.first, p.second}; };

  std::vector<DualVector> args;
  for (const auto& v : x) args.push_back({a * v, Vector()});
  args.push_back(lift(dual_number_bracket(alg, psi, y)));
  Vector out = dual_number_bracket(alg, psi, args).second;

  for (int i = 0; i < n; ++i) {
    std::vector<Vector> inner(x.begin(), x.end());
    inner.push_back(y[static_cast<std::size_t>(i)]);
    std::vector<DualVector> outer;
    for (int j = 0; j < n; ++j)
      outer.push_back(j == i ? lift(dual_number_bracket(alg, psi, inner)) : DualVector{a * y[static_cast<std::size_t>(j)], Vector()});
    out -= dual_number_bracket(alg, psi, outer).second;
  }
  return out;
}

DeformationVerdict check_infinitesimal_deformation(const HomNambuAlgebra& alg, const Cochain& psi) {
  DeformationVerdict v;
  v.cocycle = is_zero(adjoint_coboundary(alg, psi).values);
  v.residual_vanishes = true;
  const int d = alg.dim();
  const int n = alg.arity();
  if (n - 1 > d) return v;
  const TupleIndex xs(d, n - 1);
  if (n > d) return v;
  const TupleIndex ys(d, n);
  for (const auto& xt : xs.tuples()) {
    std::vector<Vector> x;
    for (int i : xt) x.push_back(unit_vector(d, i));
    for (const auto& yt : ys.tuples()) {
      std::vector<Vector> y;
      for (int i : yt) y.push_back(unit_vector(d, i));
      Vector r = deformation_residual(alg, psi, x, y);
      if (!is_zero(r)) {
        v.residual_vanishes = false;
        v.witness = Violation{"first-order Hom-Nambu identity", {xt, yt}, std::move(r)};
        return v;
      }
    }
  }
  return v;
}

}  // namespace nambu

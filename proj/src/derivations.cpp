#include "nambu/derivations.hpp"

#include "nambu/errors.hpp"
#include "nambu/multilinear.hpp"

namespace nambu {

namespace {

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
  return out;
}

Vector matrix_as_residual(const Matrix& m) { return flatten(m); }

}  // namespace

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) v(r + c * m.rows()) = m(r, c);
  return v;
}

Matrix unflatten(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw DimensionError("unflatten: wrong length");
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = v(r + c * rows);
  return m;
}

std::vector<Violation> check_derivation(const HomNambuAlgebra& alg, const Matrix& d, int level) {
  if (level < -1) throw std::invalid_argument("derivation level must be at least -1");
  const int dim = alg.dim();
  if (d.rows() != dim || d.cols() != dim) throw DimensionError("derivation must be d x d");
  std::vector<Violation> out;
  const Matrix comm = d * alg.twist() - alg.twist() * d;
  if (!is_zero(comm)) out.push_back({"commutes with twist", {}, matrix_as_residual(comm)});

  const auto ak = columns(alg.twist_power(level));
  const auto& s = alg.structure();
  std::vector<Vector> args(static_cast<std::size_t>(alg.arity()));
  for (const auto& t : s.tuples().tuples()) {
    Vector residual = d * s.basis_value(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) args[j] = ak[static_cast<std::size_t>(t[j])];
      args[i] = d.col(t[i]);
      residual -= s.evaluate(args);
    }
    if (!is_zero(residual)) out.push_back({"derivation rule", {t}, residual});
  }
  return out;
}

Subspace derivation_space(const HomNambuAlgebra& alg, int level) {
  if (level < -1) throw std::invalid_argument("derivation level must be at least -1");
  const int d = alg.dim();
  const int n = alg.arity();
  const auto& s = alg.structure();
  const Matrix& a = alg.twist();
  const Matrix ak = alg.twist_power(level);
  const Index unknowns = static_cast<Index>(d) * d;
  auto var = [d](int r, int c) { return static_cast<Index>(r) + static_cast<Index>(c) * d; };

  const Index rule_rows = static_cast<Index>(s.tuples().size()) * d;
  Matrix system = Matrix::Zero(unknowns + rule_rows, unknowns);
  // (D a - a D)(i, j)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Index row = var(i, j);
      for (int m = 0; m < d; ++m) {
        system(row, var(i, m)) += a(m, j);
        system(row, var(m, j)) -= a(i, m);
      }
    }
  // D[e_I] - sum_i [a^k e_I1, .., D e_Ii, .., a^k e_In]
  std::vector<Vector> args(static_cast<std::size_t>(n));
  Index row0 = unknowns;
  for (const auto& t : s.tuples().tuples()) {
    const Vector value = s.basis_value(t);
    for (int c = 0; c < d; ++c)
      if (!value(c).is_zero())
        for (int r = 0; r < d; ++r) system(row0 + r, var(r, c)) += value(c);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) args[j] = ak.col(t[j]);
      for (int m = 0; m < d; ++m) {
        args[i] = unit_vector(d, m);
        const Vector v = s.evaluate(args);
        for (int r = 0; r < d; ++r)
          if (!v(r).is_zero()) system(row0 + r, var(m, t[i])) -= v(r);
      }
    }
    row0 += d;
  }
  return kernel_basis(system);
}

std::vector<Matrix> derivation_basis(const HomNambuAlgebra& alg, int level) {
  const auto space = derivation_space(alg, level);
  std::vector<Matrix> out;
  for (Index i = 0; i < space.dim(); ++i) out.push_back(unflatten(space.vector(i), alg.dim(), alg.dim()));
  return out;
}

Derivation inner_derivation(const HomNambuAlgebra& alg, std::span<const Vector> xs, int k) {
  if (k < 0) throw std::invalid_argument("inner_derivation: k must be nonnegative");
  if (static_cast<int>(xs.size()) != alg.arity() - 1) throw DimensionError("inner_derivation: need n-1 vectors");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].size() != alg.dim()) throw DimensionError("inner_derivation: vector length does not match dimension");
    if (alg.twist() * xs[i] != xs[i])
      throw PreconditionError("fixed-point precondition violated: alpha(x_" + std::to_string(i + 1) + ") != x_" +
                              std::to_string(i + 1));
  }
  Derivation out{ad_matrix(alg, xs) * alg.twist_power(k), k + 1};
  if (!is_derivation(alg, out.matrix, out.level))
    throw std::logic_error("inner_derivation: result is not a derivation");
  return out;
}

Derivation derivation_commutator(const HomNambuAlgebra& alg, const Derivation& a, const Derivation& b) {
  const int level = a.level + b.level;
  if (level < -1) throw std::invalid_argument("level underflow");
  if (!is_derivation(alg, a.matrix, a.level)) throw PreconditionError("first argument is not a derivation at its level");
  if (!is_derivation(alg, b.matrix, b.level)) throw PreconditionError("second argument is not a derivation at its level");
  Derivation out{a.matrix * b.matrix - b.matrix * a.matrix, level};
  if (!is_derivation(alg, out.matrix, out.level))
    throw std::logic_error("derivation_commutator: result is not a derivation");
  return out;
}

Matrix RepresentationMap::operator()(std::span<const Vector> xs) const {
  if (static_cast<int>(xs.size()) != arity - 1) throw DimensionError("representation: need n-1 arguments");
  const TupleIndex idx = tuples();
  Matrix out = Matrix::Zero(module_dim, module_dim);
  for_each_skew_term(xs, [&](const Tuple& t, const Rational& w) { out += w * rho[static_cast<std::size_t>(idx.index(t))]; });
  return out;
}

RepresentationMap adjoint_representation(const HomNambuAlgebra& alg) {
  RepresentationMap rep{alg.dim(), alg.arity(), alg.dim(), {}, alg.twist()};
  const TupleIndex idx = rep.tuples();
  for (const auto& t : idx.tuples()) {
    std::vector<Vector> xs;
    for (int i : t) xs.push_back(unit_vector(alg.dim(), i));
    rep.rho.push_back(ad_matrix(alg, xs));
  }
  return rep;
}

RepresentationMap zero_representation(const HomNambuAlgebra& alg, int module_dim, const Matrix& nu) {
  RepresentationMap rep{alg.dim(), alg.arity(), module_dim, {}, nu};
  rep.rho.assign(static_cast<std::size_t>(rep.tuples().size()), Matrix::Zero(module_dim, module_dim));
  return rep;
}

std::vector<Violation> check_representation(const HomNambuAlgebra& alg, const RepresentationMap& rep) {
  if (rep.algebra_dim != alg.dim() || rep.arity != alg.arity()) throw DimensionError("representation does not match algebra");
  if (rep.nu.rows() != rep.module_dim || rep.nu.cols() != rep.module_dim) throw DimensionError("nu must act on the module");
  std::vector<Violation> out;
  const int d = alg.dim();
  const TupleIndex idx = rep.tuples();
  const Matrix& a = alg.twist();
  std::vector<Vector> ax, ay, args;
  for (const auto& x : idx.tuples()) {
    std::vector<Vector> xs;
    for (int i : x) xs.push_back(unit_vector(d, i));
    const Matrix ad_x = ad_matrix(alg, xs);
    ax.clear();
    for (int i : x) ax.emplace_back(a.col(i));
    for (const auto& y : idx.tuples()) {
      ay.clear();
      for (int i : y) ay.emplace_back(a.col(i));
      Matrix residual = rep(ax) * rep.rho[static_cast<std::size_t>(idx.index(y))] -
                        rep(ay) * rep.rho[static_cast<std::size_t>(idx.index(x))];
      for (std::size_t i = 0; i < y.size(); ++i) {
        args = ay;
        args[i] = ad_x.col(y[i]);
        residual -= rep(args) * rep.nu;
      }
      if (!is_zero(residual)) out.push_back({"representation identity", {x, y}, flatten(residual)});
    }
  }
  return out;
}

bool check_rep_equivalence(const RepresentationMap& rep, const RepresentationMap& other, const Matrix& f) {
  if (rep.module_dim != other.module_dim || rep.algebra_dim != other.algebra_dim || rep.arity != other.arity)
    throw DimensionError("representations are not comparable");
  if (f.rows() != rep.module_dim || f.cols() != rep.module_dim) throw DimensionError("f must act on the module");
  if (rank(f) != f.rows()) throw PreconditionError("singular f");
  for (std::size_t k = 0; k < rep.rho.size(); ++k)
    if (f * rep.rho[k] != other.rho[k] * f) return false;
  return true;
}

}  // namespace nambu

#include "nambu/fundamental.hpp"

#include "nambu/errors.hpp"
#include "nambu/multilinear.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace nambu {

namespace {

void tensor_terms(std::span<const Vector> factors, std::size_t pos, std::int64_t key, const Rational& w, int dim,
                  Vector& out) {
  if (pos == factors.size()) {
    out(key) += w;
    return;
  }
  const Vector& f = factors[pos];
  for (int i = 0; i < dim; ++i)
    if (!f(i).is_zero()) tensor_terms(factors, pos + 1, key * dim + i, w * f(i), dim, out);
}

std::vector<Vector> basis_factors(const Tuple& t, int dim) {
  std::vector<Vector> out;
  for (int i : t) out.push_back(unit_vector(dim, i));
  return out;
}

/// Shared construction: the basis of the space is either increasing or
/// ordered (n-1)-tuples.
HomLeibnizAlgebra build_on(const HomNambuAlgebra& alg, bool tensor) {
  const int d = alg.dim();
  const int m = alg.arity() - 1;
  std::vector<Tuple> basis;
  if (tensor) {
    const TensorIndex idx(d, m);
    for (std::int64_t k = 0; k < idx.size(); ++k) basis.push_back(idx.tuple(k));
  } else {
    basis = TupleIndex(d, m).tuples();
  }
  const int D = static_cast<int>(basis.size());
  auto coords = [&](std::span<const Vector> f) { return tensor ? tensor_of(f, d) : wedge_of(f, d); };

  std::vector<Matrix> ad(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) ad[a] = ad_matrix(alg, basis_factors(basis[a], d));

  Matrix constants = Matrix::Zero(D, static_cast<Index>(D) * D);
  std::vector<Vector> factors(static_cast<std::size_t>(m));
  for (int a = 0; a < D; ++a) {
    if (is_zero(ad[static_cast<std::size_t>(a)])) continue;
    for (int b = 0; b < D; ++b) {
      const Tuple& y = basis[static_cast<std::size_t>(b)];
      Vector v = Vector::Zero(D);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) factors[static_cast<std::size_t>(j)] = alg.twist().col(y[static_cast<std::size_t>(j)]);
        factors[static_cast<std::size_t>(i)] = ad[static_cast<std::size_t>(a)].col(y[static_cast<std::size_t>(i)]);
        v += coords(factors);
      }
      constants.col(static_cast<Index>(a) * D + b) = v;
    }
  }
  Matrix twist = tensor ? tensor_power(alg.twist(), m) : wedge_power(alg.twist(), m);
  return HomLeibnizAlgebra(std::move(constants), std::move(twist));
}

}  // namespace

Vector wedge_of(std::span<const Vector> factors, int dim) {
  const TupleIndex idx(dim, static_cast<int>(factors.size()));
  Vector out = Vector::Zero(idx.size());
  if (idx.size() == 0) return out;
  for_each_skew_term(factors, [&](const Tuple& t, const Rational& w) { out(idx.index(t)) += w; });
  return out;
}

Vector tensor_of(std::span<const Vector> factors, int dim) {
  Vector out = Vector::Zero(int_pow(dim, static_cast<int>(factors.size())));
  tensor_terms(factors, 0, 0, Rational(1), dim, out);
  return out;
}

Matrix wedge_power(const Matrix& a, int m) {
  const int d = static_cast<int>(a.rows());
  const TupleIndex idx(d, m);
  Matrix out(idx.size(), idx.size());
  std::vector<Vector> f(static_cast<std::size_t>(m));
  for (int k = 0; k < idx.size(); ++k) {
    for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = a.col(idx.tuple(k)[static_cast<std::size_t>(i)]);
    out.col(k) = wedge_of(f, d);
  }
  return out;
}

Matrix tensor_power(const Matrix& a, int m) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < m; ++i) out = Matrix(Eigen::kroneckerProduct(out, a));
  return out;
}

Matrix antisymmetrizer(int dim, int m) {
  const TupleIndex w(dim, m);
  const TensorIndex t(dim, m);
  Matrix out = Matrix::Zero(w.size(), t.size());
  for (std::int64_t k = 0; k < t.size(); ++k) {
    Tuple tup = t.tuple(k);
    const int s = sort_with_sign(tup);
    if (s != 0) out(w.index(tup), k) = s;
  }
  return out;
}

Vector L_action(const HomNambuAlgebra& alg, const Vector& x, const Vector& z) { return L_matrix(alg, x) * z; }

Matrix L_matrix(const HomNambuAlgebra& alg, const Vector& x) {
  const int d = alg.dim();
  const TupleIndex idx(d, alg.arity() - 1);
  if (x.size() != idx.size()) throw DimensionError("L: wedge element has the wrong length");
  Matrix out = Matrix::Zero(d, d);
  for (int k = 0; k < idx.size(); ++k)
    if (!x(k).is_zero()) out += x(k) * ad_matrix(alg, basis_factors(idx.tuple(k), d));
  return out;
}

Vector fundamental_bracket(const HomNambuAlgebra& alg, const Vector& x, const Vector& y) {
  const int d = alg.dim();
  const int m = alg.arity() - 1;
  const TupleIndex idx(d, m);
  if (y.size() != idx.size()) throw DimensionError("fundamental_bracket: wedge element has the wrong length");
  const Matrix L = L_matrix(alg, x);
  Vector out = Vector::Zero(idx.size());
  std::vector<Vector> f(static_cast<std::size_t>(m));
  for (int k = 0; k < idx.size(); ++k) {
    if (y(k).is_zero()) continue;
    const Tuple& t = idx.tuple(k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) f[static_cast<std::size_t>(j)] = alg.twist().col(t[static_cast<std::size_t>(j)]);
      f[static_cast<std::size_t>(i)] = L.col(t[static_cast<std::size_t>(i)]);
      out += y(k) * wedge_of(f, d);
    }
  }
  return out;
}

HomLeibnizAlgebra::HomLeibnizAlgebra(Matrix constants, Matrix twist)
    : constants_(std::move(constants)), twist_(std::move(twist)) {
  const Index D = twist_.rows();
  if (twist_.cols() != D || constants_.rows() != D || constants_.cols() != D * D)
    throw DimensionError("Leibniz algebra: constants must be D x D^2 and the twist D x D");
  left_.resize(static_cast<std::size_t>(D));
  for (Index a = 0; a < D; ++a) left_[static_cast<std::size_t>(a)] = constants_.middleCols(a * D, D);
}

Vector HomLeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  const int D = dim();
  if (x.size() != D || y.size() != D) throw DimensionError("Leibniz bracket: wrong length");
  Vector out = Vector::Zero(D);
  for (int a = 0; a < D; ++a) {
    if (x(a).is_zero()) continue;
    for (int b = 0; b < D; ++b)
      if (!y(b).is_zero()) out += (x(a) * y(b)) * constants_.col(static_cast<Index>(a) * D + b);
  }
  return out;
}

Matrix HomLeibnizAlgebra::left_matrix(int a) const { return left_[static_cast<std::size_t>(a)]; }

Matrix HomLeibnizAlgebra::left_matrix(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("Leibniz bracket: wrong length");
  Matrix out = Matrix::Zero(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    if (!x(a).is_zero()) out += x(a) * left_[static_cast<std::size_t>(a)];
  return out;
}

HomLeibnizAlgebra build_fundamental(const HomNambuAlgebra& alg) { return build_on(alg, false); }

HomLeibnizAlgebra build_tensor_fundamental(const HomNambuAlgebra& alg) { return build_on(alg, true); }

std::vector<Violation> check_hom_leibniz(const HomLeibnizAlgebra& leib) {
  // As maps of z: L(a e_a) L(e_b) - L([e_a,e_b]) a - L(a e_b) L(e_a) = 0.
  const int D = leib.dim();
  std::vector<Matrix> L_alpha(static_cast<std::size_t>(D));
  for (int a = 0; a < D; ++a) L_alpha[static_cast<std::size_t>(a)] = leib.left_matrix(Vector(leib.twist().col(a)));
  std::vector<Violation> out;
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      const Matrix r = L_alpha[static_cast<std::size_t>(a)] * leib.left_matrix(b) -
                       leib.left_matrix(leib.basis_bracket(a, b)) * leib.twist() -
                       L_alpha[static_cast<std::size_t>(b)] * leib.left_matrix(a);
      for (int z = 0; z < D; ++z)
        if (!is_zero(Vector(r.col(z)))) {
          out.push_back({"hom-leibniz identity", {{a}, {b}, {z}}, r.col(z)});
          break;
        }
    }
  return out;
}

std::vector<Violation> check_lemma_3_1(const HomNambuAlgebra& alg) {
  const int d = alg.dim();
  const int m = alg.arity() - 1;
  const TupleIndex idx(d, m);
  const Matrix at = wedge_power(alg.twist(), m);
  std::vector<Matrix> L(static_cast<std::size_t>(idx.size())), La(static_cast<std::size_t>(idx.size()));
  for (int k = 0; k < idx.size(); ++k) {
    L[static_cast<std::size_t>(k)] = L_matrix(alg, unit_vector(idx.size(), k));
    La[static_cast<std::size_t>(k)] = L_matrix(alg, Vector(at.col(k)));
  }
  std::vector<Violation> out;
  for (int a = 0; a < idx.size(); ++a)
    for (int b = 0; b < idx.size(); ++b) {
      const Vector xy = fundamental_bracket(alg, unit_vector(idx.size(), a), unit_vector(idx.size(), b));
      const Matrix r = L_matrix(alg, xy) * alg.twist() - La[static_cast<std::size_t>(a)] * L[static_cast<std::size_t>(b)] +
                       La[static_cast<std::size_t>(b)] * L[static_cast<std::size_t>(a)];
      for (int z = 0; z < d; ++z)
        if (!is_zero(Vector(r.col(z)))) {
          out.push_back({"L-bracket compatibility", {idx.tuple(a), idx.tuple(b), {z}}, r.col(z)});
          break;
        }
    }
  return out;
}

}  // namespace nambu

#include "nambu/leibniz_bridge.hpp"

#include "nambu/errors.hpp"
#include "nambu/parallel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace nambu {

namespace {

// Multilinear evaluation of a column table over sparse arguments.
Vector eval_sparse(const LeibnizCochain& phi, std::span<const SparseVec> args) {
  Vector out = Vector::Zero(phi.dim);
  const auto rec = [&](auto& self, std::size_t pos, Index key, const Rational& w) -> void {
    if (pos == args.size()) {
      out += w * phi.values.col(key);
      return;
    }
    for (const auto& [i, c] : args[pos]) self(self, pos + 1, key * phi.dim + i, w * c);
  };
  rec(rec, 0, 0, Rational(1));
  return out;
}

void require_tensor(const HomNambuAlgebra& alg, const Cochain& phi) {
  const auto& s = phi.space;
  if (s.symmetry() != Symmetry::Tensor || s.dim() != alg.dim() || s.arity() != alg.arity() || s.value_dim() != alg.dim())
    throw DimensionError("expected an N-valued cochain on tensor blocks of this algebra");
}

}  // namespace

LeibnizCochain::LeibnizCochain(int dim_, int degree_, Matrix values_) : dim(dim_), degree(degree_), values(std::move(values_)) {
  if (dim < 1 || degree < 0) throw std::invalid_argument("LeibnizCochain: bad parameters");
  if (values.rows() != dim || values.cols() != int_pow(dim, degree))
    throw DimensionError("LeibnizCochain: table must be dim x dim^degree");
}

LeibnizCochain LeibnizCochain::zero(int dim, int degree) {
  return LeibnizCochain(dim, degree, Matrix::Zero(dim, int_pow(dim, degree)));
}

Vector LeibnizCochain::value(std::span<const int> basis_tuple) const {
  if (static_cast<int>(basis_tuple.size()) != degree) throw DimensionError("LeibnizCochain: wrong number of arguments");
  return values.col(TensorIndex(dim, degree).index(basis_tuple));
}

Vector LeibnizCochain::evaluate(std::span<const Vector> args) const {
  if (static_cast<int>(args.size()) != degree) throw DimensionError("LeibnizCochain: wrong number of arguments");
  std::vector<SparseVec> sv;
  for (const auto& a : args) {
    if (a.size() != dim) throw DimensionError("LeibnizCochain: argument has the wrong length");
    sv.push_back(sparse_of(a));
  }
  return eval_sparse(*this, sv);
}

LeibnizCochain leibniz_coboundary(const HomLeibnizAlgebra& leib, const LeibnizCochain& phi) {
  const int D = leib.dim();
  if (phi.dim != D) throw DimensionError("leibniz_coboundary: cochain does not match the algebra");
  const int p = phi.degree;
  LeibnizCochain out = LeibnizCochain::zero(D, p + 1);
  if (p == 0) {
    for (int a = 0; a < D; ++a) out.values.col(a) = -leib.bracket(phi.values.col(0), unit_vector(D, a));
    return out;
  }
  const Matrix ap1 = matrix_power(leib.twist(), p - 1);
  std::vector<SparseVec> alpha, alpha_p1;
  for (int a = 0; a < D; ++a) {
    alpha.push_back(sparse_of(leib.twist().col(a)));
    alpha_p1.push_back(sparse_of(ap1.col(a)));
  }
  std::vector<SparseVec> brackets;
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) brackets.push_back(sparse_of(leib.basis_bracket(a, b)));

  const TensorIndex outputs(D, p + 1);
  const TensorIndex inputs(D, p);
  parallel_chunks(outputs.size(), [&](unsigned, std::int64_t begin, std::int64_t end) {
    Tuple rest(static_cast<std::size_t>(p));
    std::vector<SparseVec> args(static_cast<std::size_t>(p));
    for (std::int64_t key = begin; key < end; ++key) {
      const Tuple t = outputs.tuple(key);
      Vector v = Vector::Zero(D);
      for (int k = 0; k < p; ++k) {
        std::size_t pos = 0;
        for (int m = 0; m <= p; ++m)
          if (m != k) rest[pos++] = t[static_cast<std::size_t>(m)];
        const Vector u = leib.bracket(ap1.col(t[static_cast<std::size_t>(k)]), phi.values.col(inputs.index(rest)));
        v += (k % 2 == 0) ? u : Vector(-u);
      }
      {
        const Tuple head(t.begin(), t.end() - 1);
        const Vector u = leib.bracket(phi.values.col(inputs.index(head)), ap1.col(t.back()));
        v += (p % 2 == 1) ? u : Vector(-u);
      }
      for (int k = 0; k <= p; ++k)
        for (int j = k + 1; j <= p; ++j) {
          std::size_t pos = 0;
          for (int m = 0; m <= p; ++m) {
            if (m == k) continue;
            args[pos++] = m == j ? brackets[static_cast<std::size_t>(t[static_cast<std::size_t>(k)] * D + t[static_cast<std::size_t>(j)])]
                                 : alpha[static_cast<std::size_t>(t[static_cast<std::size_t>(m)])];
          }
          const Vector u = eval_sparse(phi, args);
          v += (k % 2 == 0) ? Vector(-u) : u;  // (-1)^k with 1-based k
        }
      out.values.col(key) = v;
    }
  });
  return out;
}

Matrix leibniz_coboundary_matrix(const HomLeibnizAlgebra& leib, int p) {
  const int D = leib.dim();
  const Index cols = int_pow(D, p) * D;
  const Index rows = int_pow(D, p + 1) * D;
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    LeibnizCochain unit = LeibnizCochain::zero(D, p);
    unit.values(c % D, c / D) = 1;
    m.col(c) = leibniz_coboundary(leib, unit).values.reshaped();
  }
  return m;
}

Subspace equivariant_leibniz_cochains(const HomLeibnizAlgebra& leib, int p) {
  const int D = leib.dim();
  const Matrix& a = leib.twist();
  Matrix ap = Matrix::Identity(1, 1);
  for (int i = 0; i < p; ++i) ap = Eigen::kroneckerProduct(ap, a).eval();
  const Index cols = ap.rows();
  // vec(a phi - phi ap) = (I (x) a - ap^T (x) I) vec(phi)
  const Matrix e = Matrix(Eigen::kroneckerProduct(Matrix::Identity(cols, cols), a)) -
                   Matrix(Eigen::kroneckerProduct(Matrix(ap.transpose()), Matrix::Identity(D, D)));
  return kernel_basis(e);
}

NambuComplex tensor_complex(const HomNambuAlgebra& alg) {
  return NambuComplex(alg, Coefficients::Adjoint, Symmetry::Tensor);
}

LeibnizCochain delta_lift(const HomNambuAlgebra& alg, const Cochain& phi) {
  require_tensor(alg, phi);
  const int d = alg.dim();
  const int m = alg.arity() - 1;
  const int p = phi.space.degree();
  const int D = phi.space.block_dim();
  const Matrix ap = alg.twist_power(p);
  const TensorIndex outputs(D, p + 1);
  const TensorIndex blocks(d, m);
  LeibnizCochain out = LeibnizCochain::zero(D, p + 1);
  parallel_chunks(outputs.size(), [&](unsigned, std::int64_t begin, std::int64_t end) {
    std::vector<Vector> factors(static_cast<std::size_t>(m));
    for (std::int64_t key = begin; key < end; ++key) {
      const Tuple t = outputs.tuple(key);
      const std::span<const int> head(t.data(), static_cast<std::size_t>(p));
      const Tuple x = blocks.tuple(t.back());
      Vector v = Vector::Zero(D);
      for (int i = 0; i < m; ++i) {
        for (int s = 0; s < m; ++s) factors[static_cast<std::size_t>(s)] = ap.col(x[static_cast<std::size_t>(s)]);
        factors[static_cast<std::size_t>(i)] = phi.value(head, x[static_cast<std::size_t>(i)]);
        v += tensor_of(factors, d);
      }
      out.values.col(key) = v;
    }
  });
  return out;
}

LeibnizCochain delta_lift_ternary(const HomNambuAlgebra& alg, const Cochain& phi) {
  require_tensor(alg, phi);
  if (alg.arity() != 3) throw DimensionError("delta_lift_ternary: algebra is not ternary");
  const int d = alg.dim();
  const int p = phi.space.degree();
  const int D = d * d;
  const Matrix ap = alg.twist_power(p);
  const TensorIndex outputs(D, p + 1);
  LeibnizCochain out = LeibnizCochain::zero(D, p + 1);
  for (std::int64_t key = 0; key < outputs.size(); ++key) {
    const Tuple t = outputs.tuple(key);
    const std::span<const int> head(t.data(), static_cast<std::size_t>(p));
    const int x1 = t.back() / d;
    const int x2 = t.back() % d;
    const Vector a1 = ap.col(x1), a2 = ap.col(x2);
    out.values.col(key) = Vector(Eigen::kroneckerProduct(a1, phi.value(head, x2))) +
                          Vector(Eigen::kroneckerProduct(phi.value(head, x1), a2));
  }
  return out;
}

Cochain pullback_to_tensor(const Cochain& phi) {
  const auto& s = phi.space;
  if (s.symmetry() == Symmetry::Tensor) return phi;
  const CochainSpace target(s.dim(), s.arity(), s.degree(), Symmetry::Tensor, s.value_dim());
  Cochain out = Cochain::zero(target);
  const int vd = s.value_dim();
  for (Index b = 0; b < target.basis_count(); ++b) {
    const auto [sign, k] = s.locate_flat(target.flat_arguments(b));
    if (sign == 0) continue;
    const Vector v = phi.values.segment(k * vd, vd);
    out.values.segment(b * vd, vd) = sign > 0 ? v : Vector(-v);
  }
  return out;
}

SquareVerdict check_commuting_square(const HomNambuAlgebra& alg, const Cochain& phi, bool ternary) {
  require_tensor(alg, phi);
  const NambuComplex complex = tensor_complex(alg);
  if (!complex.is_equivariant(phi)) throw PreconditionError("check_commuting_square: cochain is not equivariant");
  const auto lift = [&](const Cochain& c) { return ternary ? delta_lift_ternary(alg, c) : delta_lift(alg, c); };
  const LeibnizCochain left = leibniz_coboundary(complex.block_algebra(), lift(phi));
  const LeibnizCochain right = lift(complex.coboundary(phi));
  SquareVerdict v;
  v.residual = LeibnizCochain(left.dim, left.degree, left.values - right.values);
  v.holds = is_zero(v.residual.values);
  return v;
}

}  // namespace nambu

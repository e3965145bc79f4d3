#include "nambu/complex.hpp"

#include "nambu/errors.hpp"

namespace nambu {

const char* to_string(Coefficients c) { return c == Coefficients::Trivial ? "trivial" : "adjoint"; }

struct NambuComplex::Tables {
  int d = 0;
  int m = 0;
  int W = 0;
  CochainSpace in;
  std::vector<SparseVec> alpha_block;   // a~ e_b
  std::vector<SparseVec> alpha_z;       // a e_c
  std::vector<SparseVec> unit_block;
  std::vector<SparseVec> unit_z;
  std::vector<SparseVec> L_z;           // L(e_b) e_c at b * d + c
  std::vector<SparseVec> bracket;       // [e_a, e_b]_a at a * W + b
  std::vector<Matrix> L_alpha_p;        // L(a~^p e_b)
  std::vector<Matrix> outer;            // (b * m + k) * d + c
};

NambuComplex::NambuComplex(HomNambuAlgebra alg, Coefficients coefficients, Symmetry symmetry)
    : alg_(std::move(alg)), coefficients_(coefficients), symmetry_(symmetry) {
  blocks_ = symmetry == Symmetry::Tensor ? build_tensor_fundamental(alg_) : build_fundamental(alg_);
}

CochainSpace NambuComplex::space(int p) const {
  if (p < 0) throw std::invalid_argument("cochain degree must be nonnegative");
  return CochainSpace(alg_.dim(), alg_.arity(), p, symmetry_, value_dim());
}

NambuComplex::Tables NambuComplex::tables(int p) const {
  Tables t;
  t.d = alg_.dim();
  t.m = alg_.arity() - 1;
  t.in = space(p);
  t.W = t.in.block_dim();
  const auto& tuples = t.in.block_tuples();
  const Matrix& a = alg_.twist();
  for (int b = 0; b < t.W; ++b) {
    t.alpha_block.push_back(sparse_of(blocks_.twist().col(b)));
    t.unit_block.push_back(unit_sparse(b));
  }
  for (int c = 0; c < t.d; ++c) {
    t.alpha_z.push_back(sparse_of(a.col(c)));
    t.unit_z.push_back(unit_sparse(c));
  }
  std::vector<Matrix> L(static_cast<std::size_t>(t.W));
  for (int b = 0; b < t.W; ++b) {
    std::vector<Vector> xs;
    for (int i : tuples[static_cast<std::size_t>(b)]) xs.push_back(unit_vector(t.d, i));
    L[static_cast<std::size_t>(b)] = ad_matrix(alg_, xs);
    for (int c = 0; c < t.d; ++c) t.L_z.push_back(sparse_of(L[static_cast<std::size_t>(b)].col(c)));
  }
  t.bracket.reserve(static_cast<std::size_t>(t.W) * t.W);
  for (int x = 0; x < t.W; ++x)
    for (int y = 0; y < t.W; ++y) t.bracket.push_back(sparse_of(blocks_.basis_bracket(x, y)));

  if (coefficients_ == Coefficients::Adjoint) {
    Matrix ap_block = Matrix::Identity(t.W, t.W);
    for (int i = 0; i < p; ++i) ap_block = ap_block * blocks_.twist();
    for (int b = 0; b < t.W; ++b) {
      Matrix m = Matrix::Zero(t.d, t.d);
      for (int k = 0; k < t.W; ++k)
        if (!ap_block(k, b).is_zero()) m += ap_block(k, b) * L[static_cast<std::size_t>(k)];
      t.L_alpha_p.push_back(std::move(m));
    }
    const Matrix ap = alg_.twist_power(p);
    std::vector<Vector> args(static_cast<std::size_t>(t.m + 1));
    for (int b = 0; b < t.W; ++b) {
      const Tuple& tup = tuples[static_cast<std::size_t>(b)];
      for (int k = 0; k < t.m; ++k)
        for (int c = 0; c < t.d; ++c) {
          Matrix T(t.d, t.d);
          for (int v = 0; v < t.d; ++v) {
            for (int s = 0; s < t.m; ++s) args[static_cast<std::size_t>(s)] = ap.col(tup[static_cast<std::size_t>(s)]);
            args[static_cast<std::size_t>(k)] = unit_vector(t.d, v);
            args[static_cast<std::size_t>(t.m)] = ap.col(c);
            T.col(v) = alg_.bracket(args);
          }
          t.outer.push_back(std::move(T));
        }
    }
  }
  return t;
}

void NambuComplex::emit(const Tables& t, int p, std::span<const int> blocks, int z, TermSink& sink) const {
  const int q = p + 1;  // output blocks
  const auto locate = [&](std::span<const int> idx) {
    return t.in.locate(idx.first(static_cast<std::size_t>(p)), idx[static_cast<std::size_t>(p)]);
  };
  std::vector<const SparseVec*> args(static_cast<std::size_t>(p + 1));
  const auto b = [&](int i) { return blocks[static_cast<std::size_t>(i)]; };

  for (int i = 0; i < q; ++i) {
    const Rational sign(i % 2 == 0 ? -1 : 1);  // (-1)^{i+1} for 0-based i
    for (int j = i + 1; j < q; ++j) {
      std::size_t pos = 0;
      for (int k = 0; k < q; ++k) {
        if (k == i) continue;
        args[pos++] = k == j ? &t.bracket[static_cast<std::size_t>(b(i) * t.W + b(j))] : &t.alpha_block[static_cast<std::size_t>(b(k))];
      }
      args[pos] = &t.alpha_z[static_cast<std::size_t>(z)];
      expand_term(sign, nullptr, args, locate, sink);
    }
    std::size_t pos = 0;
    for (int k = 0; k < q; ++k)
      if (k != i) args[pos++] = &t.alpha_block[static_cast<std::size_t>(b(k))];
    args[pos] = &t.L_z[static_cast<std::size_t>(b(i) * t.d + z)];
    expand_term(sign, nullptr, args, locate, sink);
  }
  if (coefficients_ == Coefficients::Trivial) return;

  for (int i = 0; i < q; ++i) {
    const Rational sign(i % 2 == 0 ? 1 : -1);  // (-1)^{i+2}
    std::size_t pos = 0;
    for (int k = 0; k < q; ++k)
      if (k != i) args[pos++] = &t.unit_block[static_cast<std::size_t>(b(k))];
    args[pos] = &t.unit_z[static_cast<std::size_t>(z)];
    expand_term(sign, &t.L_alpha_p[static_cast<std::size_t>(b(i))], args, locate, sink);
  }
  const Rational sign4(p % 2 == 0 ? 1 : -1);
  const int last = b(p);
  const Tuple& tup = t.in.block_tuples()[static_cast<std::size_t>(last)];
  for (int k = 0; k < t.m; ++k) {
    for (int i = 0; i < p; ++i) args[static_cast<std::size_t>(i)] = &t.unit_block[static_cast<std::size_t>(b(i))];
    args[static_cast<std::size_t>(p)] = &t.unit_z[static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])];
    expand_term(sign4, &t.outer[static_cast<std::size_t>((last * t.m + k) * t.d + z)], args, locate, sink);
  }
}

SparseMatrix NambuComplex::coboundary_matrix(int p) const {
  const Tables t = tables(p);
  const CochainSpace out = space(p + 1);
  return assemble(out.basis_count(), value_dim(), t.in.size(), value_dim(), [&](TermSink& sink, Index row) {
    const auto a = out.arguments(row);
    emit(t, p, a.blocks, a.z, sink);
  });
}

Cochain NambuComplex::coboundary(const Cochain& phi) const {
  if (!(phi.space == space(phi.space.degree()))) throw DimensionError("coboundary: cochain does not belong to this complex");
  const int p = phi.space.degree();
  return Cochain(space(p + 1), coboundary_matrix(p) * phi.values);
}

Vector NambuComplex::coboundary_value(const Cochain& phi, std::span<const int> blocks, int z) const {
  if (!(phi.space == space(phi.space.degree()))) throw DimensionError("coboundary: cochain does not belong to this complex");
  const int p = phi.space.degree();
  if (static_cast<int>(blocks.size()) != p + 1) throw DimensionError("coboundary_value: need p+1 blocks");
  const Tables t = tables(p);
  EvalSink sink(phi.values, value_dim());
  emit(t, p, blocks, z, sink);
  return sink.result();
}

SparseMatrix NambuComplex::equivariance_matrix(int p) const {
  if (coefficients_ != Coefficients::Adjoint) throw std::logic_error("equivariance is defined for N-valued cochains");
  const Tables t = tables(p);
  const Matrix& a = alg_.twist();
  return assemble(t.in.basis_count(), value_dim(), t.in.size(), value_dim(), [&](TermSink& sink, Index row) {
    const auto args = t.in.arguments(row);
    sink.add(Rational(1), &a, row);
    std::vector<const SparseVec*> sv;
    for (int blk : args.blocks) sv.push_back(&t.alpha_block[static_cast<std::size_t>(blk)]);
    sv.push_back(&t.alpha_z[static_cast<std::size_t>(args.z)]);
    expand_term(Rational(-1), nullptr, sv,
                [&](std::span<const int> idx) { return t.in.locate(idx.first(static_cast<std::size_t>(p)), idx[static_cast<std::size_t>(p)]); },
                sink);
  });
}

Subspace NambuComplex::cochain_subspace(int p) const {
  const Index n = space(p).size();
  if (coefficients_ == Coefficients::Trivial) return Subspace(Matrix(Matrix::Identity(n, n)));
  const SparseMatrix e = equivariance_matrix(p);
  if (is_zero(e)) return Subspace(Matrix(Matrix::Identity(n, n)));
  return kernel_basis(to_dense(e));
}

bool NambuComplex::is_equivariant(const Cochain& phi) const {
  if (coefficients_ == Coefficients::Trivial) return true;
  return is_zero(Vector(equivariance_matrix(phi.space.degree()) * phi.values));
}

CohomologyReport NambuComplex::cohomology(int p) const {
  CohomologyReport r;
  r.degree = p;
  const Subspace K = cochain_subspace(p);
  r.dim_C = K.dim();
  const Matrix dk = to_dense(SparseMatrix(coboundary_matrix(p) * to_sparse(K.vectors())));
  const Subspace z_coords = kernel_basis(dk);
  r.cocycle_basis = z_coords.empty() ? Subspace(K.ambient_dim()) : image_basis(Matrix(K.vectors() * z_coords.vectors()));
  if (p >= 1) {
    const Subspace Kp = cochain_subspace(p - 1);
    const Matrix b = to_dense(restricted_coboundary(p - 1));
    r.coboundary_basis = image_basis(b);
  } else {
    r.coboundary_basis = Subspace(K.ambient_dim());
  }
  r.dim_Z = r.cocycle_basis.dim();
  r.dim_B = r.coboundary_basis.dim();
  r.dim_H = quotient_dim(r.cocycle_basis, r.coboundary_basis);
  r.representatives = complement_representatives(r.cocycle_basis, r.coboundary_basis);
  if (coefficients_ == Coefficients::Adjoint && p == 1) r.dim_H_without_degree0 = r.dim_Z;
  return r;
}

SparseMatrix NambuComplex::restricted_coboundary(int p) const {
  return SparseMatrix(coboundary_matrix(p) * to_sparse(cochain_subspace(p).vectors()));
}

Matrix to_dense(const SparseMatrix& m) { return Matrix(m); }

SparseMatrix to_sparse(const Matrix& m) {
  SparseMatrix s = m.sparseView();
  s.prune([](Index, Index, const Rational& v) { return !v.is_zero(); });
  return s;
}

}  // namespace nambu

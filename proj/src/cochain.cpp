#include "nambu/cochain.hpp"

#include "nambu/errors.hpp"

namespace nambu {

SparseVec sparse_of(const Vector& v) {
  SparseVec out;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::LastBlockSkew: return "last-block-skew";
    case Symmetry::BlockSkew: return "block-skew";
    case Symmetry::Tensor: return "tensor";
  }
  return "?";
}

CochainSpace::CochainSpace(int dim, int arity, int degree, Symmetry symmetry, int value_dim)
    : dim_(dim), arity_(arity), degree_(degree), symmetry_(symmetry), value_dim_(value_dim) {
  if (dim < 1 || arity < 2 || degree < 0 || value_dim < 1) throw std::invalid_argument("CochainSpace: bad parameters");
  const int m = arity - 1;
  if (symmetry == Symmetry::Tensor) {
    tensor_ = TensorIndex(dim, m);
    for (std::int64_t k = 0; k < tensor_.size(); ++k) block_tuples_.push_back(tensor_.tuple(k));
  } else if (m <= dim) {
    wedge_ = TupleIndex(dim, m);
    block_tuples_ = wedge_.tuples();
  }
  const Index W = static_cast<Index>(block_tuples_.size());
  if (degree == 0) {
    basis_count_ = dim;
  } else if (symmetry == Symmetry::LastBlockSkew) {
    if (arity <= dim) last_group_ = TupleIndex(dim, arity);
    basis_count_ = static_cast<Index>(int_pow(W, degree - 1)) * last_group_.size();
  } else {
    basis_count_ = static_cast<Index>(int_pow(W, degree)) * dim;
  }
}

std::pair<int, int> CochainSpace::block_index(std::span<const int> t) const {
  if (symmetry_ == Symmetry::Tensor) return {1, static_cast<int>(tensor_.index(t))};
  Tuple sorted(t.begin(), t.end());
  const int s = sort_with_sign(sorted);
  if (s == 0) return {0, 0};
  return {s, wedge_.index(sorted)};
}

CochainSpace::Arguments CochainSpace::arguments(Index basis) const {
  Arguments a;
  if (degree_ == 0) {
    a.z = static_cast<int>(basis);
    return a;
  }
  const Index W = block_dim();
  a.blocks.assign(static_cast<std::size_t>(degree_), 0);
  Index rest;
  int first_free;
  if (symmetry_ == Symmetry::LastBlockSkew) {
    const Tuple& last = last_group_.tuple(static_cast<int>(basis % last_group_.size()));
    rest = basis / last_group_.size();
    a.z = last.back();
    a.blocks.back() = wedge_.index(std::span<const int>(last.data(), last.size() - 1));
    first_free = degree_ - 2;
  } else {
    a.z = static_cast<int>(basis % dim_);
    rest = basis / dim_;
    first_free = degree_ - 1;
  }
  for (int i = first_free; i >= 0; --i) {
    a.blocks[static_cast<std::size_t>(i)] = static_cast<int>(rest % W);
    rest /= W;
  }
  return a;
}

std::pair<int, Index> CochainSpace::locate(std::span<const int> blocks, int z) const {
  if (degree_ == 0) return {1, z};
  const Index W = block_dim();
  Index key = 0;
  if (symmetry_ == Symmetry::LastBlockSkew) {
    for (int i = 0; i + 1 < degree_; ++i) key = key * W + blocks[static_cast<std::size_t>(i)];
    const Tuple& last = block_tuples_[static_cast<std::size_t>(blocks[static_cast<std::size_t>(degree_ - 1)])];
    Tuple merged(last);
    merged.push_back(z);
    const int s = sort_with_sign(merged);
    if (s == 0) return {0, 0};
    return {s, key * last_group_.size() + last_group_.index(merged)};
  }
  for (int i = 0; i < degree_; ++i) key = key * W + blocks[static_cast<std::size_t>(i)];
  return {1, key * dim_ + z};
}

Tuple CochainSpace::flat_arguments(Index basis) const {
  const auto a = arguments(basis);
  Tuple out;
  for (int b : a.blocks) {
    const Tuple& t = block_tuples_[static_cast<std::size_t>(b)];
    out.insert(out.end(), t.begin(), t.end());
  }
  out.push_back(a.z);
  return out;
}

std::pair<int, Index> CochainSpace::locate_flat(std::span<const int> flat) const {
  const int m = arity_ - 1;
  if (static_cast<int>(flat.size()) != degree_ * m + 1) throw DimensionError("cochain: wrong number of arguments");
  for (int v : flat)
    if (v < 0 || v >= dim_) throw DimensionError("cochain: argument index out of range");
  int sign = 1;
  std::vector<int> blocks;
  for (int i = 0; i < degree_; ++i) {
    const auto [s, b] = block_index(flat.subspan(static_cast<std::size_t>(i * m), static_cast<std::size_t>(m)));
    if (s == 0) return {0, 0};
    sign *= s;
    blocks.push_back(b);
  }
  const auto [s, k] = locate(blocks, flat.back());
  return {sign * s, k};
}

Cochain::Cochain(CochainSpace s, Vector v) : space(std::move(s)), values(std::move(v)) {
  if (values.size() != space.size()) throw DimensionError("cochain: coefficient vector has the wrong length");
}

Vector Cochain::value(std::span<const int> blocks, int z) const {
  const auto [sign, k] = space.locate(blocks, z);
  const int vd = space.value_dim();
  if (sign == 0) return Vector::Zero(vd);
  Vector v = values.segment(k * vd, vd);
  return sign > 0 ? v : Vector(-v);
}

Vector Cochain::evaluate(std::span<const Vector> blocks, const Vector& z) const {
  if (static_cast<int>(blocks.size()) != space.degree()) throw DimensionError("cochain: wrong number of blocks");
  std::vector<SparseVec> sv;
  for (const auto& b : blocks) {
    if (b.size() != space.block_dim()) throw DimensionError("cochain: block argument has the wrong length");
    sv.push_back(sparse_of(b));
  }
  if (z.size() != space.dim()) throw DimensionError("cochain: z has the wrong length");
  sv.push_back(sparse_of(z));
  std::vector<const SparseVec*> args;
  for (const auto& s : sv) args.push_back(&s);
  EvalSink sink(values, space.value_dim());
  const std::size_t q = blocks.size();
  expand_term(Rational(1), nullptr, args,
              [&](std::span<const int> idx) { return space.locate(idx.first(q), idx[q]); }, sink);
  return sink.result();
}

void EvalSink::add(const Rational& weight, const Matrix* t, Index input_basis) {
  const auto v = phi_.segment(input_basis * vd_, vd_);
  if (t)
    out_ += weight * (*t * v);
  else
    out_ += weight * v;
}

void TripletSink::add(const Rational& weight, const Matrix* t, Index input_basis) {
  const Index col0 = input_basis * vd_;
  if (!t) {
    for (int v = 0; v < vd_; ++v) triplets_.emplace_back(row_ + v, col0 + v, weight);
    return;
  }
  for (Index c = 0; c < t->cols(); ++c)
    for (Index r = 0; r < t->rows(); ++r)
      if (!(*t)(r, c).is_zero()) triplets_.emplace_back(row_ + r, col0 + c, weight * (*t)(r, c));
}

}  // namespace nambu

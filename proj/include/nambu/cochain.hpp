#pragma once

// Cochain spaces and the term-expansion engine behind every coboundary.
//
// A Nambu p-cochain takes p blocks x_1, ..., x_p of n-1 arguments each and one
// further argument z. Blocks are elements of the block space: ^{n-1} N
// (increasing tuples) or N^{(x) n-1} (ordered tuples). Three symmetry types:
//
//   LastBlockSkew  skew inside each block, and fully skew in (x_p, z), so the
//                  last group is an increasing n-tuple. Degree 1 is an n-form.
//   BlockSkew      skew inside each block, z unconstrained.
//   Tensor         ordered blocks, no symmetry.
//
// Degree 0 means the single argument z. Values lie in a space of dimension
// value_dim (1 for scalar cochains, d for N-valued ones). Coordinates are
// basis_index * value_dim + component.
//
// Coboundaries are described by terms  w * T( phi(B_1, ..., B_q, Z) )  with
// sparse block arguments B_i, a sparse z argument Z and an optional linear
// map T on values. The same term stream is either evaluated against a
// coefficient vector or turned into sparse matrix entries.

#include "nambu/combinatorics.hpp"
#include "nambu/scalar.hpp"

#include <span>
#include <utility>
#include <vector>

namespace nambu {

using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_of(const Vector& v);
inline SparseVec unit_sparse(int i) { return {{i, Rational(1)}}; }

enum class Symmetry { LastBlockSkew, BlockSkew, Tensor };

const char* to_string(Symmetry s);

class CochainSpace {
 public:
  CochainSpace() = default;
  CochainSpace(int dim, int arity, int degree, Symmetry symmetry, int value_dim);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  Symmetry symmetry() const { return symmetry_; }
  int value_dim() const { return value_dim_; }

  /// Number of canonical argument tuples.
  Index basis_count() const { return basis_count_; }
  /// Number of coordinates.
  Index size() const { return basis_count_ * value_dim_; }
  /// Dimension of the block space.
  int block_dim() const { return static_cast<int>(block_tuples_.size()); }
  const std::vector<Tuple>& block_tuples() const { return block_tuples_; }
  /// Index of a block given by an (n-1)-tuple, with the sign needed to
  /// reorder it; sign 0 for a vanishing wedge.
  std::pair<int, int> block_index(std::span<const int> t) const;

  struct Arguments {
    std::vector<int> blocks;  // block-space basis indices
    int z = 0;
  };
  Arguments arguments(Index basis) const;

  /// Sign and canonical index of phi(e_{b_1}, ..., e_{b_q}, e_z); sign 0 when
  /// the value vanishes by symmetry.
  std::pair<int, Index> locate(std::span<const int> blocks, int z) const;

  /// All p(n-1)+1 arguments of a canonical tuple as basis indices of N.
  Tuple flat_arguments(Index basis) const;
  /// Inverse of flat_arguments for any ordering of the arguments.
  std::pair<int, Index> locate_flat(std::span<const int> flat) const;

  bool operator==(const CochainSpace& o) const {
    return dim_ == o.dim_ && arity_ == o.arity_ && degree_ == o.degree_ && symmetry_ == o.symmetry_ &&
           value_dim_ == o.value_dim_;
  }

 private:
  int dim_ = 0;
  int arity_ = 0;
  int degree_ = 0;
  Symmetry symmetry_ = Symmetry::LastBlockSkew;
  int value_dim_ = 1;
  Index basis_count_ = 0;
  std::vector<Tuple> block_tuples_;
  TupleIndex wedge_;       // increasing (n-1)-tuples
  TupleIndex last_group_;  // increasing n-tuples (LastBlockSkew)
  TensorIndex tensor_;     // ordered (n-1)-tuples (Tensor)
};

/// Coordinates of a cochain together with its space.
struct Cochain {
  CochainSpace space;
  Vector values;

  Cochain() = default;
  Cochain(CochainSpace s, Vector v);
  static Cochain zero(const CochainSpace& s) { return Cochain(s, Vector::Zero(s.size())); }

  /// Value on basis arguments (any order), using the symmetry.
  Vector value(std::span<const int> blocks, int z) const;
  /// Value on arbitrary block and z arguments, multilinearly.
  Vector evaluate(std::span<const Vector> blocks, const Vector& z) const;
};

/// Receives expanded terms. `locate` maps argument basis indices to (sign,
/// input basis index); `t` may be null for the identity on values.
struct TermSink {
  virtual ~TermSink() = default;
  virtual void add(const Rational& weight, const Matrix* t, Index input_basis) = 0;
};

/// Expands w * T(phi(args...)) over the supports of the arguments and feeds
/// every surviving basis term to the sink. `locate(span<const int>)` returns
/// (sign, index).
template <class Locate>
void expand_term(const Rational& weight, const Matrix* t, std::span<const SparseVec* const> args, Locate&& locate,
                 TermSink& sink) {
  std::vector<int> idx(args.size());
  auto rec = [&](auto& self, std::size_t pos, const Rational& w) -> void {
    if (pos == args.size()) {
      const auto [sign, k] = locate(std::span<const int>(idx));
      if (sign == 0) return;
      sink.add(sign > 0 ? w : Rational(-w), t, k);
      return;
    }
    for (const auto& [i, c] : *args[pos]) {
      idx[pos] = i;
      self(self, pos + 1, w * c);
    }
  };
  if (weight.is_zero()) return;
  rec(rec, 0, weight);
}

/// Accumulates T * phi(basis) into a value vector.
class EvalSink : public TermSink {
 public:
  EvalSink(const Vector& coefficients, int value_dim) : phi_(coefficients), vd_(value_dim), out_(Vector::Zero(value_dim)) {}
  void add(const Rational& weight, const Matrix* t, Index input_basis) override;
  const Vector& result() const { return out_; }
  void reset() { out_.setZero(); }

 private:
  const Vector& phi_;
  int vd_;
  Vector out_;
};

/// Collects sparse matrix entries for one output row block.
class TripletSink : public TermSink {
 public:
  explicit TripletSink(int value_dim) : vd_(value_dim) {}
  void set_row(Index row_base) { row_ = row_base; }
  void add(const Rational& weight, const Matrix* t, Index input_basis) override;
  std::vector<Eigen::Triplet<Rational>>& triplets() { return triplets_; }

 private:
  int vd_;
  Index row_ = 0;
  std::vector<Eigen::Triplet<Rational>> triplets_;
};

/// Builds a sparse matrix (rows x cols) by running `fill(sink, row)` for each
/// output basis element in parallel; `fill` emits the row block's terms.
template <class Fill>
SparseMatrix assemble(Index output_basis, int output_value_dim, Index cols, int input_value_dim, Fill&& fill);

}  // namespace nambu

#include "nambu/parallel.hpp"

namespace nambu {

template <class Fill>
SparseMatrix assemble(Index output_basis, int output_value_dim, Index cols, int input_value_dim, Fill&& fill) {
  if (output_value_dim != input_value_dim) throw std::invalid_argument("assemble: value dimensions differ");
  std::vector<std::vector<Eigen::Triplet<Rational>>> parts(chunk_slots(output_basis));
  parallel_chunks(output_basis, [&](unsigned worker, std::int64_t begin, std::int64_t end) {
    TripletSink sink(input_value_dim);
    for (std::int64_t r = begin; r < end; ++r) {
      sink.set_row(static_cast<Index>(r) * output_value_dim);
      fill(sink, static_cast<Index>(r));
    }
    parts[worker] = std::move(sink.triplets());
  });
  std::vector<Eigen::Triplet<Rational>> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  SparseMatrix m(output_basis * output_value_dim, cols);
  m.setFromTriplets(all.begin(), all.end());
  m.prune([](Index, Index, const Rational& v) { return !v.is_zero(); });
  return m;
}

}  // namespace nambu

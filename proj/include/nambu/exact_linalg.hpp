#pragma once

// Exact linear algebra over the rationals: rank, reduced echelon form,
// kernel and image bases, linear solve, quotient dimensions.
//
// Elimination is fraction-free: each row is scaled to integers and a
// Bareiss-style Gauss-Jordan sweep keeps every intermediate entry a minor of
// the input, so no gcd work happens inside the loop. Pivots are the first
// nonzero entry in column order, which makes every returned basis canonical.

#include "nambu/errors.hpp"
#include "nambu/scalar.hpp"

#include <optional>
#include <vector>

namespace nambu {

/// Maps an exact field type onto the integral domain used for fraction-free
/// elimination.
template <class S>
struct FractionFree;

template <>
struct FractionFree<Rational> {
  using Ring = Integer;

  /// Scales `row` by the lcm of its denominators.
  static std::vector<Ring> clear_denominators(const VectorX<Rational>& row) {
    Integer lcm_den(1);
    for (Index j = 0; j < row.size(); ++j)
      if (!row(j).is_zero()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(row(j)));
    std::vector<Ring> out(static_cast<std::size_t>(row.size()));
    for (Index j = 0; j < row.size(); ++j)
      if (!row(j).is_zero())
        out[static_cast<std::size_t>(j)] = numerator(row(j)) * (lcm_den / denominator(row(j)));
    return out;
  }

  static Rational quotient(const Ring& num, const Ring& den) { return Rational(num, den); }

  // In-place `target = (pivot * target - factor * source) / previous`, exact.
  static void bareiss_update(Ring& target, const Ring& pivot, const Ring& factor,
                             const Ring& source, const Ring& previous, Ring& scratch) {
    mpz_mul(scratch.backend().data(), pivot.backend().data(), target.backend().data());
    if (!factor.is_zero() && !source.is_zero())
      mpz_submul(scratch.backend().data(), factor.backend().data(), source.backend().data());
    mpz_divexact(target.backend().data(), scratch.backend().data(), previous.backend().data());
  }
};

/// Linearly independent vectors of a fixed ambient space, stored as columns.
template <class S>
class SubspaceBasis {
 public:
  explicit SubspaceBasis(Index ambient_dim = 0) : vectors_(ambient_dim, 0) {}
  explicit SubspaceBasis(MatrixX<S> columns) : vectors_(std::move(columns)) {}

  Index ambient_dim() const { return vectors_.rows(); }
  Index dim() const { return vectors_.cols(); }
  bool empty() const { return dim() == 0; }
  const MatrixX<S>& vectors() const { return vectors_; }
  VectorX<S> vector(Index i) const { return vectors_.col(i); }

 private:
  MatrixX<S> vectors_;
};

/// Reduced row echelon form restricted to its nonzero rows.
template <class S>
struct RowEchelon {
  MatrixX<S> rows;             // rank x cols, pivot entries equal to one
  std::vector<Index> pivots;   // pivot column of each row, increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class Derived>
RowEchelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  using FF = FractionFree<S>;
  using Ring = typename FF::Ring;

  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<std::vector<Ring>> a;
  a.reserve(static_cast<std::size_t>(rows));
  for (Index i = 0; i < rows; ++i) {
    VectorX<S> row = m.row(i).transpose();
    a.push_back(FF::clear_denominators(row));
  }

  Ring previous(1);
  Ring scratch;
  std::vector<Index> pivots;
  std::size_t rank = 0;
  for (Index c = 0; c < cols && rank < a.size(); ++c) {
    const auto cc = static_cast<std::size_t>(c);
    std::size_t found = rank;
    while (found < a.size() && a[found][cc].is_zero()) ++found;
    if (found == a.size()) continue;
    std::swap(a[rank], a[found]);
    const Ring pivot = a[rank][cc];
    const auto& source = a[rank];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank) continue;
      auto& target = a[i];
      const Ring factor = target[cc];
      if (factor.is_zero() && pivot == previous) continue;
      for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) {
        if (target[j].is_zero() && (factor.is_zero() || source[j].is_zero())) continue;
        FF::bareiss_update(target[j], pivot, factor, source[j], previous, scratch);
      }
    }
    previous = pivot;
    pivots.push_back(c);
    ++rank;
  }

  // Every pivot entry now equals `previous`; dividing it out gives the RREF.
  RowEchelon<S> out;
  out.pivots = pivots;
  out.rows = MatrixX<S>::Zero(static_cast<Index>(rank), cols);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j)
      if (!a[i][j].is_zero())
        out.rows(static_cast<Index>(i), static_cast<Index>(j)) = FF::quotient(a[i][j], previous);
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return reduced_row_echelon(m).rank();
}

/// Canonical basis of the row space: the nonzero rows of the RREF, as columns.
template <class Derived>
SubspaceBasis<typename Derived::Scalar> row_space_basis(const Eigen::MatrixBase<Derived>& m) {
  auto rref = reduced_row_echelon(m);
  return SubspaceBasis<typename Derived::Scalar>(rref.rows.transpose());
}

/// Right null space. Count is cols - rank; every vector v satisfies m v = 0.
template <class Derived>
SubspaceBasis<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto rref = reduced_row_echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : rref.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  MatrixX<S> raw(cols - rref.rank(), cols);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    raw.row(k).setZero();
    raw(k, f) = 1;
    for (Index r = 0; r < rref.rank(); ++r) raw(k, rref.pivots[static_cast<std::size_t>(r)]) = -rref.rows(r, f);
    ++k;
  }
  return row_space_basis(raw);
}

/// Column space of m in reduced echelon form.
template <class Derived>
SubspaceBasis<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m) {
  return row_space_basis(m.transpose());
}

/// One exact solution of m x = b, or nullopt when b is not in the image.
template <class DerivedM, class DerivedB>
std::optional<VectorX<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length does not match rows");
  MatrixX<S> augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m;
  augmented.col(m.cols()) = b;
  const auto rref = reduced_row_echelon(augmented);
  if (rref.rank() > 0 && rref.pivots.back() == m.cols()) return std::nullopt;
  VectorX<S> x = VectorX<S>::Zero(m.cols());
  for (Index r = 0; r < rref.rank(); ++r) x(rref.pivots[static_cast<std::size_t>(r)]) = rref.rows(r, m.cols());
  return x;
}

/// True when v lies in the span of the basis.
template <class S, class Derived>
bool contains(const SubspaceBasis<S>& basis, const Eigen::MatrixBase<Derived>& v) {
  if (basis.empty()) {
    for (Index i = 0; i < v.size(); ++i)
      if (!(v(i) == S(0))) return false;
    return true;
  }
  return solve(basis.vectors(), v).has_value();
}

/// True when span(inner) is contained in span(outer).
template <class S>
bool is_subspace_of(const SubspaceBasis<S>& inner, const SubspaceBasis<S>& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) throw DimensionError("subspaces live in different spaces");
  if (inner.empty()) return true;
  MatrixX<S> stacked(outer.ambient_dim(), outer.dim() + inner.dim());
  stacked << outer.vectors(), inner.vectors();
  return rank(stacked) == outer.dim();
}

/// dim(z) - dim(b) after checking span(b) is inside span(z).
template <class S>
Index quotient_dim(const SubspaceBasis<S>& z, const SubspaceBasis<S>& b) {
  if (!is_subspace_of(b, z)) throw std::invalid_argument("quotient_dim: not a subspace");
  return z.dim() - b.dim();
}

/// Greedy complement: the columns of `z` that extend a basis of span(b) to
/// span(z), in order.
template <class S>
SubspaceBasis<S> complement_representatives(const SubspaceBasis<S>& z, const SubspaceBasis<S>& b) {
  MatrixX<S> current = b.vectors();
  std::vector<Index> chosen;
  Index current_rank = b.dim();
  for (Index i = 0; i < z.dim(); ++i) {
    MatrixX<S> trial(z.ambient_dim(), current.cols() + 1);
    trial << current, z.vector(i);
    const Index r = rank(trial);
    if (r > current_rank) {
      current = std::move(trial);
      current_rank = r;
      chosen.push_back(i);
    }
  }
  MatrixX<S> out(z.ambient_dim(), static_cast<Index>(chosen.size()));
  for (std::size_t k = 0; k < chosen.size(); ++k) out.col(static_cast<Index>(k)) = z.vector(chosen[k]);
  return SubspaceBasis<S>(std::move(out));
}

using Subspace = SubspaceBasis<Rational>;

}  // namespace nambu

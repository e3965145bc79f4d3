#pragma once

// Slow, independent reference implementations used only by the tests. None
// of them call into the library beyond its scalar and matrix types.

#include "nambu/scalar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using nambu::Index;
using nambu::Matrix;
using nambu::Rational;
using nambu::Vector;

/// Textbook Gaussian elimination with division.
inline Index rank(Matrix m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return r;
}

/// Sign of a permutation by counting inversions; 0 on a repeat.
inline int inversion_sign(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) ++inv;
    }
  return inv % 2 ? -1 : 1;
}

/// Calls f on every ordered m-tuple from {0..d-1}.
inline void for_each_tuple(int d, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(static_cast<std::size_t>(m), 0);
  while (true) {
    f(t);
    int k = m - 1;
    while (k >= 0 && ++t[static_cast<std::size_t>(k)] == d) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
  }
}

/// Full skew tensor c[i1..in] from a callback defined on increasing tuples.
struct DenseBracket {
  int d = 0;
  int n = 0;
  std::vector<Vector> table;  // indexed by ordered tuple in base d

  std::size_t key(const std::vector<int>& t) const {
    std::size_t k = 0;
    for (int v : t) k = k * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
    return k;
  }
  const Vector& at(const std::vector<int>& t) const { return table[key(t)]; }

  Vector eval(const std::vector<Vector>& args) const {
    Vector out = Vector::Zero(d);
    for_each_tuple(d, n, [&](const std::vector<int>& t) {
      Rational w = 1;
      for (int i = 0; i < n; ++i) w *= args[static_cast<std::size_t>(i)](t[static_cast<std::size_t>(i)]);
      if (w != 0) out += w * at(t);
    });
    return out;
  }
};

/// Expands increasing-tuple data into every ordering with permutation signs.
template <class Increasing>
DenseBracket dense_bracket(int d, int n, Increasing&& value_of_sorted) {
  DenseBracket b{d, n, {}};
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(d);
  b.table.assign(total, Vector::Zero(d));
  for_each_tuple(d, n, [&](const std::vector<int>& t) {
    const int s = inversion_sign(t);
    if (s == 0) return;
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    b.table[b.key(t)] = Rational(s) * value_of_sorted(sorted);
  });
  return b;
}

/// Jacobi identity residuals for a binary bracket c(i,j) in R^d.
inline bool jacobi_holds(const DenseBracket& b) {
  auto br = [&](const Vector& x, const Vector& y) { return b.eval({x, y}); };
  for (int i = 0; i < b.d; ++i)
    for (int j = 0; j < b.d; ++j)
      for (int k = 0; k < b.d; ++k) {
        const Vector x = nambu::unit_vector(b.d, i), y = nambu::unit_vector(b.d, j), z = nambu::unit_vector(b.d, k);
        const Vector r = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
        for (Index q = 0; q < r.size(); ++q)
          if (r(q) != 0) return false;
      }
  return true;
}

/// Chevalley-Eilenberg differential of a trivial-coefficient k-form on a Lie
/// algebra, both given as full tables: omega(t) for ordered k-tuples.
/// (d omega)(x_0..x_k) = sum_{i<j} (-1)^{i+j} omega([x_i,x_j], x_0..^i..^j..).
inline Rational ce_differential(const DenseBracket& lie, const std::function<Rational(const std::vector<Vector>&)>& omega,
                                const std::vector<Vector>& xs) {
  Rational out = 0;
  const int k1 = static_cast<int>(xs.size());
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j) {
      std::vector<Vector> args{lie.eval({xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]})};
      for (int m = 0; m < k1; ++m)
        if (m != i && m != j) args.push_back(xs[static_cast<std::size_t>(m)]);
      out += Rational((i + j) % 2 ? -1 : 1) * omega(args);
    }
  return out;
}

}  // namespace oracle

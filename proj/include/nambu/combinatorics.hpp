#pragma once

// Index bookkeeping for exterior and tensor powers of a d-dimensional space.
// All indices are 0-based internally; file formats add one.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nambu {

using Tuple = std::vector<int>;

/// Sorts `t` ascending and returns the sign of the sorting permutation, or 0
/// when an entry repeats.
inline int sort_with_sign(std::span<int> t) {
  int sign = 1;
  // insertion sort: tuples are short
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Strictly increasing m-tuples from {0..d-1} in lexicographic order, with
/// constant-time rank lookup.
class TupleIndex {
 public:
  TupleIndex() = default;
  TupleIndex(int dim, int length) : dim_(dim), length_(length) {
    if (dim < 1 || length < 0) throw std::invalid_argument("TupleIndex: bad dimensions");
    lookup_.assign(static_cast<std::size_t>(int_pow(dim, length)), -1);
    Tuple t(static_cast<std::size_t>(length));
    enumerate(t, 0, 0);
  }

  int dim() const { return dim_; }
  int length() const { return length_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const Tuple& tuple(int i) const { return tuples_[static_cast<std::size_t>(i)]; }
  const std::vector<Tuple>& tuples() const { return tuples_; }

  /// Rank of an increasing tuple; -1 when the tuple is not strictly increasing.
  int index(std::span<const int> t) const {
    std::size_t key = 0;
    for (int v : t) key = key * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
    return lookup_[key];
  }

 private:
  void enumerate(Tuple& t, int pos, int start) {
    if (pos == length_) {
      std::size_t key = 0;
      for (int v : t) key = key * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
      lookup_[key] = static_cast<int>(tuples_.size());
      tuples_.push_back(t);
      return;
    }
    for (int v = start; v < dim_; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      enumerate(t, pos + 1, v + 1);
    }
  }

  int dim_ = 0;
  int length_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<int> lookup_;
};

/// Mixed-radix indexing of ordered m-tuples from {0..d-1} (basis of the
/// m-fold tensor power).
class TensorIndex {
 public:
  TensorIndex() = default;
  TensorIndex(int dim, int length) : dim_(dim), length_(length), size_(int_pow(dim, length)) {}

  int dim() const { return dim_; }
  int length() const { return length_; }
  std::int64_t size() const { return size_; }

  std::int64_t index(std::span<const int> t) const {
    std::int64_t key = 0;
    for (int v : t) key = key * dim_ + v;
    return key;
  }

  Tuple tuple(std::int64_t key) const {
    Tuple t(static_cast<std::size_t>(length_));
    for (int i = length_ - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(key % dim_);
      key /= dim_;
    }
    return t;
  }

 private:
  int dim_ = 0;
  int length_ = 0;
  std::int64_t size_ = 0;
};

/// All permutations of {0..k-1} with their signs, in lexicographic order.
inline std::vector<std::pair<Tuple, int>> signed_permutations(int k) {
  Tuple p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<Tuple, int>> out;
  do {
    Tuple copy = p;
    const int s = sort_with_sign(copy);
    out.emplace_back(p, s);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace nambu

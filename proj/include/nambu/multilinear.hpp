#pragma once

// Expansion of skew-multilinear maps over the supports of their arguments.

#include "nambu/combinatorics.hpp"
#include "nambu/scalar.hpp"

#include <span>
#include <vector>

namespace nambu {

/// Nonzero entries of a vector.
struct Support {
  std::vector<int> index;
  std::vector<Rational> value;
};

inline Support support_of(const Vector& v) {
  Support s;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      s.index.push_back(static_cast<int>(i));
      s.value.push_back(v(i));
    }
  return s;
}

namespace detail {

template <class F>
void skew_terms(const std::vector<Support>& supports, std::size_t pos, Tuple& idx, const Rational& weight, F& f) {
  if (pos == supports.size()) {
    Tuple sorted = idx;
    const int sign = sort_with_sign(sorted);
    if (sign != 0) f(static_cast<const Tuple&>(sorted), sign > 0 ? weight : Rational(-weight));
    return;
  }
  const auto& sup = supports[pos];
  for (std::size_t t = 0; t < sup.index.size(); ++t) {
    const int i = sup.index[t];
    bool repeated = false;
    for (std::size_t q = 0; q < pos; ++q) repeated |= idx[q] == i;
    if (repeated) continue;
    idx[pos] = i;
    skew_terms(supports, pos + 1, idx, weight * sup.value[t], f);
  }
}

}  // namespace detail

/// Calls f(sorted, coefficient) for every increasing basis tuple in the skew
/// expansion of args[0] ^ ... ^ args[m-1].
template <class F>
void for_each_skew_term(std::span<const Vector> args, F&& f) {
  std::vector<Support> supports;
  supports.reserve(args.size());
  for (const auto& a : args) supports.push_back(support_of(a));
  Tuple idx(args.size());
  detail::skew_terms(supports, 0, idx, Rational(1), f);
}

}  // namespace nambu

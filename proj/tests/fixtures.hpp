#pragma once

#include "nambu/algebra.hpp"

#include <random>

namespace fixture {

using namespace nambu;

/// sl2 with basis (h, e, f).
inline HomNambuAlgebra sl2() {
  StructureTensor s(3, 2);
  s.set(std::vector<int>{0, 1}, Vector(Vector::Unit(3, 1) * Rational(2)));
  s.set(std::vector<int>{0, 2}, Vector(Vector::Unit(3, 2) * Rational(-2)));
  s.set(std::vector<int>{1, 2}, Vector(Vector::Unit(3, 0)));
  return HomNambuAlgebra(s, Matrix::Identity(3, 3)).validated();
}

inline std::vector<int> random_signs(std::mt19937& rng, int count) {
  std::vector<int> s(static_cast<std::size_t>(count));
  for (auto& v : s) v = (rng() & 1) ? 1 : -1;
  return s;
}

/// Small random integer entries in [-3, 3].
inline Vector random_entries(std::mt19937& rng, Index size) {
  std::uniform_int_distribution<int> c(-3, 3);
  Vector v(size);
  for (Index i = 0; i < size; ++i) v(i) = c(rng);
  return v;
}

/// Filippov n=3 (all signs +1) twisted by one of its signed-permutation
/// automorphisms that is not diagonal.
inline HomNambuAlgebra twisted_filippov3(const std::vector<int>& signs = {1, 1, 1, 1}) {
  const auto base = filippov_algebra(3, signs);
  const auto autos = signed_permutation_automorphisms(base);
  for (const auto& f : autos) {
    if (f(1, 0) != 0 && f != Matrix::Identity(4, 4)) return yau_twist(base, f);
  }
  return yau_twist(base, autos.back());
}

/// Filippov bracket with [e2,e3,e4] = e1 + e2. Rescaling a single
/// coefficient is not enough to break the identity: any nonzero diagonal
/// constants give a Nambu-Lie algebra.
inline HomNambuAlgebra perturbed_filippov3() {
  auto base = filippov_algebra(3, {1, 1, 1, 1});
  StructureTensor s = base.structure();
  s.set(std::vector<int>{1, 2, 3}, Vector(Vector::Unit(4, 0) + Vector::Unit(4, 1)));
  return HomNambuAlgebra(s, base.twist()).validated();
}

}  // namespace fixture

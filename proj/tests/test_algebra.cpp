#include "doctest.h"
#include "fixtures.hpp"
#include "nambu/errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace nambu;

namespace {

std::vector<Vector> basis_args(int d, std::initializer_list<int> idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(unit_vector(d, i));
  return out;
}

Vector random_vector(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Rational(num(rng), den(rng));
  return v;
}

StructureTensor random_tensor(std::mt19937& rng, int d, int n) {
  StructureTensor s(d, n);
  for (const auto& t : s.tuples().tuples()) s.set(t, random_vector(rng, d));
  return s;
}

}  // namespace

TEST_CASE("Filippov bracket values") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  CHECK(f.dim() == 4);
  CHECK(f.bracket(basis_args(4, {1, 2, 3})) == unit_vector(4, 0));
  CHECK(f.bracket(basis_args(4, {0, 2, 3})) == Vector(-unit_vector(4, 1)));
  CHECK(f.bracket(basis_args(4, {0, 1, 3})) == unit_vector(4, 2));
  CHECK(f.bracket(basis_args(4, {0, 1, 2})) == Vector(-unit_vector(4, 3)));
  CHECK(f.bracket(basis_args(4, {1, 1, 3})) == Vector(Vector::Zero(4)));

  const auto g = filippov_algebra(3, {-1, 1, 1, 1});
  CHECK(g.bracket(basis_args(4, {1, 2, 3})) == Vector(-unit_vector(4, 0)));

  const auto cross = filippov_algebra(2, {1, 1, 1});
  CHECK(cross.bracket(basis_args(3, {1, 2})) == unit_vector(3, 0));
  CHECK(cross.bracket(basis_args(3, {0, 2})) == Vector(-unit_vector(3, 1)));
  CHECK(cross.bracket(basis_args(3, {0, 1})) == unit_vector(3, 2));
  CHECK(cross.flags().all());
  CHECK_THROWS_AS(filippov_algebra(3, {1, 1, 1}), DimensionError);
  CHECK_THROWS_AS(filippov_algebra(3, {1, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("Filippov algebras validate for random signs") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = filippov_algebra(n, fixture::random_signs(rng, n + 1));
      CHECK(f.flags().all());
    }
  CHECK(check_hom_nambu_identity(filippov_algebra(3, {1, -1, 1, -1})).empty());
}

TEST_CASE("evaluation matches the naive permutation expansion") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 3 + trial % 2, n = 2 + trial % 3;
    if (n > d) continue;
    const auto s = random_tensor(rng, d, n);
    const auto naive = oracle::dense_bracket(d, n, [&](const std::vector<int>& t) { return s.basis_value(t); });
    std::vector<Vector> args;
    for (int i = 0; i < n; ++i) args.push_back(random_vector(rng, d));
    CHECK(s.evaluate(args) == naive.eval(args));
    // permuted basis arguments pick up the sign of the permutation
    oracle::for_each_tuple(d, n, [&](const std::vector<int>& t) {
      std::vector<Vector> b;
      for (int i : t) b.push_back(unit_vector(d, i));
      CHECK(s.evaluate(b) == naive.at(t));
    });
  }
}

TEST_CASE("repeated arguments vanish and bad arity throws") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  std::mt19937 rng(2);
  const Vector x = random_vector(rng, 4), y = random_vector(rng, 4);
  CHECK(is_zero(f.bracket(std::vector<Vector>{x, x, y})));
  CHECK_THROWS_AS(f.bracket(std::vector<Vector>{x, y}), DimensionError);
  CHECK_THROWS_AS(f.bracket(std::vector<Vector>{x, y, Vector(Vector::Zero(3))}), DimensionError);
}

TEST_CASE("skew storage rejects nonzero repeated tuples") {
  StructureTensor s(3, 2);
  CHECK_NOTHROW(s.set(std::vector<int>{1, 1}, Vector(Vector::Zero(3))));
  CHECK_THROWS_AS(s.set(std::vector<int>{1, 1}, unit_vector(3, 0)), std::invalid_argument);
  s.set(std::vector<int>{2, 0}, unit_vector(3, 1));
  CHECK(s.basis_value(std::vector<int>{0, 2}) == Vector(-unit_vector(3, 1)));
  const auto alg = HomNambuAlgebra(s, Matrix::Identity(3, 3));
  CHECK(check_skew_symmetry(alg).empty());
}

TEST_CASE("perturbed Filippov bracket fails the identity") {
  const auto p = fixture::perturbed_filippov3();
  const auto v = check_hom_nambu_identity(p);
  REQUIRE_FALSE(v.empty());
  CHECK_FALSE(p.flags().hom_nambu_checked);
  CHECK(p.flags().skew_checked);
  CHECK(describe(v.front()).find("hom-nambu identity fails at") == 0);
}

TEST_CASE("doubling one Filippov coefficient keeps the identity") {
  auto base = filippov_algebra(3, {1, 1, 1, 1});
  StructureTensor s = base.structure();
  s.set(std::vector<int>{1, 2, 3}, Vector(Vector::Unit(4, 0) * Rational(2)));
  CHECK(check_hom_nambu_identity(HomNambuAlgebra(s, base.twist())).empty());
}

TEST_CASE("binary identity reduces to Jacobi") {
  const auto lie = fixture::sl2();
  const auto dense = oracle::dense_bracket(3, 2, [&](const std::vector<int>& t) { return lie.structure().basis_value(t); });
  CHECK(oracle::jacobi_holds(dense));
  CHECK(check_hom_nambu_identity(lie).empty());

  std::mt19937 rng(23);
  int agree = 0;
  for (int trial = 0; trial < 30; ++trial) {
    StructureTensor s(3, 2);
    std::uniform_int_distribution<int> c(-1, 1);
    for (const auto& t : s.tuples().tuples()) {
      Vector v(3);
      for (int i = 0; i < 3; ++i) v(i) = c(rng);
      s.set(t, v);
    }
    const HomNambuAlgebra alg(s, Matrix::Identity(3, 3));
    const auto naive = oracle::dense_bracket(3, 2, [&](const std::vector<int>& t) { return s.basis_value(t); });
    agree += check_hom_nambu_identity(alg).empty() == oracle::jacobi_holds(naive);
  }
  CHECK(agree == 30);
}

TEST_CASE("multiplicativity") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  CHECK(check_multiplicativity(f).empty());
  const HomNambuAlgebra zero_twist(f.structure(), Matrix::Zero(4, 4));
  CHECK(check_multiplicativity(zero_twist).empty());
  Matrix scale = Matrix::Identity(4, 4) * Rational(2);
  CHECK_FALSE(check_multiplicativity(HomNambuAlgebra(f.structure(), scale)).empty());
}

TEST_CASE("signed-permutation automorphisms of Filippov algebras") {
  // Counts found by an independent einsum search over all 2^4 * 4! candidates.
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const auto autos = signed_permutation_automorphisms(f);
  CHECK(autos.size() == 192);
  for (const auto& a : autos) CHECK(check_multiplicativity(HomNambuAlgebra(f.structure(), a)).empty());
  CHECK(signed_permutation_automorphisms(filippov_algebra(3, {1, -1, 1, -1})).size() == 64);
}

TEST_CASE("Yau twist") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  CHECK(yau_twist(f, Matrix::Identity(4, 4)) == f);
  const auto z = yau_twist(f, Matrix::Zero(4, 4));
  CHECK(is_zero(z.structure().coefficients()));
  CHECK(z.flags().all());

  const auto t = fixture::twisted_filippov3();
  CHECK(t.flags().all());
  // [e_1..^e_i..e_4]_a = (-1)^{i+1} eps_i a(e_i)
  for (int i = 0; i < 4; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < 4; ++j)
      if (j != i) rest.push_back(j);
    const Vector expected = Rational(i % 2 ? -1 : 1) * Vector(t.twist().col(i));
    CHECK(t.structure().basis_value(rest) == expected);
  }

  Matrix bad = Matrix::Identity(4, 4);
  bad(0, 0) = 2;
  CHECK_THROWS_WITH_AS(yau_twist(f, bad), doctest::Contains("not an endomorphism"), PreconditionError);
  CHECK_THROWS_AS(yau_twist(t, Matrix::Identity(4, 4)), PreconditionError);
}

TEST_CASE("ad matrix") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const Matrix ad = ad_matrix(f, basis_args(4, {0, 1}));
  // [e1,e2,e3] = e3 and [e1,e2,e4] = -e4 (signs eps_3 = eps_4 = +1)
  Matrix expected = Matrix::Zero(4, 4);
  expected(3, 2) = -1;
  expected(2, 3) = 1;
  // Hand expansion: [e1,e2,e3] is the tuple missing e4, value (-1)^{4+1} e4 = -e4;
  // [e1,e2,e4] misses e3, value (-1)^{3+1} e3 = e3.
  CHECK(ad == expected);
  CHECK(is_zero(ad_matrix(f, std::vector<Vector>{unit_vector(4, 0), Vector(Vector::Zero(4))})));
  CHECK(is_zero(ad_matrix(f, basis_args(4, {2, 2}))));
}

TEST_CASE("morphism check") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  for (const auto& a : signed_permutation_automorphisms(f)) CHECK(check_morphism(a, f, f).empty());
  Matrix s = Matrix::Identity(4, 4) * Rational(3);
  CHECK_FALSE(check_morphism(s, f, f).empty());
}

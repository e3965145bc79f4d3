#include "doctest.h"
#include "fixtures.hpp"
#include "nambu/derivations.hpp"
#include "nambu/errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace nambu;

namespace {

Matrix diag(std::initializer_list<int> v) {
  Matrix m = Matrix::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  Index i = 0;
  for (int x : v) m(i, i) = x, ++i;
  return m;
}

/// d^2 minus the rank of the derivation conditions, with the linear map
/// assembled by probing elementary matrices through the naive bracket.
Index oracle_derivation_dim(const HomNambuAlgebra& alg, int level) {
  const int d = alg.dim(), n = alg.arity();
  const auto br = oracle::dense_bracket(d, n, [&](const std::vector<int>& t) { return alg.structure().basis_value(t); });
  const Matrix ak = matrix_power(alg.twist(), level);
  std::vector<Vector> columns;
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) {
      Matrix e = Matrix::Zero(d, d);
      e(r, c) = 1;
      std::vector<Rational> image;
      const Matrix comm = e * alg.twist() - alg.twist() * e;
      for (Index i = 0; i < comm.size(); ++i) image.push_back(comm.data()[i]);
      oracle::for_each_tuple(d, n, [&](const std::vector<int>& t) {
        std::vector<Vector> args;
        for (int i : t) args.push_back(unit_vector(d, i));
        Vector v = e * br.eval(args);
        for (int i = 0; i < n; ++i) {
          std::vector<Vector> a2;
          for (int j = 0; j < n; ++j) a2.push_back(j == i ? Vector(e * args[j]) : Vector(ak * args[j]));
          v -= br.eval(a2);
        }
        for (int i = 0; i < d; ++i) image.push_back(v(i));
      });
      Vector col(static_cast<Index>(image.size()));
      for (std::size_t i = 0; i < image.size(); ++i) col(static_cast<Index>(i)) = image[i];
      columns.push_back(col);
    }
  Matrix m(columns.front().size(), static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Index>(j)) = columns[j];
  return static_cast<Index>(d) * d - oracle::rank(m);
}

std::vector<Vector> basis_args(int d, std::initializer_list<int> idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(unit_vector(d, i));
  return out;
}

}  // namespace

TEST_CASE("derivation space of the zero bracket is End(N)") {
  for (int k = -1; k <= 2; ++k) CHECK(derivation_space(zero_algebra(3, 2), k).dim() == 9);
}

TEST_CASE("zero twist leaves only the derivation rule") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const HomNambuAlgebra z(f.structure(), Matrix::Zero(4, 4));
  CHECK(derivation_space(z, 0).dim() == oracle_derivation_dim(z, 0));
}

TEST_CASE("Filippov derivation algebra") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const auto space = derivation_space(f, 0);
  CHECK(space.dim() == oracle_derivation_dim(f, 0));
  CHECK(space.dim() == 6);
  for (const auto& d : derivation_basis(f, 0)) CHECK(is_derivation(f, d, 0));
  // Level -1: alpha^-1 = 0, so D must kill every bracket; the image of the
  // Filippov bracket is everything, leaving D = 0.
  CHECK(derivation_space(f, -1).dim() == 0);
  CHECK(oracle_derivation_dim(f, -1) == 0);
  CHECK_THROWS_AS(derivation_space(f, -2), std::invalid_argument);
}

TEST_CASE("derivation spaces agree with the probing oracle on twisted algebras") {
  const auto t = fixture::twisted_filippov3();
  const auto d2 = yau_twist(filippov_algebra(3, {1, 1, 1, 1}), diag({1, 1, -1, -1}));
  for (int k = -1; k <= 2; ++k) {
    CHECK(derivation_space(t, k).dim() == oracle_derivation_dim(t, k));
    CHECK(derivation_space(d2, k).dim() == oracle_derivation_dim(d2, k));
  }
  const auto f2 = filippov_algebra(2, {1, -1, 1});
  CHECK(derivation_space(f2, 0).dim() == oracle_derivation_dim(f2, 0));
}

TEST_CASE("inner derivations") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const auto inner = inner_derivation(f, basis_args(4, {0, 1}), 1);
  CHECK(inner.level == 2);
  CHECK(inner.matrix == ad_matrix(f, basis_args(4, {0, 1})));
  CHECK(is_derivation(f, inner.matrix, 2));

  const auto zero = inner_derivation(f, std::vector<Vector>{unit_vector(4, 0), Vector(Vector::Zero(4))}, 1);
  CHECK(is_zero(zero.matrix));

  const auto t = yau_twist(f, diag({1, 1, -1, -1}));
  const auto tin = inner_derivation(t, basis_args(4, {0, 1}), 1);
  CHECK(tin.matrix * t.twist() == t.twist() * tin.matrix);
  CHECK(is_derivation(t, tin.matrix, 2));
  CHECK_THROWS_WITH_AS(inner_derivation(t, basis_args(4, {0, 2}), 1),
                       doctest::Contains("fixed-point precondition violated"), PreconditionError);

  // k = 0 gives an alpha-derivation
  const auto ad0 = inner_derivation(t, basis_args(4, {0, 1}), 0);
  CHECK(ad0.level == 1);
  CHECK(is_derivation(t, ad0.matrix, 1));
  CHECK_THROWS_AS(inner_derivation(t, basis_args(4, {0, 1}), -1), std::invalid_argument);
}

TEST_CASE("commutators of derivations") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const auto basis = derivation_basis(f, 0);
  const Derivation a{basis[0], 0}, b{basis[1], 0};
  CHECK(is_zero(derivation_commutator(f, a, a).matrix));
  const auto ab = derivation_commutator(f, a, b);
  CHECK(ab.level == 0);
  CHECK(contains(derivation_space(f, 0), flatten(ab.matrix)));

  const auto z = zero_algebra(3, 2);
  const Derivation id{Matrix::Identity(3, 3), 0}, other{derivation_basis(z, 0)[4], 0};
  CHECK(is_zero(derivation_commutator(z, other, id).matrix));
  CHECK_THROWS_WITH_AS(derivation_commutator(z, Derivation{Matrix::Identity(3, 3), -1}, Derivation{Matrix::Identity(3, 3), -1}),
                       "level underflow", std::invalid_argument);
  Matrix bad = Matrix::Zero(4, 4);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(derivation_commutator(f, a, Derivation{bad, 0}), PreconditionError);
}

TEST_CASE("derivation commutator satisfies Jacobi") {
  const auto f = filippov_algebra(3, {1, -1, 1, 1});
  const auto b = derivation_basis(f, 0);
  REQUIRE(b.size() >= 3);
  for (std::size_t i = 0; i + 2 < b.size(); ++i) {
    const Matrix &x = b[i], &y = b[i + 1], &z = b[i + 2];
    auto br = [](const Matrix& p, const Matrix& q) { return Matrix(p * q - q * p); };
    CHECK(is_zero(Matrix(br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y))));
  }
}

TEST_CASE("inner derivations are closed under bracketing with derivations") {
  for (const auto& alg : {filippov_algebra(3, {1, 1, 1, 1}), yau_twist(filippov_algebra(3, {1, 1, 1, 1}), diag({1, 1, -1, -1}))}) {
    const auto xs = basis_args(4, {0, 1});
    for (int kp = 0; kp <= 1; ++kp)
      for (const auto& dm : derivation_basis(alg, kp)) {
        const int k = 1;
        const Derivation dd{dm, kp};
        const auto inner = inner_derivation(alg, xs, k);
        const auto comm = derivation_commutator(alg, dd, inner);
        Matrix expected = Matrix::Zero(4, 4);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          auto ys = xs;
          ys[i] = dm * xs[i];
          expected += inner_derivation(alg, ys, k + kp).matrix;
        }
        CHECK(comm.matrix == expected);
      }
  }
}

TEST_CASE("representations") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  CHECK(check_representation(f, zero_representation(f, 2, Matrix::Identity(2, 2))).empty());
  CHECK(check_representation(f, adjoint_representation(f)).empty());
  CHECK(check_representation(fixture::twisted_filippov3(), adjoint_representation(fixture::twisted_filippov3())).empty());
  const auto p = fixture::perturbed_filippov3();
  CHECK_FALSE(check_representation(p, adjoint_representation(p)).empty());

  // Hom-Lie case: rho([x,y]) a = rho(a x) rho(y) - rho(a y) rho(x) for rho = ad.
  const auto lie = fixture::sl2();
  const auto ad = adjoint_representation(lie);
  CHECK(check_representation(lie, ad).empty());
  // The variant with ad(y)(x) on the right-hand side fails by a sign.
  const Matrix lhs = ad.rho[0] * ad.rho[1] - ad.rho[1] * ad.rho[0];
  const Matrix swapped = ad_matrix(lie, std::vector<Vector>{lie.bracket(basis_args(3, {1, 0}))});
  CHECK(lhs == Matrix(-swapped));
}

TEST_CASE("adjoint representation tracks the Hom-Nambu identity") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> c(-1, 1);
  int passing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    StructureTensor s(3, 2);
    for (const auto& t : s.tuples().tuples()) {
      Vector v(3);
      for (int i = 0; i < 3; ++i) v(i) = c(rng);
      s.set(t, v);
    }
    const HomNambuAlgebra alg(s, Matrix::Identity(3, 3));
    const bool identity = check_hom_nambu_identity(alg).empty();
    passing += identity;
    CHECK(check_representation(alg, adjoint_representation(alg)).empty() == identity);
  }
  CHECK(passing > 0);
  const auto autos = signed_permutation_automorphisms(filippov_algebra(3, {1, 1, 1, 1}));
  for (std::size_t i = 0; i < autos.size(); i += 37) {
    const auto t = yau_twist(filippov_algebra(3, {1, 1, 1, 1}), autos[i]);
    CHECK(check_representation(t, adjoint_representation(t)).empty());
  }
}

TEST_CASE("equivalence of representations") {
  const auto f = filippov_algebra(3, {1, 1, 1, 1});
  const auto ad = adjoint_representation(f);
  const Matrix id = Matrix::Identity(4, 4);
  CHECK(check_rep_equivalence(ad, ad, id));
  const auto z = zero_representation(f, 4, id);
  CHECK(check_rep_equivalence(z, z, diag({1, 2, 3, 4})));
  CHECK(check_rep_equivalence(ad, ad, Matrix(id * Rational(2))));
  const Matrix g = signed_permutation_automorphisms(f)[5];
  auto conj = ad;
  for (auto& m : conj.rho) m = g * m * g.transpose();
  CHECK(check_rep_equivalence(ad, conj, g));
  CHECK_FALSE(check_rep_equivalence(ad, z, id));
  CHECK_THROWS_WITH_AS(check_rep_equivalence(ad, ad, Matrix(Matrix::Zero(4, 4))), "singular f", PreconditionError);
}

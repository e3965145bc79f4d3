#include "doctest.h"
#include "fixtures.hpp"
#include "nambu/adjoint_cohomology.hpp"
#include "nambu/errors.hpp"
#include "nambu/complex.hpp"
#include "nambu/io.hpp"

#include <algorithm>
#include <random>

using namespace nambu;

namespace {

int error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("algebra text round trip") {
  for (const auto& alg : {filippov_algebra(3, {1, -1, 1, -1}), fixture::twisted_filippov3(), fixture::sl2(),
                          zero_algebra(2, 2), filippov_algebra(4, {1, 1, 1, -1, 1})}) {
    const std::string text = format_algebra(alg);
    const auto back = parse_algebra(text);
    CHECK(back == alg);
    CHECK(format_algebra(back) == text);
  }
}

TEST_CASE("algebra text format") {
  const auto alg = parse_algebra(
      "# Filippov, n = 2\n"
      "dim = 3\n"
      "arity = 2\n"
      "\n"
      "[2,3] -> 1,0,0\n"
      "[3,1] -> 0,1,0   # any index order\n"
      "[1,2] -> 0,0,1\n"
      "[2,1] -> 0,0,-1  # consistent duplicate\n");
  CHECK(alg == filippov_algebra(2, {1, 1, 1}));
  CHECK(format_algebra(alg) ==
        "dim = 3\narity = 2\ntwist:\n1 0 0\n0 1 0\n0 0 1\n[1,2] -> 0,0,1\n[1,3] -> 0,-1,0\n[2,3] -> 1,0,0\n");
  const auto twisted = parse_algebra("dim = 2\narity = 2\ntwist:\n1/2 0\n0 -3\n[1,2] -> 0,0\n");
  CHECK(twisted.twist()(0, 0) == Rational(1) / 2);
  CHECK(twisted.twist()(1, 1) == -3);
}

TEST_CASE("algebra parse errors carry positions") {
  CHECK(error_line("dim = 3\narity = 2\n[1,2] -> 0,0,1\n[2,1] -> 0,0,1\n") == 4);
  CHECK(error_line("dim = 3\narity = 2\n[1,4] -> 0,0,1\n") == 3);
  CHECK(error_line("dim = 3\narity = 2\n[1,1] -> 0,0,1\n") == 3);
  CHECK(error_line("dim = 3\narity = 2\n[1,2,3] -> 0,0,1\n") == 3);
  CHECK(error_line("dim = 3\narity = 2\n[1,2] -> 0,0\n") == 3);
  CHECK(error_line("dim = 3\narity = 2\n[1,2] -> 0,1/0,1\n") == 3);
  CHECK(error_line("dim = 3\n[1,2] -> 0,0,1\n") == 2);
  CHECK(error_line("dim = 3\ndim = 3\n") == 2);
  CHECK(error_line("dim = 2\narity = 2\ntwist:\n1 0\n") == 5);
  CHECK(error_line("dim = 2\narity = 2\ncolour = 3\n") == 3);
  try {
    parse_algebra("dim = 3\narity = 2\n[1,2] -> 0,0,x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("Leibniz text round trip") {
  for (const auto& alg : {filippov_algebra(3, {1, 1, 1, 1}), fixture::twisted_filippov3()}) {
    const auto leib = build_fundamental(alg);
    const std::string text = format_leibniz(leib);
    const auto back = parse_leibniz(text);
    CHECK(back == leib);
    CHECK(format_leibniz(back) == text);
  }
  CHECK_THROWS_AS(parse_leibniz("dim = 2\n"), ParseError);
}

TEST_CASE("cochain text round trip") {
  std::mt19937 rng(107);
  const auto alg = fixture::twisted_filippov3();
  for (Symmetry sym : {Symmetry::LastBlockSkew, Symmetry::BlockSkew, Symmetry::Tensor})
    for (int p = 0; p <= 2; ++p)
      for (int vd : {1, 4}) {
        Cochain c = Cochain::zero(CochainSpace(4, 3, p, sym, vd));
        c.values = fixture::random_entries(rng, c.values.size());
        const std::string text = format_cochain(c);
        const auto back = parse_cochain(text);
        CHECK(back.space == c.space);
        CHECK(back.values == c.values);
        CHECK(format_cochain(back) == text);
      }
  const auto one = parse_cochain("cochain\ndim = 4\narity = 3\ndegree = 1\nsymmetry = last-block-skew\nvalues = 1\n"
                                 "[2,1,3] -> 5\n");
  CHECK(one.values(0) == -5);
  CHECK_THROWS_AS(parse_cochain("cochain\ndim = 4\narity = 3\ndegree = 1\nsymmetry = diagonal\nvalues = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_cochain("cochain\ndim = 4\narity = 3\ndegree = 1\nsymmetry = tensor\nvalues = 1\n[1,2] -> 1\n"),
                  ParseError);
}

TEST_CASE("several cochains in one file") {
  const auto alg = fixture::twisted_filippov3();
  const NambuComplex c(alg, Coefficients::Trivial);
  const auto z = c.cohomology(1).cocycle_basis;
  std::vector<Cochain> cs;
  for (Index i = 0; i < z.dim(); ++i) cs.emplace_back(c.space(1), z.vector(i));
  const std::string text = format_cochains(cs);
  const auto back = parse_cochains(text);
  REQUIRE(back.size() == cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) CHECK(back[i].values == cs[i].values);
  CHECK(format_cochains(back) == text);
  // positions refer to the whole file
  const std::string bad = text + "cochain\ndim = 4\narity = 3\ndegree = 1\nsymmetry = tensor\nvalues = 1\n[9,1,2] -> 1\n";
  try {
    parse_cochains(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 7);
  }
}

TEST_CASE("representation text round trip") {
  const auto alg = fixture::twisted_filippov3();
  const auto ad = adjoint_representation(alg);
  const std::string text = format_representation(ad);
  const auto back = parse_representation(text);
  CHECK(back.nu == ad.nu);
  CHECK(back.rho == ad.rho);
  CHECK(format_representation(back) == text);
  CHECK(check_representation(alg, back).empty());

  // module of another dimension; a swapped tuple is stored with its sign
  const auto rep = parse_representation(
      "representation\ndim = 3\narity = 2\nmodule = 2\n[2] -> 0,1,0,0\n[3] -> 1,0,0,-1\n");
  CHECK(rep.module_dim == 2);
  CHECK(rep.nu == Matrix::Identity(2, 2));
  CHECK(rep.rho[0] == Matrix::Zero(2, 2));
  CHECK(rep.rho[1](1, 0) == 1);
  CHECK(rep.rho[2](1, 1) == -1);
  const auto skew = parse_representation("representation\ndim = 4\narity = 3\nmodule = 1\n[3,1] -> 5\n");
  CHECK(skew.rho[static_cast<std::size_t>(skew.tuples().index(Tuple{0, 2}))](0, 0) == -5);
  CHECK_THROWS_AS(parse_representation("representation\ndim = 3\narity = 2\nmodule = 2\n[1] -> 1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse_representation("representation\ndim = 3\narity = 2\nmodule = 2\nnu:\n1 0\n"), ParseError);
}

#include "nambu/algebra.hpp"

#include "nambu/errors.hpp"
#include "nambu/multilinear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nambu {

namespace {

std::string format_tuple(const Tuple& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ']';
  return os.str();
}

Tuple with_appended(const Tuple& t, int v) {
  Tuple out = t;
  out.push_back(v);
  return out;
}

bool is_identity(const Matrix& m) {
  return m.rows() == m.cols() && m == Matrix::Identity(m.rows(), m.cols());
}

}  // namespace

StructureTensor::StructureTensor(int dim, int arity) : dim_(dim), arity_(arity) {
  if (dim < 1) throw std::invalid_argument("StructureTensor: dimension must be at least 1");
  if (arity < 2) throw std::invalid_argument("StructureTensor: arity must be at least 2");
  if (arity <= dim) tuples_ = TupleIndex(dim, arity);
  coeffs_ = Matrix::Zero(dim, tuples_.size());
}

Vector StructureTensor::basis_value(std::span<const int> indices) const {
  Tuple sorted(indices.begin(), indices.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0 || tuples_.size() == 0) return Vector::Zero(dim_);
  const Vector col = coeffs_.col(tuples_.index(sorted));
  return sign > 0 ? col : Vector(-col);
}

void StructureTensor::set(std::span<const int> indices, const Vector& value) {
  if (static_cast<int>(indices.size()) != arity_) throw DimensionError("StructureTensor::set: wrong arity");
  if (value.size() != dim_) throw DimensionError("StructureTensor::set: wrong value length");
  for (int i : indices)
    if (i < 0 || i >= dim_) throw DimensionError("StructureTensor::set: index out of range");
  Tuple sorted(indices.begin(), indices.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0) {
    if (!is_zero(value)) throw std::invalid_argument("bracket of a tuple with a repeated index must vanish");
    return;
  }
  const int k = tuples_.index(sorted);
  coeffs_.col(k) = sign > 0 ? value : Vector(-value);
}

Vector StructureTensor::evaluate(std::span<const Vector> args) const {
  if (static_cast<int>(args.size()) != arity_) throw DimensionError("bracket: expected " + std::to_string(arity_) + " arguments");
  for (const auto& a : args)
    if (a.size() != dim_) throw DimensionError("bracket: argument length does not match dimension");
  Vector out = Vector::Zero(dim_);
  if (tuples_.size() == 0) return out;
  for_each_skew_term(args, [&](const Tuple& t, const Rational& w) { out += w * coeffs_.col(tuples_.index(t)); });
  return out;
}

StructureTensor StructureTensor::compose(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) throw DimensionError("compose: map must be d x d");
  StructureTensor out = *this;
  out.coeffs_ = rho * coeffs_;
  return out;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.identity << " fails at";
  for (const auto& t : v.arguments) os << ' ' << format_tuple(t);
  os << "; residual (";
  for (Index i = 0; i < v.residual.size(); ++i) os << (i ? ", " : "") << to_string(v.residual(i));
  os << ')';
  return os.str();
}

HomNambuAlgebra::HomNambuAlgebra(StructureTensor bracket, Matrix twist)
    : bracket_(std::move(bracket)), twist_(std::move(twist)) {
  if (twist_.rows() != bracket_.dim() || twist_.cols() != bracket_.dim())
    throw DimensionError("twist must be a d x d matrix");
}

HomNambuAlgebra HomNambuAlgebra::validated() const {
  HomNambuAlgebra out = *this;
  out.flags_.skew_checked = check_skew_symmetry(*this).empty();
  out.flags_.hom_nambu_checked = check_hom_nambu_identity(*this).empty();
  out.flags_.multiplicative_checked = check_multiplicativity(*this).empty();
  return out;
}

Vector bracket_eval(const HomNambuAlgebra& alg, std::span<const Vector> args) { return alg.bracket(args); }

std::vector<Violation> check_skew_symmetry(const HomNambuAlgebra& alg) {
  std::vector<Violation> out;
  const auto& s = alg.structure();
  const auto perms = signed_permutations(alg.arity());
  for (const auto& t : s.tuples().tuples()) {
    const Vector stored = s.basis_value(t);
    std::vector<Vector> args(t.size());
    for (const auto& [perm, sign] : perms) {
      Tuple permuted(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) permuted[i] = t[static_cast<std::size_t>(perm[i])];
      for (std::size_t i = 0; i < t.size(); ++i) args[i] = unit_vector(alg.dim(), permuted[i]);
      Vector residual = s.evaluate(args) - Rational(sign) * stored;
      if (!is_zero(residual)) out.push_back({"skew-symmetry", {permuted}, residual});
    }
  }
  return out;
}

std::vector<Violation> check_hom_nambu_identity(const HomNambuAlgebra& alg) {
  std::vector<Violation> out;
  const int d = alg.dim();
  const int n = alg.arity();
  if (n > d) return out;  // every bracket vanishes
  const auto& s = alg.structure();
  const TupleIndex xs(d, n - 1);
  std::vector<Vector> alpha_cols(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) alpha_cols[static_cast<std::size_t>(i)] = alg.twist().col(i);

  std::vector<Vector> args(static_cast<std::size_t>(n));
  for (const auto& x : xs.tuples()) {
    for (const auto& y : s.tuples().tuples()) {
      for (int i = 0; i < n - 1; ++i) args[static_cast<std::size_t>(i)] = alpha_cols[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
      args[static_cast<std::size_t>(n - 1)] = s.basis_value(y);
      Vector residual = s.evaluate(args);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) args[static_cast<std::size_t>(j)] = alpha_cols[static_cast<std::size_t>(y[static_cast<std::size_t>(j)])];
        args[static_cast<std::size_t>(i)] = s.basis_value(with_appended(x, y[static_cast<std::size_t>(i)]));
        residual -= s.evaluate(args);
      }
      if (!is_zero(residual)) out.push_back({"hom-nambu identity", {x, y}, residual});
    }
  }
  return out;
}

std::vector<Violation> check_multiplicativity(const HomNambuAlgebra& alg) {
  std::vector<Violation> out;
  const auto& s = alg.structure();
  std::vector<Vector> args(static_cast<std::size_t>(alg.arity()));
  for (const auto& t : s.tuples().tuples()) {
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = alg.twist().col(t[i]);
    Vector residual = alg.twist() * s.basis_value(t) - s.evaluate(args);
    if (!is_zero(residual)) out.push_back({"multiplicativity", {t}, residual});
  }
  return out;
}

std::vector<Violation> check_morphism(const Matrix& f, const HomNambuAlgebra& source,
                                      const HomNambuAlgebra& target) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw DimensionError("check_morphism: map has wrong shape");
  if (source.arity() != target.arity()) throw DimensionError("check_morphism: arities differ");
  std::vector<Violation> out;
  const auto& s = source.structure();
  std::vector<Vector> args(static_cast<std::size_t>(source.arity()));
  for (const auto& t : s.tuples().tuples()) {
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = f.col(t[i]);
    Vector residual = f * s.basis_value(t) - target.bracket(args);
    if (!is_zero(residual)) out.push_back({"morphism bracket", {t}, residual});
  }
  const Matrix twist_defect = f * source.twist() - target.twist() * f;
  for (Index j = 0; j < twist_defect.cols(); ++j)
    if (!is_zero(Vector(twist_defect.col(j)))) out.push_back({"morphism twist", {{static_cast<int>(j)}}, twist_defect.col(j)});
  return out;
}

HomNambuAlgebra yau_twist(const HomNambuAlgebra& nambu, const Matrix& rho) {
  if (rho.rows() != nambu.dim() || rho.cols() != nambu.dim()) throw DimensionError("yau_twist: rho must be d x d");
  if (!is_identity(nambu.twist())) throw PreconditionError("yau_twist: input twist is not the identity");
  if (!check_hom_nambu_identity(nambu).empty()) throw PreconditionError("yau_twist: input is not a Nambu algebra");
  const auto& s = nambu.structure();
  std::vector<Vector> args(static_cast<std::size_t>(nambu.arity()));
  for (const auto& t : s.tuples().tuples()) {
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = rho.col(t[i]);
    if (!is_zero(Vector(rho * s.basis_value(t) - s.evaluate(args))))
      throw PreconditionError("yau_twist: not an endomorphism at " + format_tuple(t));
  }
  return HomNambuAlgebra(s.compose(rho), rho).validated();
}

HomNambuAlgebra filippov_algebra(int arity, const std::vector<int>& signs) {
  const int d = arity + 1;
  if (static_cast<int>(signs.size()) != d) throw DimensionError("filippov_algebra: need n+1 signs");
  for (int e : signs)
    if (e != 1 && e != -1) throw std::invalid_argument("filippov_algebra: signs must be +1 or -1");
  StructureTensor s(d, arity);
  for (int i = 0; i < d; ++i) {
    Tuple rest;
    for (int j = 0; j < d; ++j)
      if (j != i) rest.push_back(j);
    const int value = (i % 2 == 0 ? 1 : -1) * signs[static_cast<std::size_t>(i)];
    s.set(rest, Rational(value) * unit_vector(d, i));
  }
  return HomNambuAlgebra(std::move(s), Matrix::Identity(d, d)).validated();
}

HomNambuAlgebra zero_algebra(int dim, int arity, const Matrix& twist) {
  Matrix a = twist.size() == 0 ? Matrix(Matrix::Identity(dim, dim)) : twist;
  return HomNambuAlgebra(StructureTensor(dim, arity), std::move(a)).validated();
}

Matrix ad_matrix(const HomNambuAlgebra& alg, std::span<const Vector> xs) {
  if (static_cast<int>(xs.size()) != alg.arity() - 1) throw DimensionError("ad_matrix: need n-1 vectors");
  const int d = alg.dim();
  Matrix out(d, d);
  std::vector<Vector> args(xs.begin(), xs.end());
  args.push_back(Vector());
  for (int j = 0; j < d; ++j) {
    args.back() = unit_vector(d, j);
    out.col(j) = alg.bracket(args);
  }
  return out;
}

std::vector<Matrix> signed_permutation_automorphisms(const HomNambuAlgebra& alg) {
  const int d = alg.dim();
  const auto& s = alg.structure();
  std::vector<Matrix> out;
  Tuple perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      auto sign_of = [mask](int i) { return (mask >> i) & 1 ? -1 : 1; };
      bool ok = true;
      for (const auto& t : s.tuples().tuples()) {
        Tuple image(t.size());
        int sign = 1;
        for (std::size_t i = 0; i < t.size(); ++i) {
          image[i] = perm[static_cast<std::size_t>(t[i])];
          sign *= sign_of(t[i]);
        }
        const Vector lhs = s.basis_value(t);
        const Vector rhs = Rational(sign) * s.basis_value(image);
        for (int r = 0; r < d && ok; ++r) {
          // f(lhs) component perm[r] equals sign_of(r) * lhs(r)
          if (!(Rational(sign_of(r)) * lhs(r) == rhs(perm[static_cast<std::size_t>(r)]))) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      Matrix f = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) f(perm[static_cast<std::size_t>(i)], i) = sign_of(i);
      if (f * alg.twist() != alg.twist() * f) continue;
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace nambu

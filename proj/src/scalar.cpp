#include "nambu/scalar.hpp"

#include <cctype>

namespace nambu {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!all_digits(num)) return false;
  Integer p{std::string(num)};
  Integer q(1);
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) return false;
    q = Integer(std::string(den));
    if (q.is_zero()) return false;
  }
  out = Rational(p, q);
  if (negative) out = -out;
  return true;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_zero(const SparseMatrix& m) {
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      if (!it.value().is_zero()) return false;
  return true;
}

Matrix matrix_power(const Matrix& a, int k) {
  if (k < 0) return Matrix::Zero(a.rows(), a.cols());
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) result = (result * a).eval();
  return result;
}

}  // namespace nambu

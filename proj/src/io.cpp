#include "nambu/io.hpp"

#include "nambu/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace nambu {

namespace {

/// One significant line with a column-tracking cursor.
class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  int line() const { return line_; }
  int column() const { return static_cast<int>(pos_) + 1; }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(column()) + ": " + what, line_,
                     column());
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '+' ||
                                   text_[pos_] == '-' || text_[pos_] == '/'))
      ++pos_;
    Rational q;
    if (!parse_rational(text_.substr(start, pos_ - start), q)) {
      pos_ = start;
      fail("malformed rational");
    }
    return q;
  }

  void end() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

/// Significant lines (comments stripped, blank lines skipped).
std::vector<Cursor> significant_lines(std::string_view text) {
  std::vector<Cursor> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c(line, number);
    if (!c.done()) out.push_back(c);
  }
  return out;
}

struct Entry {
  Tuple indices;  // 0-based, as written
  Vector values;
  Cursor at;
};

/// Shared reader: header `key = integer | word` lines, an optional square
/// matrix block (`twist:` sized by `dim` unless told otherwise), and
/// `[...] -> ...` entries.
struct Document {
  std::map<std::string, std::pair<std::string, int>> header;  // value text, line
  std::optional<Matrix> twist;
  std::vector<Entry> entries;
};

Document read_document(std::string_view text, std::string_view kind, const std::vector<std::string>& keys,
                       const std::function<int(const Document&)>& value_len,
                       const std::function<int(const Document&)>& index_bound,
                       const std::string& block_key = "twist", const std::string& block_dim_key = "dim") {
  Document doc;
  auto lines = significant_lines(text);
  std::size_t i = 0;
  if (!kind.empty()) {
    if (lines.empty()) throw ParseError("empty input: expected '" + std::string(kind) + "'", 1, 1);
    Cursor& c = lines[0];
    if (c.word() != kind) c.fail("expected '" + std::string(kind) + "'");
    c.end();
    i = 1;
  }
  for (; i < lines.size(); ++i) {
    Cursor& c = lines[i];
    if (c.peek() == '[') {
      if (doc.header.size() < keys.size()) c.fail("entry before the header is complete");
      c.expect('[');
      Entry e{{}, {}, c};
      const int bound = index_bound(doc);
      do {
        const int v = c.integer();
        if (v < 1 || v > bound) c.fail("index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
        e.indices.push_back(v - 1);
      } while (c.accept(','));
      c.expect(']');
      c.expect("->");
      std::vector<Rational> vals;
      do vals.push_back(c.rational());
      while (c.accept(','));
      c.end();
      const int len = value_len(doc);
      if (static_cast<int>(vals.size()) != len)
        c.fail("expected " + std::to_string(len) + " values, got " + std::to_string(vals.size()));
      e.values = Vector(len);
      for (int k = 0; k < len; ++k) e.values(k) = vals[static_cast<std::size_t>(k)];
      doc.entries.push_back(std::move(e));
      continue;
    }
    const std::string key(c.word());
    if (key == block_key) {
      c.expect(':');
      c.end();
      if (!doc.header.count(block_dim_key)) c.fail(key + " before " + block_dim_key);
      if (doc.twist) c.fail(key + " given twice");
      if (!doc.entries.empty()) c.fail(key + " after entries");
      const int d = doc.header.at(block_dim_key).second;
      Matrix t(d, d);
      for (int r = 0; r < d; ++r) {
        if (++i >= lines.size() || lines[i].peek() == '[') {
          const int line = i < lines.size() ? lines[i].line() : lines.back().line() + 1;
          throw ParseError("line " + std::to_string(line) + ": expected " + std::to_string(d) + " " + key + " rows", line, 1);
        }
        Cursor& row = lines[i];
        for (int k = 0; k < d; ++k) {
          if (row.done()) row.fail(key + " row has fewer than " + std::to_string(d) + " entries");
          t(r, k) = row.rational();
        }
        row.end();
      }
      doc.twist = std::move(t);
      continue;
    }
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) c.fail("unknown keyword '" + key + "'");
    if (doc.header.count(key)) c.fail(key + " given twice");
    if (!doc.entries.empty()) c.fail(key + " after entries");
    c.expect('=');
    const char next = c.peek();
    if (std::isdigit(static_cast<unsigned char>(next))) {
      const int v = c.integer();
      doc.header[key] = {std::to_string(v), v};
    } else {
      doc.header[key] = {std::string(c.word()), 0};
    }
    c.end();
  }
  for (const auto& k : keys)
    if (!doc.header.count(k)) {
      const int line = lines.empty() ? 1 : lines.back().line();
      throw ParseError("missing '" + k + "'", line, 1);
    }
  return doc;
}

int header_int(const Document& doc, const std::string& key, int minimum, int line_hint = 1) {
  const auto& [text, v] = doc.header.at(key);
  if (v < minimum || std::to_string(v) != text)
    throw ParseError(key + " must be an integer >= " + std::to_string(minimum), line_hint, 1);
  return v;
}

std::string format_tuple_1(std::span<const int> t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + "]";
}

std::string format_values(const Vector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s;
}

void format_twist(std::ostringstream& os, const Matrix& t) {
  os << "twist:\n" << format_matrix(t);
}

/// Normalizes entries through `locate` (sign, slot) and rejects conflicts.
template <class Locate, class Store>
void collect(const std::vector<Entry>& entries, Locate&& locate, Store&& store) {
  std::map<Index, std::pair<Vector, int>> seen;
  for (const auto& e : entries) {
    const auto [sign, slot] = locate(e);
    if (sign == 0) {
      if (!is_zero(e.values)) e.at.fail("nonzero value on arguments that vanish by symmetry " + format_tuple_1(e.indices));
      continue;
    }
    Vector v = sign > 0 ? e.values : Vector(-e.values);
    if (auto it = seen.find(slot); it != seen.end()) {
      if (it->second.first != v)
        e.at.fail("inconsistent duplicate entry " + format_tuple_1(e.indices) + " (first given on line " +
                  std::to_string(it->second.second) + ")");
      continue;
    }
    seen.emplace(slot, std::make_pair(v, e.at.line()));
    store(slot, v);
  }
}

}  // namespace

HomNambuAlgebra parse_algebra(std::string_view text) {
  const auto doc = read_document(
      text, "", {"dim", "arity"}, [](const Document& d) { return d.header.at("dim").second; },
      [](const Document& d) { return d.header.at("dim").second; });
  const int d = header_int(doc, "dim", 1);
  const int n = header_int(doc, "arity", 2);
  StructureTensor s(d, n);
  collect(
      doc.entries,
      [&](const Entry& e) -> std::pair<int, Index> {
        if (static_cast<int>(e.indices.size()) != n)
          e.at.fail("bracket needs " + std::to_string(n) + " indices, got " + std::to_string(e.indices.size()));
        Tuple t = e.indices;
        const int sign = sort_with_sign(t);
        if (sign == 0) return {0, 0};
        return {sign, s.tuples().index(t)};
      },
      [&](Index slot, const Vector& v) { s.set(s.tuples().tuple(static_cast<int>(slot)), v); });
  Matrix twist = doc.twist ? *doc.twist : Matrix(Matrix::Identity(d, d));
  return HomNambuAlgebra(std::move(s), std::move(twist));
}

std::string format_algebra(const HomNambuAlgebra& alg) {
  std::ostringstream os;
  os << "dim = " << alg.dim() << "\narity = " << alg.arity() << '\n';
  format_twist(os, alg.twist());
  const auto& s = alg.structure();
  for (int k = 0; k < s.tuples().size(); ++k) {
    const Vector v = s.coefficients().col(k);
    if (!is_zero(v)) os << format_tuple_1(s.tuples().tuple(k)) << " -> " << format_values(v) << '\n';
  }
  return os.str();
}

HomLeibnizAlgebra parse_leibniz(std::string_view text) {
  const auto doc = read_document(
      text, "leibniz", {"dim"}, [](const Document& d) { return d.header.at("dim").second; },
      [](const Document& d) { return d.header.at("dim").second; });
  const int D = header_int(doc, "dim", 1);
  Matrix constants = Matrix::Zero(D, static_cast<Index>(D) * D);
  collect(
      doc.entries,
      [&](const Entry& e) -> std::pair<int, Index> {
        if (e.indices.size() != 2) e.at.fail("Leibniz entries take two indices");
        return {1, static_cast<Index>(e.indices[0]) * D + e.indices[1]};
      },
      [&](Index slot, const Vector& v) { constants.col(slot) = v; });
  Matrix twist = doc.twist ? *doc.twist : Matrix(Matrix::Identity(D, D));
  return HomLeibnizAlgebra(std::move(constants), std::move(twist));
}

std::string format_leibniz(const HomLeibnizAlgebra& leib) {
  std::ostringstream os;
  const int D = leib.dim();
  os << "leibniz\ndim = " << D << '\n';
  format_twist(os, leib.twist());
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      const Vector v = leib.basis_bracket(a, b);
      if (!is_zero(v)) os << '[' << a + 1 << ',' << b + 1 << "] -> " << format_values(v) << '\n';
    }
  return os.str();
}

Cochain parse_cochain(std::string_view text) {
  const std::vector<std::string> keys{"dim", "arity", "degree", "symmetry", "values"};
  const auto doc = read_document(
      text, "cochain", keys, [](const Document& d) { return d.header.at("values").second; },
      [](const Document& d) { return d.header.at("dim").second; });
  const int d = header_int(doc, "dim", 1);
  const int n = header_int(doc, "arity", 2);
  const int p = header_int(doc, "degree", 0);
  const int vd = header_int(doc, "values", 1);
  if (vd != 1 && vd != d) throw ParseError("values must be 1 or dim", 1, 1);
  Symmetry sym;
  try {
    sym = parse_symmetry(doc.header.at("symmetry").first);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  if (doc.twist) throw ParseError("cochain files take no twist", 1, 1);
  Cochain c = Cochain::zero(CochainSpace(d, n, p, sym, vd));
  const int nargs = p * (n - 1) + 1;
  collect(
      doc.entries,
      [&](const Entry& e) -> std::pair<int, Index> {
        if (static_cast<int>(e.indices.size()) != nargs)
          e.at.fail("entry needs " + std::to_string(nargs) + " arguments, got " + std::to_string(e.indices.size()));
        return c.space.locate_flat(e.indices);
      },
      [&](Index slot, const Vector& v) { c.values.segment(slot * vd, vd) = v; });
  return c;
}

std::string format_cochain(const Cochain& c) {
  const auto& s = c.space;
  std::ostringstream os;
  os << "cochain\ndim = " << s.dim() << "\narity = " << s.arity() << "\ndegree = " << s.degree()
     << "\nsymmetry = " << to_string(s.symmetry()) << "\nvalues = " << s.value_dim() << '\n';
  const int vd = s.value_dim();
  // canonical tuples in increasing order of their flat arguments
  std::vector<std::pair<Tuple, Index>> rows;
  for (Index b = 0; b < s.basis_count(); ++b) {
    if (is_zero(Vector(c.values.segment(b * vd, vd)))) continue;
    rows.emplace_back(s.flat_arguments(b), b);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [flat, b] : rows)
    os << format_tuple_1(flat) << " -> " << format_values(c.values.segment(b * vd, vd)) << '\n';
  return os.str();
}

std::vector<Cochain> parse_cochains(std::string_view text) {
  // Each document is parsed on its own, padded with blank lines so that
  // error positions refer to the whole file.
  std::vector<Cochain> out;
  std::string chunk;
  int line = 0;
  int chunk_start = 0;
  bool has_header = false;
  auto flush = [&] {
    if (chunk.find_first_not_of(" \t\r\n") == std::string::npos) return;
    out.push_back(parse_cochain(std::string(static_cast<std::size_t>(chunk_start), '\n') + chunk));
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view l = text.substr(pos, end - pos);
    const auto first = l.find_first_not_of(" \t\r");
    const auto last = l.find_last_not_of(" \t\r");
    if (first != std::string_view::npos && l.substr(first, last - first + 1) == "cochain") {
      if (has_header) {
        flush();
        chunk.clear();
        chunk_start = line;
      }
      has_header = true;
    }
    chunk.append(l).push_back('\n');
    ++line;
    pos = end + 1;
  }
  flush();
  return out;
}

std::string format_cochains(const std::vector<Cochain>& cs) {
  std::string s;
  for (const auto& c : cs) s += format_cochain(c);
  return s;
}

RepresentationMap parse_representation(std::string_view text) {
  const auto doc = read_document(
      text, "representation", {"dim", "arity", "module"},
      [](const Document& d) { return d.header.at("module").second * d.header.at("module").second; },
      [](const Document& d) { return d.header.at("dim").second; }, "nu", "module");
  RepresentationMap rep;
  rep.algebra_dim = header_int(doc, "dim", 1);
  rep.arity = header_int(doc, "arity", 2);
  rep.module_dim = header_int(doc, "module", 1);
  const int m = rep.module_dim;
  const TupleIndex tuples = rep.tuples();
  rep.rho.assign(static_cast<std::size_t>(tuples.size()), Matrix::Zero(m, m));
  collect(
      doc.entries,
      [&](const Entry& e) -> std::pair<int, Index> {
        if (static_cast<int>(e.indices.size()) != rep.arity - 1)
          e.at.fail("rho needs " + std::to_string(rep.arity - 1) + " indices, got " + std::to_string(e.indices.size()));
        Tuple t = e.indices;
        const int sign = sort_with_sign(t);
        if (sign == 0) return {0, 0};
        return {sign, tuples.index(t)};
      },
      [&](Index slot, const Vector& v) { rep.rho[static_cast<std::size_t>(slot)] = unflatten(v, m, m); });
  rep.nu = doc.twist ? *doc.twist : Matrix(Matrix::Identity(m, m));
  return rep;
}

std::string format_representation(const RepresentationMap& rep) {
  std::ostringstream os;
  os << "representation\ndim = " << rep.algebra_dim << "\narity = " << rep.arity << "\nmodule = " << rep.module_dim
     << "\nnu:\n"
     << format_matrix(rep.nu);
  const TupleIndex tuples = rep.tuples();
  for (int k = 0; k < tuples.size(); ++k) {
    const Matrix& r = rep.rho[static_cast<std::size_t>(k)];
    if (!is_zero(r)) os << format_tuple_1(tuples.tuple(k)) << " -> " << format_values(flatten(r)) << '\n';
  }
  return os.str();
}

std::string format_matrix(const Matrix& m) {
  std::string s;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) s += (j ? " " : "") + to_string(m(i, j));
    s += '\n';
  }
  return s;
}

Matrix parse_matrix(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty matrix", 1, 1);
  std::vector<std::vector<Rational>> rows;
  for (auto& c : lines) {
    std::vector<Rational> row;
    while (!c.done()) row.push_back(c.rational());
    if (!rows.empty() && row.size() != rows.front().size())
      c.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Vector parse_vector(std::string_view text) {
  Cursor c(text, 1);
  std::vector<Rational> vals;
  if (!c.done()) {
    do vals.push_back(c.rational());
    while (c.accept(','));
  }
  c.end();
  Vector v(static_cast<Index>(vals.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = vals[static_cast<std::size_t>(i)];
  return v;
}

Symmetry parse_symmetry(std::string_view name) {
  for (Symmetry s : {Symmetry::LastBlockSkew, Symmetry::BlockSkew, Symmetry::Tensor})
    if (name == to_string(s)) return s;
  throw std::invalid_argument("unknown symmetry '" + std::string(name) + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace nambu

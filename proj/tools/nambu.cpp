// nambu: command-line front end for Hom-Nambu algebra files.
//
// Exit codes: 0 all checks pass, 1 usage or I/O error, 2 parse or dimension
// error, 3 a requested check failed, 4 a precondition was violated.

#include "nambu/adjoint_cohomology.hpp"
#include "nambu/algebra.hpp"
#include "nambu/complex.hpp"
#include "nambu/derivations.hpp"
#include "nambu/errors.hpp"
#include "nambu/fundamental.hpp"
#include "nambu/io.hpp"
#include "nambu/leibniz_bridge.hpp"
#include "nambu/parallel.hpp"
#include "nambu/scalar_cohomology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace nambu;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kValidation = 3, kPrecondition = 4 };

json to_json(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vector(m.row(i).transpose())));
  return a;
}

std::string join(const Vector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s;
}

std::string tuple_text(std::span<const int> t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + "]";
}

// Collects a report and renders it as a table or as JSON.
class Report {
 public:
  Report(std::string command, bool as_json) : as_json_(as_json) {
    doc_["command"] = std::move(command);
    start_ = std::chrono::steady_clock::now();
  }

  void algebra(const HomNambuAlgebra& alg) {
    const auto f = alg.flags();
    doc_["algebra"] = {{"dim", alg.dim()},
                       {"arity", alg.arity()},
                       {"flags", {{"skew", f.skew_checked}, {"hom_nambu", f.hom_nambu_checked},
                                  {"multiplicative", f.multiplicative_checked}}}};
  }

  void check(const std::string& name, bool passed, const std::string& witness = "") {
    json c = {{"name", name}, {"passed", passed}};
    if (!witness.empty()) c["witness"] = witness;
    doc_["checks"].push_back(std::move(c));
    failed_ = failed_ || !passed;
  }

  void check(const std::string& name, const std::vector<Violation>& violations) {
    check(name, violations.empty(), violations.empty() ? "" : describe(violations.front()));
  }

  json& result(const std::string& key) { return doc_["results"][key]; }
  // Extra table text printed after the result fields.
  void block(const std::string& title, const std::string& text) { blocks_.emplace_back(title, text); }

  bool failed() const { return failed_; }

  void print(std::ostream& os) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    doc_["timing_ms"] = ms;
    doc_["workers"] = worker_count();
    if (as_json_) {
      os << doc_.dump(2) << '\n';
      return;
    }
    const auto label = [&os](const std::string& l) -> std::ostream& { return os << std::left << std::setw(static_cast<int>(std::max<std::size_t>(14, l.size() + 1))) << l; };
    label("command") << doc_["command"].get<std::string>() << '\n';
    if (doc_.contains("algebra")) {
      const auto& a = doc_["algebra"];
      const auto yes = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
      label("algebra") << "d=" << a["dim"] << " n=" << a["arity"] << " skew=" << yes(a["flags"]["skew"])
         << " hom-nambu=" << yes(a["flags"]["hom_nambu"]) << " multiplicative=" << yes(a["flags"]["multiplicative"])
         << '\n';
    }
    if (doc_.contains("checks"))
      for (const auto& c : doc_["checks"]) {
        label("check") << std::left << std::setw(36) << c["name"].get<std::string>()
           << (c["passed"].get<bool>() ? "PASS" : "FAIL");
        if (c.contains("witness")) os << "  " << c["witness"].get<std::string>();
        os << '\n';
      }
    if (doc_.contains("results"))
      for (const auto& [k, v] : doc_["results"].items())
        if (!v.is_array() && !v.is_object())
          label(k) << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (const auto& [title, text] : blocks_) os << title << '\n' << text;
    label("time") << std::fixed << std::setprecision(1) << ms << " ms\n";
  }

 private:
  bool as_json_;
  bool failed_ = false;
  json doc_;
  std::vector<std::pair<std::string, std::string>> blocks_;
  std::chrono::steady_clock::time_point start_;
};

// Reads and parses a file, prefixing parse errors with its path.
template <class Parse>
auto load(const std::string& path, Parse&& parse) {
  const std::string text = read_text(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  } catch (const DimensionError& e) {
    throw DimensionError(path + ": " + e.what());
  }
}

HomNambuAlgebra load_algebra(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_algebra(t); }).validated();
}

Cochain load_cochain(const std::string& path, int index) {
  const auto all = load(path, [](const std::string& t) { return parse_cochains(t); });
  if (index < 1 || index > static_cast<int>(all.size()))
    throw std::runtime_error(path + ": holds " + std::to_string(all.size()) + " cochain(s), index " +
                             std::to_string(index) + " requested");
  return all[static_cast<std::size_t>(index - 1)];
}

void report_validation(Report& r, const HomNambuAlgebra& alg) {
  r.check("skew-symmetry", check_skew_symmetry(alg));
  r.check("hom-nambu identity", check_hom_nambu_identity(alg));
  r.check("multiplicativity", check_multiplicativity(alg));
}

void write_output(Report& r, const std::string& path, const std::string& text) {
  write_text(path, text);
  r.result("output") = path;
}

struct Options {
  bool json = false;
  std::string file;
  std::string output;
  std::string rho;
  int level = 0;
  bool tensor = false;
  std::string coefficients = "trivial";
  int degree = 1;
  std::string symmetry = "last-block-skew";
  std::string cochain;
  int index = 1;
  std::string lambda;
  std::string c = "1";
  bool ternary = false;
  std::uint64_t seed = 1;
  int arity = 3;
  std::string signs;
  std::string representation;
};

int cmd_validate(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  report_validation(r, alg);
  if (!o.representation.empty()) {
    const auto rep = load(o.representation, [](const std::string& t) { return parse_representation(t); });
    if (rep.algebra_dim != alg.dim() || rep.arity != alg.arity())
      throw DimensionError(o.representation + ": representation of a d=" + std::to_string(rep.algebra_dim) +
                           ", n=" + std::to_string(rep.arity) + " algebra");
    r.result("module_dim") = rep.module_dim;
    r.check("representation identity", check_representation(alg, rep));
  }
  return kOk;
}

int cmd_twist(const Options& o, Report& r) {
  const auto base = load_algebra(o.file);
  const Matrix rho = load(o.rho, [](const std::string& t) { return parse_matrix(t); });
  const auto twisted = yau_twist(base, rho).validated();
  r.algebra(twisted);
  report_validation(r, twisted);
  write_output(r, o.output, format_algebra(twisted));
  return kOk;
}

int cmd_derivations(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  const auto basis = derivation_basis(alg, o.level);
  r.result("level") = o.level;
  r.result("dimension") = basis.size();
  json mats = json::array();
  std::string text;
  bool all_ok = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    mats.push_back(to_json(basis[i]));
    text += "D" + std::to_string(i + 1) + ":\n" + format_matrix(basis[i]);
    all_ok = all_ok && is_derivation(alg, basis[i], o.level);
  }
  r.result("basis") = std::move(mats);
  r.check("basis elements are derivations", all_ok);
  if (!basis.empty()) r.block("basis", text);
  return kOk;
}

int cmd_fundamental(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  const auto leib = o.tensor ? build_tensor_fundamental(alg) : build_fundamental(alg);
  r.result("leibniz_dim") = leib.dim();
  r.result("blocks") = o.tensor ? "tensor" : "wedge";
  r.check("hom-leibniz identity", check_hom_leibniz(leib));
  r.check("adjoint action lemma", check_lemma_3_1(alg));
  write_output(r, o.output, format_leibniz(leib));
  return kOk;
}

int cmd_cohomology(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  if (!alg.flags().all()) throw PreconditionError("cohomology: algebra does not validate (run `validate` for details)");
  const bool adjoint = o.coefficients == "adjoint";
  const Symmetry sym = parse_symmetry(o.symmetry);
  const NambuComplex complex(alg, adjoint ? Coefficients::Adjoint : Coefficients::Trivial, sym);
  const CohomologyReport rep = complex.cohomology(o.degree);
  r.result("coefficients") = o.coefficients;
  r.result("symmetry") = to_string(sym);
  r.result("degree") = o.degree;
  r.result("dim_C") = rep.dim_C;
  r.result("dim_Z") = rep.dim_Z;
  r.result("dim_B") = rep.dim_B;
  r.result("dim_H") = rep.dim_H;
  if (rep.dim_H_without_degree0) r.result("dim_H_no_d0") = *rep.dim_H_without_degree0;
  if (o.degree >= 1)
    r.check("delta^" + std::to_string(o.degree) + " o delta^" + std::to_string(o.degree - 1) + " = 0",
            is_zero(SparseMatrix(complex.coboundary_matrix(o.degree) * complex.restricted_coboundary(o.degree - 1))));
  if (!o.output.empty()) {
    std::vector<Cochain> cs;
    for (Index i = 0; i < rep.cocycle_basis.dim(); ++i)
      cs.emplace_back(complex.space(o.degree), rep.cocycle_basis.vector(i));
    write_output(r, o.output, format_cochains(cs));
  }
  return kOk;
}

int cmd_extend(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  const Cochain phi = load_cochain(o.cochain, o.index);
  Rational c;
  if (!parse_rational(o.c, c)) throw ParseError("--c: malformed rational '" + o.c + "'", 1, 1);
  const Vector lambda = o.lambda.empty() ? Vector() : parse_vector(o.lambda);
  const auto ext = central_extension(alg, phi, lambda, c);
  const auto out = ext.algebra.validated();
  r.algebra(out);
  r.check("skew-symmetry", check_skew_symmetry(out));
  r.check("hom-nambu identity", check_hom_nambu_identity(out));
  r.result("twist_multiplicative") = ext.twist_multiplicative;
  write_output(r, o.output, format_algebra(out));
  return kOk;
}

int cmd_deform_check(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  const Cochain psi = load_cochain(o.cochain, o.index);
  const auto v = check_infinitesimal_deformation(alg, psi);
  r.check("cocycle", v.cocycle);
  r.check("t-linear residual vanishes", v.residual_vanishes, v.witness ? describe(*v.witness) : "");
  r.check("both paths agree", v.agree());
  return kOk;
}

int cmd_bridge_check(const Options& o, Report& r) {
  const auto alg = load_algebra(o.file);
  r.algebra(alg);
  Cochain phi;
  if (!o.cochain.empty()) {
    phi = pullback_to_tensor(load_cochain(o.cochain, o.index));
    r.result("cochain") = o.cochain;
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    phi = random_equivariant_cochain(tensor_complex(alg), o.degree, [&] { return Rational(dist(rng)); });
    r.result("seed") = o.seed;
  }
  r.result("degree") = phi.space.degree();
  const auto v = check_commuting_square(alg, phi, o.ternary);
  r.check("commuting square holds", v.holds);
  if (o.ternary) {
    const auto general = delta_lift(alg, phi);
    r.check("ternary and n-ary lifts agree", general.values == delta_lift_ternary(alg, phi).values);
  }
  if (!v.holds) {
    // tuple -> vector over the tensor block basis
    const auto& res = v.residual;
    json rows = json::object();
    std::string text;
    for (Index k = 0; k < res.values.cols(); ++k) {
      const Vector col = res.values.col(k);
      if (is_zero(col)) continue;
      std::vector<int> t(static_cast<std::size_t>(res.degree + 1));
      Index rest = k;
      for (auto it = t.rbegin(); it != t.rend(); ++it) {
        *it = static_cast<int>(rest % res.dim);
        rest /= res.dim;
      }
      rows[tuple_text(t)] = to_json(col);
      text += tuple_text(t) + " -> " + join(col) + '\n';
    }
    r.result("residual") = std::move(rows);
    r.block("residual", text);
  }
  return kOk;
}

int cmd_filippov(const Options& o, Report& r) {
  const Vector s = parse_vector(o.signs);
  std::vector<int> signs;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) != 1 && s(i) != -1) throw ParseError("--signs: entries must be 1 or -1", 1, 1);
    signs.push_back(s(i) == 1 ? 1 : -1);
  }
  if (static_cast<int>(signs.size()) != o.arity + 1)
    throw DimensionError("--signs: expected " + std::to_string(o.arity + 1) + " entries");
  auto alg = filippov_algebra(o.arity, signs);
  if (!o.rho.empty()) alg = yau_twist(alg, load(o.rho, [](const std::string& t) { return parse_matrix(t); }));
  alg = alg.validated();
  r.algebra(alg);
  report_validation(r, alg);
  write_output(r, o.output, format_algebra(alg));
  return kOk;
}

std::string command_echo(int argc, char** argv) {
  std::string s = "nambu";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-Nambu algebras: validation, derivations, cohomology, extensions and deformations"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable report");

  auto* validate = app.add_subcommand("validate", "Check skew-symmetry, the Hom-Nambu identity and multiplicativity");
  validate->add_option("file", o.file, "Algebra file")->required();
  validate->add_option("--representation", o.representation, "Also check a representation file");

  auto* twist = app.add_subcommand("twist", "Yau twist of a Nambu algebra by an endomorphism");
  twist->add_option("file", o.file, "Algebra file (twist = id)")->required();
  twist->add_option("--rho", o.rho, "Matrix file of the endomorphism")->required();
  twist->add_option("-o,--output", o.output, "Output algebra file")->required();

  auto* derivations = app.add_subcommand("derivations", "Basis of the alpha^k-derivations");
  derivations->add_option("file", o.file, "Algebra file")->required();
  derivations->add_option("--level", o.level, "k >= -1")->check(CLI::Range(-1, 64));

  auto* fundamental = app.add_subcommand("fundamental", "Export the Hom-Leibniz algebra of fundamental objects");
  fundamental->add_option("file", o.file, "Algebra file")->required();
  fundamental->add_flag("--tensor", o.tensor, "Ordered tensor blocks instead of wedges");
  fundamental->add_option("-o,--output", o.output, "Output Leibniz file")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Dimensions of C, Z, B, H in one degree");
  cohomology->add_option("file", o.file, "Algebra file")->required();
  cohomology->add_option("--coefficients", o.coefficients)->check(CLI::IsMember({"trivial", "adjoint"}));
  cohomology->add_option("--degree", o.degree)->check(CLI::Range(0, 16));
  cohomology->add_option("--symmetry", o.symmetry)->check(CLI::IsMember({"last-block-skew", "block-skew", "tensor"}));
  cohomology->add_option("-o,--output", o.output, "Write the cocycle basis as cochain documents");

  auto* extend = app.add_subcommand("extend", "Central extension by a scalar 1-cocycle");
  extend->add_option("file", o.file, "Algebra file")->required();
  extend->add_option("--cocycle", o.cochain, "Cochain file")->required();
  extend->add_option("--index", o.index, "Which cochain of the file (1-based)");
  extend->add_option("--lambda", o.lambda, "Twist covector, comma-separated");
  extend->add_option("--c", o.c, "beta(e) = c e");
  extend->add_option("-o,--output", o.output, "Output algebra file")->required();

  auto* deform = app.add_subcommand("deform-check", "Compare delta^1 psi = 0 with the dual-number residual");
  deform->add_option("file", o.file, "Algebra file")->required();
  deform->add_option("--cochain", o.cochain, "Adjoint 1-cochain file")->required();
  deform->add_option("--index", o.index, "Which cochain of the file (1-based)");

  auto* bridge = app.add_subcommand("bridge-check", "Check d o D = D o delta on an equivariant cochain");
  bridge->add_option("file", o.file, "Algebra file")->required();
  bridge->add_option("--degree", o.degree, "Degree of the random cochain")->check(CLI::Range(0, 8));
  bridge->add_flag("--ternary", o.ternary, "Use the n = 3 formula for D");
  bridge->add_option("--cochain", o.cochain, "Equivariant adjoint cochain file instead of a random one");
  bridge->add_option("--index", o.index, "Which cochain of the file (1-based)");
  bridge->add_option("--seed", o.seed, "Seed of the random cochain");

  auto* filippov = app.add_subcommand("filippov", "Write a Filippov algebra, optionally Yau-twisted");
  filippov->add_option("--arity", o.arity)->check(CLI::Range(2, 8));
  filippov->add_option("--signs", o.signs, "n+1 entries of 1 or -1, comma-separated")->required();
  filippov->add_option("--rho", o.rho, "Matrix file of an endomorphism to twist by");
  filippov->add_option("-o,--output", o.output, "Output algebra file")->required();

  CLI11_PARSE(app, argc, argv);

  Report report(command_echo(argc, argv), o.json);
  int code = kOk;
  try {
    if (*validate) code = cmd_validate(o, report);
    else if (*twist) code = cmd_twist(o, report);
    else if (*derivations) code = cmd_derivations(o, report);
    else if (*fundamental) code = cmd_fundamental(o, report);
    else if (*cohomology) code = cmd_cohomology(o, report);
    else if (*extend) code = cmd_extend(o, report);
    else if (*deform) code = cmd_deform_check(o, report);
    else if (*bridge) code = cmd_bridge_check(o, report);
    else if (*filippov) code = cmd_filippov(o, report);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  report.print(std::cout);
  if (code == kOk && report.failed()) code = kValidation;
  return code;
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "superform/fock.hpp"
#include "superform/form_io.hpp"
#include "superform/invariants.hpp"
#include "superform/reduction.hpp"
#include "superform/superalgebra.hpp"
#include "superform/uea.hpp"

#ifndef SUPERFORM_DATA_DIR
#define SUPERFORM_DATA_DIR "data"
#endif
#ifndef SUPERFORM_VERSION
#define SUPERFORM_VERSION "0"
#endif

namespace superform::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string default_data_dir() { return SUPERFORM_DATA_DIR; }

namespace {

struct Options {
  std::string mode = "exact";
  double eps = 1e-30;
  std::uint64_t seed = 1;
  bool json = false;
  int fock_degree = 0;
  bool verify = false;
  bool table_only = false;
  bool update_golden = false;
  std::string data_dir = default_data_dir();
  std::vector<std::string> files;
};

const std::vector<Exact>& table_alphas() {
  static const std::vector<Exact> alphas = {Exact(2), Exact(1) + Exact::i(), Exact::i()};
  return alphas;
}

// The orthogonal x symplectic coupling block of a form, after bringing it to
// standard shape.
CouplingMatrix coupling_of(const GramForm& g) {
  GramForm standard = g;
  if (!is_standard(g)) {
    auto normalized = normalize_gram(g);
    if (normalized.index() != 0) {
      throw InputError("form cannot be brought to standard shape over Q(i); "
                       "supply standard diagonal blocks");
    }
    standard = std::get<0>(normalized).standard;
  }
  return standard.flavor == Flavor::Supersymmetric ? standard.coupling
                                                   : standard.coupling.transpose();
}

std::string shape_text(const SuperDims& d) {
  return "k=" + std::to_string(d.k) + " ell=" + std::to_string(d.ell());
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string residual_text(double r) {
  if (r == 0.0) return "0";
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << r;
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

// ---------------------------------------------------------------------------
// invariants

int cmd_invariants(const Options& o, std::ostream& out) {
  GramForm g = load_form(o.files.at(0));
  CouplingMatrix b = coupling_of(g);
  SuperDims d = dims_of(b);
  Polynomial p = p_poly(b), q = q_poly(b);
  RelationReport rel = relation_check(b);
  InvariantSignature sig = signature(b);
  std::optional<CoefficientFormula> coeff;
  if (d.k >= 2) coeff = p_coeff_formula(b);

  if (o.json) {
    Json j;
    j["shape"] = {{"k", d.k}, {"ell", d.ell()}};
    j["p"] = to_string(p);
    j["q"] = to_string(q);
    Json coeffs = Json::array();
    for (const auto& c : sig.p_coeffs) coeffs.push_back(to_string(c));
    j["p_coeffs"] = coeffs;
    j["rank"] = sig.rank_b;
    j["isotropic_columns"] = sig.isotropic_columns;
    j["p0"] = to_string(sig.p0);
    j["q0"] = to_string(sig.q0);
    j["relation"] = {{"sign", rel.sign}, {"alternative_sign", rel.alternative_sign},
                     {"alternative_holds", rel.alternative_holds}};
    if (coeff) {
      j["pair_sum"] = {{"value", to_string(coeff->value)},
                       {"coefficient", to_string(coeff->coefficient)},
                       {"sign", coeff->sign}};
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "shape: " << shape_text(d) << "\n";
  out << "P(lambda) = " << to_string(p) << "\n";
  out << "Q(lambda) = " << to_string(q) << "\n";
  out << "p_coeffs:";
  for (const auto& c : sig.p_coeffs) out << " " << to_string(c);
  out << "\n";
  out << "rank: " << sig.rank_b << "\n";
  out << "isotropic columns: " << (sig.isotropic_columns ? "yes" : "no") << "\n";
  out << "p0: " << to_string(sig.p0) << "\n";
  out << "q0: " << to_string(sig.q0) << "\n";
  out << "relation: Q(lambda) = " << (rel.sign > 0 ? "+" : "-")
      << "lambda^(2l-k) P(-lambda); with (-1)^k it "
      << (rel.alternative_holds ? "also holds" : "fails") << "\n";
  if (coeff) {
    out << "pair sum: " << to_string(coeff->value) << ", lambda^(k-2) coefficient: "
        << to_string(coeff->coefficient) << ", sign " << (coeff->sign > 0 ? "+1" : "-1")
        << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// classify / equivalent

CanonicalDecomposition classify_file(const Options& o, const std::string& file) {
  GramForm g = load_form(file);
  ClassifyOptions opts;
  opts.force_approx = o.mode == "approx";
  return classify(coupling_of(g), opts);
}

int cmd_classify(const Options& o, std::ostream& out) {
  CanonicalDecomposition dec = classify_file(o, o.files.at(0));
  if (o.json) {
    Json j;
    j["shape"] = {{"k", dec.dims.k}, {"ell", dec.dims.ell()}};
    Json parts = Json::array();
    for (const auto& p : dec.parts) parts.push_back(p.name());
    j["parts"] = parts;
    j["irreducible"] = dec.irreducible();
    j["exact"] = dec.exact();
    j["residual"] = dec.residual;
    std::visit([&](const auto& t) {
      j["x"] = matrix_json(t.x);
      j["y"] = matrix_json(t.y);
    }, dec.witness);
    std::visit([&](const auto& m) { j["canonical"] = matrix_json(m); }, dec.canonical);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "shape: " << shape_text(dec.dims) << "\n";
  out << (dec.irreducible() ? "irreducible: " : "decomposable: ") << dec.summary() << "\n";
  out << "witness: " << (dec.exact() ? "exact" : "approximate") << ", residual "
      << residual_text(dec.residual) << "\n";
  std::visit([&](const auto& t) {
    out << "X:\n" << format_matrix(t.x, "  ");
    out << "Y:\n" << format_matrix(t.y, "  ");
  }, dec.witness);
  std::visit([&](const auto& m) { out << "canonical:\n" << format_matrix(m, "  "); },
             dec.canonical);
  return kOk;
}

int cmd_equivalent(const Options& o, std::ostream& out) {
  CouplingMatrix a = coupling_of(load_form(o.files.at(0)));
  CouplingMatrix b = coupling_of(load_form(o.files.at(1)));
  if (dims_of(a) != dims_of(b)) {
    out << "equivalent: no (shapes " << shape_text(dims_of(a)) << " and "
        << shape_text(dims_of(b)) << ")\n";
    return kNo;
  }
  bool same = equivalent(a, b);
  if (o.json) {
    Json j;
    j["equivalent"] = same;
    j["first"] = classify(a).summary();
    j["second"] = classify(b).summary();
    out << j.dump(2) << "\n";
  } else {
    out << "equivalent: " << (same ? "yes" : "no") << "\n";
    out << "first: " << classify(a).summary() << "\n";
    out << "second: " << classify(b).summary() << "\n";
  }
  return same ? kOk : kNo;
}

// ---------------------------------------------------------------------------
// table

std::string classification_table_text() {
  std::ostringstream os;
  for (const auto& label : table_labels(table_alphas())) {
    CouplingMatrix b = canonical_matrix(label);
    SuperDims d = label.dims();
    os << label.name() << "  " << shape_text(d) << "\n";
    os << format_matrix(b, "  ");
    os << "  P(lambda) = " << to_string(p_poly(b)) << "\n";
    os << "  rank " << rank(b) << ", isotropic columns " << (isotropy_check(b) ? "yes" : "no")
       << "\n";
  }
  return os.str();
}

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  std::string detail;
};

std::vector<Check> verify_classification_table() {
  std::vector<Check> checks;
  auto labels = table_labels(table_alphas());
  for (const auto& label : labels) {
    Check c{"classify " + label.name()};
    CanonicalDecomposition dec = classify(canonical_matrix(label));
    c.ok = dec.parts.size() == 1 && dec.parts[0] == label && dec.exact() && dec.residual == 0.0;
    if (!c.ok) c.detail = dec.summary();
    checks.push_back(c);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i].dims() != labels[j].dims()) continue;
      Check c{"distinct " + labels[i].name() + " / " + labels[j].name()};
      c.ok = !equivalent(canonical_matrix(labels[i]), canonical_matrix(labels[j]));
      checks.push_back(c);
    }
  }
  {
    Check c{"distinct B6 / B4 + TrivEven"};
    auto b6 = canonical_matrix(CanonicalLabel::of(Tag::B6));
    auto b4 = juxtapose<Exact>({CanonicalLabel::of(Tag::B4), CanonicalLabel::of(Tag::TrivEven)});
    c.ok = !equivalent(b6, b4) && isotropy_check(b6) != isotropy_check(b4);
    checks.push_back(c);
  }
  for (const auto& label : labels) {
    Check c{"dimension bound " + label.name()};
    c.ok = dimension_bound_check(label.dims());
    checks.push_back(c);
  }
  return checks;
}

// Golden comparison: empty string when equal, otherwise a line diff.
std::string golden_diff(const std::string& expected, const std::string& actual) {
  if (expected == actual) return "";
  auto e = lines_of(expected), a = lines_of(actual);
  std::ostringstream os;
  for (std::size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
    const std::string* el = i < e.size() ? &e[i] : nullptr;
    const std::string* al = i < a.size() ? &a[i] : nullptr;
    if (el && al && *el == *al) continue;
    os << "@@ line " << (i + 1) << "\n";
    if (el) os << "-" << *el << "\n";
    if (al) os << "+" << *al << "\n";
  }
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream outf(p, std::ios::binary);
  if (!outf) throw InputError("cannot write " + p.string());
  outf << text;
}

// Returns kOk, or kVerificationFailure after printing a diff.
int check_golden(const Options& o, const std::string& name, const std::string& actual,
                 std::ostream& out) {
  fs::path path = fs::path(o.data_dir) / "golden" / name;
  if (o.update_golden) {
    write_file(path, actual);
    out << "golden " << name << ": updated\n";
    return kOk;
  }
  std::string diff = golden_diff(read_file(path), actual);
  if (diff.empty()) {
    out << "golden " << name << ": match\n";
    return kOk;
  }
  out << "golden " << name << ": MISMATCH\n" << diff;
  return kVerificationFailure;
}

int report_checks(const std::vector<Check>& checks, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (c.ok) {
      ++passed;
    } else {
      out << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  }
  out << "checks: " << passed << "/" << checks.size() << " passed\n";
  return passed == checks.size() ? kOk : kVerificationFailure;
}

int cmd_table(const Options& o, std::ostream& out) {
  std::string text = classification_table_text();
  if (!o.verify && !o.update_golden) {
    out << text;
    return kOk;
  }
  int code = report_checks(verify_classification_table(), out);
  int g = check_golden(o, "classification_table.txt", text, out);
  return code != kOk ? code : g;
}

// ---------------------------------------------------------------------------
// algebra

SuperAlgebra algebra_of(const GramForm& g) {
  if (g.flavor != Flavor::SkewSupersymmetric) {
    throw InputError("the algebra command needs a skew-supersymmetric form");
  }
  return oscillator_algebra(g);
}

std::vector<std::string> axiom_report_lines(const SuperAlgebra& alg, const AxiomReport& r) {
  std::vector<std::string> lines;
  for (const auto& v : r.violations) {
    std::string where = alg.names[v.i] + ", " + alg.names[v.j];
    if (v.kind == AxiomViolation::Kind::Jacobi) where += ", " + alg.names[v.k];
    lines.push_back(std::string(axiom_kind_name(v.kind)) + " violated at (" + where +
                    "): defect " + format_coords(v.defect, alg.names));
  }
  lines.push_back("axioms: " + std::string(r.ok() ? "ok" : "FAILED") + " (" +
                  std::to_string(r.checked) + " checks, " +
                  std::to_string(r.violations.size()) + " violations)");
  return lines;
}

int cmd_algebra(const Options& o, std::ostream& out) {
  SuperAlgebra alg = algebra_of(load_form(o.files.at(0)));
  std::optional<AxiomReport> report;
  if (o.verify) report = check_super_axioms(alg);
  if (o.json) {
    Json j;
    Json basis = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      basis.push_back({{"name", alg.names[i]}, {"parity", alg.parity[i]}});
    }
    j["basis"] = basis;
    j["brackets"] = format_brackets(alg);
    if (report) j["axioms"] = axiom_report_lines(alg, *report);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : format_brackets(alg)) out << l << "\n";
    if (report) {
      for (const auto& l : axiom_report_lines(alg, *report)) out << l << "\n";
    }
  }
  return report && !report->ok() ? kVerificationFailure : kOk;
}

// ---------------------------------------------------------------------------
// osp-demo

struct OspRun {
  AlgebraPtr algebra;
  OspGenerators gens;
  BracketTable table;
};

OspRun osp_run(bool inhomogeneous) {
  OspRun r;
  r.algebra = std::make_shared<const SuperAlgebra>(oscillator_algebra(
      inhomogeneous ? inhomogeneous_example_form() : homogeneous_example_form()));
  r.gens = osp_generators(r.algebra);
  r.table = bracket_table(r.gens);
  return r;
}

std::string table_text(const OspRun& r) {
  std::ostringstream os;
  for (const auto& l : format_table(r.table)) os << l << "\n";
  return os.str();
}

std::string osp_tables_text(const OspRun& hom, const OspRun& inh) {
  return "# homogeneous\n" + table_text(hom) + "# inhomogeneous\n" + table_text(inh);
}

std::string gamma_text(const CocycleTable& c) {
  std::vector<std::string> names(osp_names().begin(), osp_names().end());
  std::ostringstream os;
  for (std::size_t a = 0; a < kOspDim; ++a) {
    for (std::size_t b = 0; b < kOspDim; ++b) {
      bool zero = true;
      for (const auto& x : c.gamma[a][b]) zero = zero && x.is_zero();
      if (zero) continue;
      os << "gamma(" << names[a] << ", " << names[b] << ") = " << format_coords(c.gamma[a][b], names)
         << "\n";
    }
  }
  return os.str();
}

std::string triviality_text(const TrivialityReport& r) {
  std::vector<std::string> names(osp_names().begin(), osp_names().end());
  std::ostringstream os;
  for (const auto& d : r.defects) {
    os << "defect at (" << names[d.a] << ", " << names[d.b]
       << "): gamma = " << format_coords(d.expected, names)
       << ", coboundary = " << format_coords(d.actual, names) << "\n";
  }
  os << "triviality: " << (r.ok() ? "ok" : "FAILED") << " (" << r.pairs_checked << " pairs, "
     << r.defects.size() << " defects)\n";
  return os.str();
}

std::string fock_text(const char* what, FockVariant v, std::size_t n, const FockReport& r) {
  std::ostringstream os;
  for (const auto& d : r.defects) os << "  " << d << "\n";
  os << what << " (" << variant_name(v) << ", N=" << n << "): " << (r.ok() ? "ok" : "FAILED")
     << " (" << r.identities_checked << " identities, " << r.defects.size() << " defects)\n";
  return os.str();
}

int cmd_osp_demo(const Options& o, std::ostream& out) {
  OspRun hom = osp_run(false), inh = osp_run(true);
  std::string tables = osp_tables_text(hom, inh);
  if (o.update_golden) return check_golden(o, "osp_tables.txt", tables, out);
  if (o.table_only) {
    out << tables;
    return kOk;
  }
  int code = kOk;
  out << "# generators\n";
  for (std::size_t i = 0; i < kOspDim; ++i) {
    out << osp_names()[i] << " = " << to_string(inh.gens[i]) << "\n";
  }
  out << tables;
  out << "# cocycle\n";
  CocycleTable cocycle = cocycle_from_table(inh.table);
  out << gamma_text(cocycle);
  CocycleTable hom_part = cocycle_from_table(hom.table);
  if (hom_part.base != cocycle.base) {
    out << "undeformed part differs from the homogeneous table\n";
    code = kVerificationFailure;
  }
  out << "# triviality, f(F+) = E+, f(F-) = H\n";
  TrivialityReport tr = triviality_check(cocycle, trivializing_map());
  out << triviality_text(tr);
  bool ideal = adjoint_ideal_check(inh.table);
  out << "adjoint ideal: " << (ideal ? "ok" : "FAILED") << "\n";
  if (!tr.ok() || !ideal) code = kVerificationFailure;

  if (o.fock_degree > 0) {
    const auto n = static_cast<std::size_t>(o.fock_degree);
    out << "# fock\n";
    for (const OspRun* r : {&hom, &inh}) {
      FockVariant v = r == &hom ? FockVariant::Homogeneous : FockVariant::Inhomogeneous;
      FockReport rep = representation_check(*r->algebra, v, n);
      FockReport act = osp_action_check(r->gens, v, n);
      out << fock_text("representation", v, n, rep) << fock_text("osp action", v, n, act);
      if (!rep.ok() || !act.ok()) code = kVerificationFailure;
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// selftest

struct Suite {
  explicit Suite(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (failures.size() < 5) {
      failures.push_back(what);
    }
  }
};

std::vector<SuperDims> shapes() {
  std::vector<SuperDims> s;
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    for (std::size_t k = 1; k + 2 * ell <= 7; ++k) s.push_back({k, 2 * ell});
  }
  return s;
}

std::string dims_text(const SuperDims& d) { return "(" + std::to_string(d.k) + "," + std::to_string(d.ell()) + ")"; }

int cmd_selftest(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  std::vector<Suite> suites;

  {
    Suite s{"invariance"};
    for (const auto& d : shapes()) {
      for (int t = 0; t < 10; ++t) {
        CouplingMatrix b = random_matrix(d.k, d.two_ell, rng);
        CouplingMatrix c = act(b, random_transform(d, rng));
        s.record(signature(b) == signature(c), "shape " + dims_text(d));
      }
    }
    suites.push_back(s);
  }
  {
    Suite s{"relation"};
    for (const auto& d : shapes()) {
      for (int t = 0; t < 5; ++t) {
        CouplingMatrix b = random_matrix(d.k, d.two_ell, rng);
        RelationReport r = relation_check(b);
        s.record(r.holds && r.sign == 1, "shape " + dims_text(d));
        if (d.k >= 2) {
          CoefficientFormula f = p_coeff_formula(b);
          s.record(f.sign == (d.k % 2 ? -1 : 1), "pair sum " + dims_text(d));
        }
      }
    }
    suites.push_back(s);
  }
  {
    Suite s{"witness"};
    for (const auto& d : shapes()) {
      for (int t = 0; t < 4; ++t) {
        CouplingMatrix b = random_matrix(d.k, d.two_ell, rng);
        CanonicalDecomposition dec = classify(b);
        bool ok = dec.exact() ? dec.residual == 0.0 : dec.residual <= ApproxContext::eps();
        s.record(ok, "random " + dims_text(d));
      }
    }
    for (const auto& label : table_labels(table_alphas())) {
      CouplingMatrix b = canonical_matrix(label);
      for (int t = 0; t < 3; ++t) {
        CouplingMatrix c = act(b, random_transform(label.dims(), rng));
        CanonicalDecomposition dec = classify(c);
        s.record(dec.parts.size() == 1 && dec.parts[0] == label && dec.exact() &&
                     dec.residual == 0.0,
                 "conjugate of " + label.name());
      }
    }
    suites.push_back(s);
  }
  {
    Suite s{"table"};
    for (const auto& c : verify_classification_table()) s.record(c.ok, c.name);
    suites.push_back(s);
  }
  {
    Suite s{"axioms"};
    for (const auto& label : table_labels(table_alphas())) {
      GramForm skew = parity_reverse(make_standard_gram(canonical_matrix(label)));
      s.record(check_super_axioms(oscillator_algebra(skew)).ok(), label.name());
    }
    s.record(check_super_axioms(oscillator_algebra(homogeneous_example_form())).ok(), "homogeneous");
    s.record(check_super_axioms(oscillator_algebra(inhomogeneous_example_form())).ok(), "inhomogeneous");
    s.record(check_super_axioms(oscillator_algebra(swap_parity(degenerate_example_form()))).ok(),
             "degenerate");
    suites.push_back(s);
  }
  OspRun hom = osp_run(false), inh = osp_run(true);
  {
    Suite s{"pbw"};
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::size_t> w = {pick(rng), pick(rng), pick(rng)};
      UEAElement left = normal_order(inh.algebra, {{w, Exact(1)}}, RewriteStrategy::Leftmost);
      UEAElement right = normal_order(inh.algebra, {{w, Exact(1)}}, RewriteStrategy::Rightmost);
      s.record(left == right, "confluence");
    }
    suites.push_back(s);
  }
  {
    Suite s{"osp"};
    CocycleTable cocycle = cocycle_from_table(inh.table);
    s.record(cocycle.base == cocycle_from_table(hom.table).base, "undeformed part");
    s.record(triviality_check(cocycle, trivializing_map()).ok(), "triviality");
    s.record(adjoint_ideal_check(inh.table), "adjoint ideal");
    suites.push_back(s);
  }
  {
    Suite s{"fock"};
    const std::size_t n = o.fock_degree > 0 ? static_cast<std::size_t>(o.fock_degree) : 6;
    for (const OspRun* r : {&hom, &inh}) {
      FockVariant v = r == &hom ? FockVariant::Homogeneous : FockVariant::Inhomogeneous;
      s.record(representation_check(*r->algebra, v, n).ok(), variant_name(v));
      s.record(osp_action_check(r->gens, v, n).ok(), variant_name(v));
    }
    suites.push_back(s);
  }

  int code = kOk;
  for (const auto& s : suites) {
    out << s.name << ": " << s.passed << "/" << s.total << " passed\n";
    for (const auto& f : s.failures) out << "  failed: " << f << "\n";
    if (s.passed != s.total) code = kVerificationFailure;
  }
  int g1 = check_golden(o, "classification_table.txt", classification_table_text(), out);
  int g2 = check_golden(o, "osp_tables.txt", osp_tables_text(hom, inh), out);
  if (g1 != kOk || g2 != kOk) code = kVerificationFailure;
  out << "selftest: " << (code == kOk ? "PASS" : "FAIL") << " (seed " << o.seed << ")\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classification of inhomogeneous supersymmetric bilinear forms and their "
               "oscillator superalgebras",
               "superform"};
  app.set_version_flag("--version", "superform " SUPERFORM_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mode", o.mode, "exact or approx witnesses")
      ->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--eps", o.eps, "tolerance for approximate witnesses")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--fock-degree", o.fock_degree, "truncation degree of the Fock checks")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--data-dir", o.data_dir, "directory with the golden/ files");
  app.add_flag("--update-golden", o.update_golden, "rewrite golden files from current output");

  auto* inv = app.add_subcommand("invariants", "P, Q, rank, isotropy and their identities");
  inv->add_option("form", o.files, "form file")->required()->expected(1);
  auto* cls = app.add_subcommand("classify", "canonical decomposition with witness");
  cls->add_option("form", o.files, "form file")->required()->expected(1);
  auto* eqv = app.add_subcommand("equivalent", "exit 0 if equivalent, 1 if not");
  eqv->add_option("forms", o.files, "two form files")->required()->expected(2);
  auto* tab = app.add_subcommand("table", "the classification table");
  tab->add_flag("--verify", o.verify, "re-derive and check the table");
  auto* alg = app.add_subcommand("algebra", "oscillator superalgebra of a skew form");
  alg->add_option("form", o.files, "form file")->required()->expected(1);
  alg->add_flag("--verify", o.verify, "append the super-axiom report");
  auto* osp = app.add_subcommand("osp-demo", "osp(1|2) tables, cocycle and triviality");
  osp->add_flag("--table-only", o.table_only, "print only the bracket tables");
  auto* self = app.add_subcommand("selftest", "randomized property suite and golden files");

  std::vector<std::string> argv_store = {"superform"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "superform " SUPERFORM_VERSION "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (o.mode == "approx" || o.eps != 1e-30) {
      ApproxContext::configure(ApproxContext::precision_bits(), o.eps);
    }
    if (inv->parsed()) return cmd_invariants(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (eqv->parsed()) return cmd_equivalent(o, out);
    if (tab->parsed()) return cmd_table(o, out);
    if (alg->parsed()) return cmd_algebra(o, out);
    if (osp->parsed()) return cmd_osp_demo(o, out);
    if (self->parsed()) return cmd_selftest(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const OutOfRangeError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kInputError;
}

}  // namespace superform::cli

#include "toric3/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric3/classifier.hpp"
#include "toric3/error.hpp"
#include "toric3/formulas.hpp"
#include "toric3/galois.hpp"
#include "toric3/polytope.hpp"
#include "toric3/toric_code.hpp"
#include "toric3/verify.hpp"

namespace toric3 {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Settings {
  unsigned threads = 0;
  bool verbose = false;
};

std::string format_distance(const DistanceResult& d) {
  std::ostringstream os;
  if (d.exact)
    os << d.lower;
  else
    os << "[" << d.lower << ", " << d.upper << "]";
  os << " (" << to_string(d.method) << (d.vacuous ? ", lower bound vacuous" : "") << ")";
  return os.str();
}

int cmd_field_info(int q, std::ostream& out) {
  const FieldSpec f = make_field(q);
  out << f.describe() << "\n";
  out << "unit group order: " << f.unit_order() << "\n";
  out << "log(-1): " << f.log_minus_one() << "\n";
  out << "i  alpha^i  zech(i)\n";
  for (int i = 0; i < f.unit_order(); ++i) {
    const int z = f.zech(i);
    out << std::left << std::setw(3) << i << std::setw(9) << f.antilog_int(i) << (z < 0 ? "-inf" : std::to_string(z))
        << "\n";
  }
  return kExitOk;
}

int cmd_mindist(int q, const std::string& spec, const std::string& method, const Settings& s, std::ostream& out,
                std::ostream& err) {
  const FieldSpec field = make_field(q);
  const LatticePolytope P = parse_polytope_spec(spec);
  std::optional<DistanceResult> formula;
  if (method != "brute") {
    formula = formula_distance(P, q);
    if (!formula && method == "formula")
      throw Error(ErrorCode::NoFormulaForFamily, "no closed form for " + to_spec_string(P));
  }
  std::optional<DistanceResult> brute;
  std::optional<ToricCode> code;
  if (method != "formula") {
    code = build_code(field, P);
    brute = min_distance_brute(*code, s.threads);
  }
  out << "GF(" << q << ") " << to_spec_string(P) << ": n = " << (q - 1) * (q - 1) * (q - 1) << ", k = "
      << P.size() << "\n";
  if (method != "brute") out << "formula: " << (formula ? format_distance(*formula) : "none for this family") << "\n";
  if (brute) out << "brute:   " << format_distance(*brute) << "\n";
  if (s.verbose && code) out << dump_matrix(*code);
  if (method == "both" && formula) {
    const bool ok = formula->contains(brute->lower) && (!formula->exact || formula->lower == brute->lower);
    out << (ok ? "OK" : "MISMATCH") << "\n";
    if (!ok) {
      err << "brute-force distance " << brute->lower << " violates formula " << format_distance(*formula) << "\n";
      return kExitVerificationFailed;
    }
  }
  return kExitOk;
}

void print_witness(const Witness& w, std::ostream& out) {
  out << "row order:";
  for (auto r : w.row_order) out << " " << r;
  out << "\ncolumn map (c2 column <- c1 column, scale log):\n";
  for (std::size_t j = 0; j < w.column_map.size(); ++j)
    out << j << " <- " << w.column_map[j] << " " << w.scale_log[j] << "\n";
}

int cmd_equiv(int q, const std::string& spec_a, const std::string& spec_b, const std::string& method,
              const Settings& s, std::ostream& out, std::ostream& err) {
  const FieldSpec field = make_field(q);
  const LatticePolytope A = parse_polytope_spec(spec_a);
  const LatticePolytope B = parse_polytope_spec(spec_b);
  out << "GF(" << q << ") " << to_spec_string(A) << " vs " << to_spec_string(B) << "\n";
  std::optional<EquivalenceVerdict> theorem;
  if (method != "witness") {
    theorem = theorem_verdict(q, A, B);
    out << "theorem: " << (theorem ? theorem->describe() : "no criterion covers this pair") << "\n";
  }
  std::optional<EquivalenceVerdict> witness;
  if (method != "theorem") {
    ProfiledCode a(build_code(field, A)), b(build_code(field, B));
    if (a.code().dimension() != b.code().dimension())
      throw Error(ErrorCode::ShapeMismatch, "codes have different dimensions");
    a.distance(s.threads);
    b.distance(s.threads);
    witness = witness_equivalence(a, b);
    out << "witness: " << witness->describe() << "\n";
    if (s.verbose)
      if (const auto* w = std::get_if<Witness>(&witness->evidence)) print_witness(*w, out);
  }
  if (theorem && witness && theorem->status != Status::Inconclusive && witness->status != Status::Inconclusive) {
    const bool agree = theorem->status == witness->status;
    out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    if (!agree) {
      err << "theorem verdict and witness test disagree\n";
      return kExitVerificationFailed;
    }
  }
  return kExitOk;
}

ordered_json row_json(const CensusResult& r, const CensusRow& row) {
  ordered_json j;
  j["q"] = r.q;
  j["family"] = family_name(row.polytope.family);
  j["s"] = row.polytope.s ? ordered_json(*row.polytope.s) : ordered_json(nullptr);
  j["t"] = row.polytope.t ? ordered_json(*row.polytope.t) : ordered_json(nullptr);
  j["n"] = row.n;
  j["k"] = row.k;
  j["d_formula_lower"] = row.formula ? ordered_json(row.formula->lower) : ordered_json(nullptr);
  j["d_formula_upper"] = row.formula ? ordered_json(row.formula->upper) : ordered_json(nullptr);
  j["d_brute"] = row.d_brute;
  j["class_id"] = row.class_id;
  j["theorem_agrees"] = row.theorem_agrees;
  return j;
}

std::string census_json(const CensusResult& r) {
  ordered_json doc;
  doc["q"] = r.q;
  doc["dim"] = r.kind == CensusKind::Dim4 ? 4 : 5;
  doc["rows"] = ordered_json::array();
  for (const auto& row : r.rows) doc["rows"].push_back(row_json(r, row));
  doc["pairs"] = ordered_json::array();
  for (const auto& p : r.pairs) {
    ordered_json j;
    j["a"] = to_spec_string(r.rows[p.a].polytope);
    j["b"] = to_spec_string(r.rows[p.b].polytope);
    j["witness"] = {{"status", to_string(p.witness.status)}, {"evidence", p.witness.describe()}};
    if (p.theorem)
      j["theorem"] = {{"status", to_string(p.theorem->status)}, {"evidence", p.theorem->describe()}};
    else
      j["theorem"] = nullptr;
    j["agrees"] = p.agrees;
    doc["pairs"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string census_csv(const CensusResult& r) {
  std::ostringstream os;
  os << "q,family,s,t,n,k,d_formula_lower,d_formula_upper,d_brute,class_id,theorem_agrees\n";
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& row : r.rows) {
    os << r.q << ',' << family_name(row.polytope.family) << ',' << opt(row.polytope.s) << ',' << opt(row.polytope.t)
       << ',' << row.n << ',' << row.k << ',' << (row.formula ? std::to_string(row.formula->lower) : "") << ','
       << (row.formula ? std::to_string(row.formula->upper) : "") << ',' << row.d_brute << ',' << row.class_id << ','
       << (row.theorem_agrees ? "true" : "false") << '\n';
  }
  return os.str();
}

int cmd_census(int q, int dim, const std::string& path, const std::string& format, const Settings& s,
               std::ostream& out, std::ostream& err) {
  if (dim != 4 && dim != 5) throw Error(ErrorCode::InvalidParams, "--dim must be 4 or 5");
  const auto result = census_report(q, dim == 4 ? CensusKind::Dim4 : CensusKind::Dim5Width1, {s.threads});
  const std::string text = format == "csv" ? census_csv(result) : census_json(result);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::IOError, "cannot open " + path);
    file << text;
    if (!file) throw Error(ErrorCode::IOError, "write failed: " + path);
  }
  if (!result.mismatches.empty()) {
    err << to_string(ErrorCode::TheoremWitnessMismatch) << ": " << result.mismatches.size()
        << " disagreeing pair(s)\n";
    for (const auto& m : result.mismatches) err << "  " << m << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

void print_check(const CheckResult& c, const std::string& scope, const Settings& s, std::ostream& out) {
  out << std::left << std::setw(6) << scope << " [" << c.criterion << "] " << std::setw(48) << c.name
      << (c.passed ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(2) << c.seconds << "s  " << c.summary
      << "\n";
  const std::size_t shown = s.verbose ? c.failures.size() : std::min<std::size_t>(c.failures.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) out << "         " << c.failures[i] << "\n";
  if (shown < c.failures.size()) out << "         ... " << c.failures.size() - shown << " more (--verbose)\n";
  out.flush();
}

int cmd_verify(const std::vector<int>& qs, const Settings& s, std::ostream& out) {
  for (int q : qs) make_field(q);
  bool all = true;
  for (int q : qs) {
    for (const auto& c : verify_field(q, {s.threads})) {
      print_check(c, "q=" + std::to_string(q), s, out);
      all = all && c.passed;
    }
  }
  for (const auto& c : verify_geometry()) {
    print_check(c, "-", s, out);
    all = all && c.passed;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric 3-fold codes: minimum distances and monomial equivalence", "toric3"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--threads", settings.threads, "Worker threads (0 = all cores)");
  app.add_flag("--verbose", settings.verbose, "Dump matrices, witnesses and every failure");

  int q = 0;
  std::string poly, spec_a, spec_b, method = "both", out_path, format = "json";
  int dim = 4;
  std::vector<int> qs;

  auto* field_info = app.add_subcommand("field-info", "Field tables for GF(q)");
  field_info->add_option("--q", q, "Field order")->required();

  auto* mindist = app.add_subcommand("mindist", "Minimum distance of C_P");
  mindist->add_option("--q", q, "Field order")->required();
  mindist->add_option("--poly", poly, "Polytope spec")->required();
  mindist->add_option("--method", method, "brute, formula or both")
      ->check(CLI::IsMember({"brute", "formula", "both"}));

  auto* equiv = app.add_subcommand("equiv", "Monomial equivalence of two codes");
  equiv->add_option("--q", q, "Field order")->required();
  equiv->add_option("--a", spec_a, "First polytope spec")->required();
  equiv->add_option("--b", spec_b, "Second polytope spec")->required();
  equiv->add_option("--method", method, "theorem, witness or both")
      ->check(CLI::IsMember({"theorem", "witness", "both"}));

  auto* census_cmd = app.add_subcommand("census", "Classify every code of a family sweep");
  census_cmd->add_option("--q", q, "Field order")->required();
  census_cmd->add_option("--dim", dim, "4, or 5 for the width-1 families")->check(CLI::IsMember({4, 5}));
  census_cmd->add_option("--out", out_path, "Output file (default stdout)");
  census_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--q", qs, "Comma-separated field orders")->required()->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*field_info) return cmd_field_info(q, out);
    if (*mindist) return cmd_mindist(q, poly, method, settings, out, err);
    if (*equiv) return cmd_equiv(q, spec_a, spec_b, method, settings, out, err);
    if (*census_cmd) return cmd_census(q, dim, out_path, format, settings, out, err);
    if (*verify) return cmd_verify(qs, settings, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool failure = e.code() == ErrorCode::TheoremWitnessMismatch || e.code() == ErrorCode::IOError;
    return failure ? kExitVerificationFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace toric3

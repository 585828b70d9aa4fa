#include "mixsign/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mixsign/constructions.hpp"
#include "mixsign/graph_io.hpp"
#include "mixsign/parallel.hpp"
#include "mixsign/report.hpp"

namespace mixsign {

namespace {

struct FamilyArgs {
  std::string name;
  unsigned gmin = 2, gmax = 10;
  unsigned kmin = 1, kmax = 20;
  bool homological = false;
  unsigned m = 0, n = 0, size = 6;
  unsigned mmin = 2, mmax = 5, k = 1;
  bool extended = false;
  std::string graph;
  std::string vertex;
  double tol = kDefaultTolerance;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyRow graph_row(std::string param, const MixedSignGraph& g, double tol) {
  FamilyRow row;
  row.param = std::move(param);
  row.house = coxeter_spectrum(g, tol).spectral_radius;
  SurfaceInvariants s = surface_invariants(g);
  row.genus = s.genus;
  row.boundary = s.boundary_count;
  if (s.genus > 0) row.normalized = std::pow(static_cast<long double>(row.house.value()), static_cast<long double>(s.genus));
  return row;
}

void check_range(unsigned lo, unsigned hi, unsigned min, const char* what) {
  if (lo < min || hi < lo)
    throw Error(ErrorCode::BadParameters, std::string("bad range for ") + what + ": " + std::to_string(lo) + ".." + std::to_string(hi));
}

std::vector<FamilyRow> family_rows(const FamilyArgs& a, std::ostream& err) {
  std::vector<std::function<FamilyRow()>> jobs;
  if (a.name == "lt") {
    check_range(a.gmin, a.gmax, 1, "g");
    for (unsigned g = a.gmin; g <= a.gmax; ++g)
      jobs.push_back([g, &a] {
        LtPolynomial lt = lt_poly(g);
        FamilyRow row{std::to_string(g), house(lt.poly, a.tol).value, std::nullopt, g, std::nullopt};
        row.normalized = std::pow(static_cast<long double>(row.house.value()), static_cast<long double>(g));
        return row;
      });
    if (a.gmin == 1) err << "warning: LT_1 degenerates to -x\n";
  } else if (a.name == "lt-ab") {
    check_range(a.kmin, a.kmax, 1, "k");
    for (unsigned k = a.kmin; k <= a.kmax; ++k)
      jobs.push_back([k, &a] {
        IntPolynomial p = lt_ab_poly(k, a.homological ? LtAbFamily::Homological : LtAbFamily::Geometric);
        FamilyRow row{std::to_string(k), house(p, a.tol).value, std::nullopt, 3 * k - 1, std::nullopt};
        row.normalized = std::pow(static_cast<long double>(row.house.value()), static_cast<long double>(3 * k));
        return row;
      });
  } else if (a.name == "gamma-mn") {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    if (a.m > 0 || a.n > 0) {
      if (a.m == 0 || a.n == 0) throw Error(ErrorCode::BadParameters, "gamma-mn needs both --m and --n");
      pairs.emplace_back(a.m, a.n);
    } else {
      if (a.size < 1) throw Error(ErrorCode::BadParameters, "--size must be positive");
      for (unsigned m = 1; m <= a.size; ++m)
        for (unsigned n = 1; n <= a.size; ++n) pairs.emplace_back(m, n);
    }
    for (auto [m, n] : pairs)
      jobs.push_back([m = m, n = n, &a] { return graph_row(std::to_string(m) + ";" + std::to_string(n), gamma_mn(m, n), a.tol); });
  } else if (a.name == "twist") {
    check_range(a.mmin, a.mmax, 2, "m");
    if (a.k < 1) throw Error(ErrorCode::BadParameters, "--k must be positive");
    for (unsigned m = a.mmin; m <= a.mmax; ++m)
      jobs.push_back([m, &a] { return graph_row(std::to_string(m) + ";" + std::to_string(a.k), twist_graph(m, a.k, a.extended), a.tol); });
  } else if (a.name == "tail") {
    if (a.graph.empty() || a.vertex.empty()) throw Error(ErrorCode::BadParameters, "tail needs --graph FILE and --vertex ID");
    check_range(a.kmin, a.kmax, 1, "k");
    std::vector<std::string> warnings;
    auto base = std::make_shared<MixedSignGraph>(load_graph_json(read_file(a.graph), &warnings));
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    for (unsigned k = a.kmin; k <= a.kmax; ++k)
      jobs.push_back([k, base, &a] { return graph_row(std::to_string(k), attach_tail(*base, a.vertex, k), a.tol); });
  } else {
    throw Error(ErrorCode::BadParameters, "unknown family '" + a.name + "' (expected lt, lt-ab, gamma-mn, twist, tail)");
  }
  std::vector<FamilyRow> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { rows[i] = jobs[i](); });
  return rows;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CertificationFailure: return kExitCertification;
    case ErrorCode::InternalInconsistency: return kExitInternal;
    default: return kExitInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of mixed-sign Coxeter graphs", "mixsign"};
  app.require_subcommand(1);

  std::string path;
  bool csv = false;
  double tol = kDefaultTolerance;
  long closure = -1;
  bool meta = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a graph file");
  analyze_cmd->add_option("file", path, "Graph file (JSON)")->required();
  analyze_cmd->add_flag("--csv", csv, "Emit CSV instead of JSON");
  analyze_cmd->add_option("--closure", closure, "Boundary components to fill (default: all)");
  analyze_cmd->add_option("--tol", tol, "Certification tolerance");
  analyze_cmd->add_flag("--meta", meta, "Add a generation timestamp (output is then not reproducible)");

  FamilyArgs fam;
  auto* family_cmd = app.add_subcommand("family", "Tabulate a named family");
  family_cmd->add_option("name", fam.name, "lt | lt-ab | gamma-mn | twist | tail")->required();
  family_cmd->add_option("--gmin", fam.gmin, "lt: first genus");
  family_cmd->add_option("--gmax", fam.gmax, "lt: last genus");
  family_cmd->add_option("--kmin", fam.kmin, "lt-ab, tail: first k");
  family_cmd->add_option("--kmax", fam.kmax, "lt-ab, tail: last k");
  family_cmd->add_flag("--homological", fam.homological, "lt-ab: homological polynomial");
  family_cmd->add_option("--m", fam.m, "gamma-mn: m");
  family_cmd->add_option("--n", fam.n, "gamma-mn: n");
  family_cmd->add_option("--size", fam.size, "gamma-mn: scan 1..size for m and n");
  family_cmd->add_option("--mmin", fam.mmin, "twist: first m");
  family_cmd->add_option("--mmax", fam.mmax, "twist: last m");
  family_cmd->add_option("--k", fam.k, "twist: iteration count");
  family_cmd->add_flag("--extended", fam.extended, "twist: extended twist graph");
  family_cmd->add_option("--graph", fam.graph, "tail: seed graph file");
  family_cmd->add_option("--vertex", fam.vertex, "tail: attachment vertex id");
  family_cmd->add_flag("--csv", csv, "Emit CSV instead of JSON");
  family_cmd->add_option("--tol", tol, "Certification tolerance");

  std::string coeffs;
  auto* house_cmd = app.add_subcommand("house", "House of an integer polynomial");
  house_cmd->add_option("--coeffs", coeffs, "Comma-separated coefficients, constant term first")->required();
  house_cmd->add_option("--tol", tol, "Certification tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (!(tol > 0)) throw Error(ErrorCode::BadParameters, "--tol must be positive");
    if (analyze_cmd->parsed()) {
      std::vector<std::string> warnings;
      MixedSignGraph g = load_graph_json(read_file(path), &warnings);
      for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
      AnalysisOptions opts;
      opts.tol = tol;
      if (closure >= 0) opts.closure_fill = static_cast<std::size_t>(closure);
      AnalysisReport r = analyze(g, opts);
      if (meta) r.generated_at = utc_timestamp();
      out << (csv ? report_csv(r) : report_json(r));
    } else if (family_cmd->parsed()) {
      fam.tol = tol;
      auto rows = family_rows(fam, err);
      out << (csv ? family_csv(rows) : family_json(fam.name, rows));
    } else if (house_cmd->parsed()) {
      IntPolynomial p = parse_coefficients(coeffs);
      out << house_json(p, house(p, tol));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace mixsign

#include "mixsign/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mixsign {

namespace {

using ordered_json = nlohmann::ordered_json;

// Round to 12 significant digits so that JSON and CSV agree.
double round12(long double x) { return std::strtod(format_real(x).c_str(), nullptr); }

ordered_json real_json(const CertifiedReal& r) {
  return ordered_json{{"value", round12(r.value())}, {"radius", round12(r.radius())}};
}

ordered_json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

ordered_json surface_json(const SurfaceInvariants& s) {
  return ordered_json{{"euler_char", s.euler_char},
                      {"boundary_count", s.boundary_count},
                      {"genus", s.genus},
                      {"components", s.components}};
}

std::string coefficient_list(const IntPolynomial& p, char sep) {
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += sep;
    out += p.coefficients()[k].get_str();
  }
  return out;
}

}  // namespace

std::string format_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", static_cast<double>(x));
  return buf;
}

AnalysisReport analyze(const MixedSignGraph& g, const AnalysisOptions& options) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  AnalysisReport r;
  r.vertices = g.size();
  r.edges = g.edges().size();
  r.connected = is_connected(g);
  r.bipartite = is_bipartite(g);
  r.tol = options.tol;
  r.spectrum = coxeter_spectrum(g, options.tol);
  r.verdict = pa_verdict(g, options.tol);
  if (r.bipartite) r.bipartite_eigenvalue = bipartite_eigenvalue(g, options.tol);
  r.surface = surface_invariants(g);
  r.closure_fill = options.closure_fill.value_or(r.surface.boundary_count);
  r.closure = closure_invariants(r.surface, r.closure_fill);
  return r;
}

std::string report_json(const AnalysisReport& r) {
  ordered_json doc;
  doc["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"connected", r.connected}, {"bipartite", r.bipartite}};
  ordered_json cp = ordered_json::array();
  for (const auto& c : r.spectrum.char_poly.coefficients()) cp.push_back(coeff_json(c));
  doc["char_poly"] = cp;
  doc["char_poly_text"] = r.spectrum.char_poly.to_string();
  ordered_json sr = real_json(r.spectrum.spectral_radius);
  sr["path"] = certification_path_name(r.spectrum.path);
  sr["dominant_root_real"] = r.spectrum.dominant_root_real;
  sr["all_cyclotomic"] = r.spectrum.all_cyclotomic;
  doc["spectral_radius"] = sr;
  ordered_json v{{"kind", verdict_name(r.verdict.kind)}};
  v["lower_bound"] = r.verdict.lower_bound ? ordered_json(round12(r.verdict.lower_bound->lower)) : ordered_json(nullptr);
  doc["verdict"] = v;
  doc["bipartite_eigenvalue"] = r.bipartite_eigenvalue ? real_json(*r.bipartite_eigenvalue) : ordered_json(nullptr);
  doc["surface"] = surface_json(r.surface);
  ordered_json cl = surface_json(r.closure);
  cl["fill"] = r.closure_fill;
  doc["closure"] = cl;
  doc["tolerance"] = round12(r.tol);
  if (r.generated_at) doc["meta"] = {{"generated_at", *r.generated_at}};
  return doc.dump(2) + "\n";
}

std::string report_csv(const AnalysisReport& r) {
  std::ostringstream out;
  out << "vertices,edges,connected,bipartite,char_poly,spectral_radius,radius,path,verdict,lower_bound,"
         "bipartite_eigenvalue,bipartite_radius,euler_char,boundary,genus,components,"
         "closure_fill,closure_euler_char,closure_boundary,closure_genus"
      << (r.generated_at ? ",generated_at" : "") << '\n';
  out << r.vertices << ',' << r.edges << ',' << (r.connected ? "true" : "false") << ','
      << (r.bipartite ? "true" : "false") << ',' << coefficient_list(r.spectrum.char_poly, ';') << ','
      << format_real(r.spectrum.spectral_radius.value()) << ',' << format_real(r.spectrum.spectral_radius.radius()) << ','
      << certification_path_name(r.spectrum.path) << ',' << verdict_name(r.verdict.kind) << ','
      << (r.verdict.lower_bound ? format_real(r.verdict.lower_bound->lower) : "") << ','
      << (r.bipartite_eigenvalue ? format_real(r.bipartite_eigenvalue->value()) : "") << ','
      << (r.bipartite_eigenvalue ? format_real(r.bipartite_eigenvalue->radius()) : "") << ',' << r.surface.euler_char
      << ',' << r.surface.boundary_count << ',' << r.surface.genus << ',' << r.surface.components << ','
      << r.closure_fill << ',' << r.closure.euler_char << ',' << r.closure.boundary_count << ',' << r.closure.genus;
  if (r.generated_at) out << ',' << *r.generated_at;
  out << '\n';
  return out.str();
}

std::string family_json(const std::string& name, const std::vector<FamilyRow>& rows) {
  ordered_json doc;
  doc["family"] = name;
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j{{"param", row.param}};
    j["house"] = round12(row.house.value());
    j["radius"] = round12(row.house.radius());
    j["normalized"] = row.normalized ? ordered_json(round12(*row.normalized)) : ordered_json(nullptr);
    j["genus"] = row.genus ? ordered_json(*row.genus) : ordered_json(nullptr);
    j["boundary"] = row.boundary ? ordered_json(*row.boundary) : ordered_json(nullptr);
    doc["rows"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream out;
  out << "param,house,radius,normalized,genus,boundary\n";
  for (const auto& row : rows) {
    out << row.param << ',' << format_real(row.house.value()) << ',' << format_real(row.house.radius()) << ','
        << (row.normalized ? format_real(*row.normalized) : "") << ','
        << (row.genus ? std::to_string(*row.genus) : "") << ','
        << (row.boundary ? std::to_string(*row.boundary) : "") << '\n';
  }
  return out.str();
}

std::string house_json(const IntPolynomial& p, const HouseResult& h) {
  ordered_json doc;
  doc["polynomial"] = p.to_string();
  doc["degree"] = h.degree;
  ordered_json v = real_json(h.value);
  v["path"] = certification_path_name(h.path);
  v["dominant_root_real"] = h.dominant_root_real;
  doc["house"] = v;
  doc["outside_count"] = h.outside_count;
  doc["on_circle_count"] = h.on_circle_count;
  doc["inside_count"] = h.inside_count;
  return doc.dump(2) + "\n";
}

}  // namespace mixsign

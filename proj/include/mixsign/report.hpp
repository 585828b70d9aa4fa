#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixsign/coxeter.hpp"
#include "mixsign/families.hpp"
#include "mixsign/graph.hpp"
#include "mixsign/surface.hpp"

namespace mixsign {

struct AnalysisOptions {
  double tol = kDefaultTolerance;
  std::optional<std::size_t> closure_fill;  // default: fill every boundary component
};

struct AnalysisReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  bool bipartite = false;
  double tol = kDefaultTolerance;
  SpectralResult spectrum;
  PAVerdict verdict;
  std::optional<CertifiedReal> bipartite_eigenvalue;
  SurfaceInvariants surface;
  std::size_t closure_fill = 0;
  SurfaceInvariants closure;
  // Only set on request; reports are otherwise a pure function of their inputs.
  std::optional<std::string> generated_at;
};

AnalysisReport analyze(const MixedSignGraph& g, const AnalysisOptions& options = {});

std::string report_json(const AnalysisReport& r);
std::string report_csv(const AnalysisReport& r);

struct FamilyRow {
  std::string param;
  CertifiedReal house;
  std::optional<long double> normalized;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> boundary;
};

std::string family_json(const std::string& name, const std::vector<FamilyRow>& rows);
std::string family_csv(const std::vector<FamilyRow>& rows);

std::string house_json(const IntPolynomial& p, const HouseResult& h);

// %.12g, independent of the locale.
std::string format_real(long double x);

}  // namespace mixsign

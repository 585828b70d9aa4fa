#pragma once

#include <optional>

#include "mixsign/graph.hpp"
#include "mixsign/matrix.hpp"
#include "mixsign/roots.hpp"

namespace mixsign {

// U = I_s - A+, upper triangular with the signs on the diagonal.
IntMatrix build_U(const MixedSignGraph& g);

struct BilinearForms {
  IntMatrix B;  // U + U^T
  IntMatrix F;  // A+ - A-
};

BilinearForms bilinear_forms(const MixedSignGraph& g);
// B_c = U + c U^T
RatMatrix interpolated_form(const MixedSignGraph& g, const mpq_class& c);

// Generators act on column vectors; index i is 0-based.
IntMatrix reflection_matrix(const MixedSignGraph& g, std::size_t i);
IntMatrix artin_matrix(const MixedSignGraph& g, std::size_t i, int power);
RatMatrix interpolating_generator(const MixedSignGraph& g, std::size_t i, const mpq_class& c);

// s_1 ... s_n, checked against -U^{-1} U^T.
IntMatrix coxeter_element(const MixedSignGraph& g);
// sigma_1^{s(1)} ... sigma_n^{s(n)} under the Artin representation; equals -omega.
IntMatrix artin_element(const MixedSignGraph& g);
// f_1^(c) ... f_n^(c), checked against -c U^{-1} U^T.
RatMatrix howlett_product(const MixedSignGraph& g, const mpq_class& c);

struct SpectralResult {
  IntPolynomial char_poly;
  CertifiedReal spectral_radius;
  bool dominant_root_real = false;
  bool exactly_one = false;
  bool all_cyclotomic = false;
  CertificationPath path = CertificationPath::Exact;
};

SpectralResult spectral_radius(const IntPolynomial& p, double tol = kDefaultTolerance);
SpectralResult coxeter_spectrum(const MixedSignGraph& g, double tol = kDefaultTolerance);

// House of x^2 - (2 - mu^2) x + 1 with mu the adjacency spectral radius.
CertifiedReal bipartite_eigenvalue(const MixedSignGraph& g, double tol = kDefaultTolerance);

enum class VerdictKind { PseudoAnosovCertified, SpectralRadiusOne, NotConnected };

const char* verdict_name(VerdictKind k);

struct PAVerdict {
  VerdictKind kind = VerdictKind::NotConnected;
  std::optional<CertifiedReal> lower_bound;
};

PAVerdict pa_verdict(const MixedSignGraph& g, double tol = kDefaultTolerance);

}  // namespace mixsign

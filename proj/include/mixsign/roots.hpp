#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "mixsign/polynomial.hpp"

namespace mixsign {

inline constexpr double kDefaultTolerance = 1e-9;

// Closed interval known to contain a real quantity.
struct CertifiedReal {
  long double lower = 0;
  long double upper = 0;

  double value() const { return static_cast<double>((lower + upper) / 2); }
  double radius() const { return static_cast<double>((upper - lower) / 2); }
  bool contains(long double x) const { return lower <= x && x <= upper; }
  bool exact() const { return lower == upper; }
};

enum class CertificationPath { Exact, InclusionDiscs, InclusionAndBisection };

const char* certification_path_name(CertificationPath p);

using Complex = std::complex<long double>;

struct RootDisc {
  Complex center;
  long double radius = 0;
  bool real = false;
};

// Aberth-Ehrlich iteration. Seeds default to a circle; throws
// CertificationFailure if the iteration does not settle.
std::vector<Complex> aberth_roots(const IntPolynomial& p, std::vector<Complex> seeds = {});

// Eigenvalues of the companion matrix (double precision).
std::vector<std::complex<double>> companion_eigenvalues(const IntPolynomial& p);

// Inclusion discs D(z_i, d |p(z_i)| / |a_d prod (z_i - z_j)|). Their union holds
// all roots and every connected component of k discs holds exactly k roots.
// The residuals p(z_i) are evaluated exactly.
std::vector<RootDisc> inclusion_discs(const IntPolynomial& p, const std::vector<Complex>& centers);

// Cyclotomic polynomial Phi_m.
IntPolynomial cyclotomic_polynomial(unsigned m);
unsigned euler_phi(unsigned m);

// x^{-e} g(x) = q(x + 1/x) for a palindromic g of even degree 2e.
IntPolynomial trace_polynomial(const IntPolynomial& g);

// Distinct roots of modulus 1 of a squarefree polynomial with g(0) != 0.
std::size_t count_unit_circle_roots(const IntPolynomial& squarefree);

struct RootCensus {
  CertifiedReal house;
  CertificationPath path = CertificationPath::Exact;
  bool dominant_root_real = false;
  // Every nonzero root lies on the unit circle.
  bool house_exactly_one = false;
  // p = +-x^k * product of cyclotomic polynomials.
  bool all_cyclotomic = false;
  std::size_t degree = 0;
  std::size_t zero_roots = 0;
  std::size_t inside = 0;
  std::size_t on_circle = 0;
  std::size_t outside = 0;
  // (m, multiplicity) for every Phi_m dividing p.
  std::vector<std::pair<unsigned, unsigned>> cyclotomic_factors;
};

// Certified maximum root modulus plus exact root counts relative to the unit
// circle. Counts are with multiplicity.
RootCensus root_census(const IntPolynomial& p, double tol = kDefaultTolerance);

}  // namespace mixsign

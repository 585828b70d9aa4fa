#pragma once

#include <optional>
#include <vector>

#include "mixsign/polynomial.hpp"
#include "mixsign/roots.hpp"

namespace mixsign {

struct HouseResult {
  CertifiedReal value;
  std::size_t degree = 0;
  std::size_t outside_count = 0;
  std::size_t on_circle_count = 0;
  std::size_t inside_count = 0;
  bool dominant_root_real = false;
  CertificationPath path = CertificationPath::Exact;
};

HouseResult house(const IntPolynomial& p, double tol = kDefaultTolerance);

// P_k = x^k Q + Q*
IntPolynomial salem_boyd(const IntPolynomial& q, unsigned k);

struct LtPolynomial {
  IntPolynomial poly;
  bool degenerate = false;  // terms collide (g = 1)
};

// x^{2g} - x^{g+1} - x^g - x^{g-1} + 1
LtPolynomial lt_poly(unsigned g);

enum class LtAbFamily { Geometric, Homological };

// Geometric: x^{6k} - x^{3k+1} - x^{3k} - x^{3k-1} + 1.
// Homological: x^{6k} - x^{3k+1} + x^{3k} - x^{3k-1} + 1.
IntPolynomial lt_ab_poly(unsigned k, LtAbFamily family);

struct SalemBoydRow {
  unsigned k = 0;
  HouseResult house;
};

struct SalemBoydScan {
  std::optional<HouseResult> q_house;  // absent for constant Q
  std::vector<SalemBoydRow> rows;      // k = 0..k_max
};

SalemBoydScan salem_boyd_limit_scan(const IntPolynomial& q, unsigned k_max, double tol = kDefaultTolerance);

// m * seq[j] = x^{j + offset} Q + sign * Q* for every j, with m one of
// 1, x - 1, x + 1.
struct SalemBoydFit {
  IntPolynomial q;
  int sign = 1;
  IntPolynomial multiplier;
  std::size_t offset = 0;
};

std::optional<SalemBoydFit> fit_salem_boyd(const std::vector<IntPolynomial>& seq);

}  // namespace mixsign

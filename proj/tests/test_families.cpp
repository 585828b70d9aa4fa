#include <cmath>

#include "doctest.h"
#include "mixsign/error.hpp"
#include "mixsign/families.hpp"
#include "oracles.hpp"

using namespace mixsign;

TEST_CASE("LT polynomials") {
  for (unsigned g = 2; g <= 25; ++g) {
    LtPolynomial lt = lt_poly(g);
    CHECK(lt.poly == oracle::lt(g));
    CHECK_FALSE(lt.degenerate);
    CHECK(reciprocity_sign(lt.poly) == 1);
  }
  CHECK(lt_poly(1).degenerate);
  CHECK(lt_poly(1).poly == IntPolynomial{0, -1});
  CHECK_THROWS_AS(lt_poly(0), Error);

  HouseResult h = house(lt_poly(2).poly);
  CHECK(oracle::brackets_root(oracle::lt(2), h.value.lower, h.value.upper));
  CHECK(std::abs(h.value.value() - oracle::bisect_value(oracle::lt(2), 1.7, 1.75)) < 1e-12);
  CHECK(h.value.value() == doctest::Approx(1.722083806).epsilon(1e-9));
  CHECK(h.outside_count == 1);
  CHECK(h.dominant_root_real);
}

TEST_CASE("LT_g^g decreases towards the golden ratio squared") {
  const double ell0 = (3 + std::sqrt(5.0)) / 2;
  double prev = 1e9;
  for (unsigned g : {4u, 8u, 16u, 32u, 64u}) {
    double v = std::pow(house(lt_poly(g).poly).value.value(), g);
    CHECK(v > ell0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev == doctest::Approx(ell0).epsilon(1e-3));
}

TEST_CASE("lt_ab polynomials") {
  IntPolynomial g1 = lt_ab_poly(1, LtAbFamily::Geometric);
  CHECK(g1 == IntPolynomial{1, 0, -1, -1, -1, 0, 1});
  CHECK(lt_ab_poly(1, LtAbFamily::Homological) == IntPolynomial{1, 0, -1, 1, -1, 0, 1});
  // k = 2 geometric is Lehmer's polynomial times x^2 - x + 1.
  IntPolynomial g2 = lt_ab_poly(2, LtAbFamily::Geometric);
  CHECK(g2 == oracle::lehmer() * IntPolynomial{1, -1, 1});
  CertifiedReal h2 = house(g2).value;
  CHECK(oracle::brackets_root(oracle::lehmer(), h2.lower, h2.upper));
  // For odd k the homological polynomial is the geometric one at -x.
  for (unsigned k = 1; k <= 9; k += 2) {
    IntPolynomial geo = lt_ab_poly(k, LtAbFamily::Geometric), hom = lt_ab_poly(k, LtAbFamily::Homological);
    IntPolynomial flipped = geo.negate_variable();
    CHECK((hom == flipped || hom == -flipped));
    CHECK(house(geo).value.value() == doctest::Approx(house(hom).value.value()).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lt_ab_poly(0, LtAbFamily::Geometric), Error);
}

TEST_CASE("Salem-Boyd sequences") {
  IntPolynomial q{-2, 1};
  CHECK(salem_boyd(q, 0) == IntPolynomial{-1, -1});
  CHECK(salem_boyd(q, 3) == IntPolynomial{1, -2, 0, -2, 1});
  CHECK_THROWS_AS(salem_boyd(IntPolynomial{1, 2}, 3), Error);

  SalemBoydScan scan = salem_boyd_limit_scan(q, 30);
  REQUIRE(scan.q_house);
  CHECK(scan.q_house->value.contains(2));
  REQUIRE(scan.rows.size() == 31);
  for (std::size_t k = 1; k < scan.rows.size(); ++k) {
    CHECK(scan.rows[k].k == k);
    CHECK(scan.rows[k].house.outside_count >= scan.rows[k - 1].house.outside_count);
  }
  CHECK(std::abs(scan.rows[30].house.value.value() - 2) < 1e-6);

  // Q* = Q: P_k = (x^k + 1) Q has the same house as Q.
  SalemBoydScan lehmer = salem_boyd_limit_scan(oracle::lehmer(), 12);
  for (const auto& row : lehmer.rows) CHECK(oracle::brackets_root(oracle::lehmer(), row.house.value.lower, row.house.value.upper));
}

TEST_CASE("fitting a Salem-Boyd sequence") {
  IntPolynomial q{-1, -1, 0, 1};  // x^3 - x - 1
  std::vector<IntPolynomial> plain, reduced;
  for (unsigned k = 4; k < 10; ++k) {
    plain.push_back(salem_boyd(q, k));
    // x^k Q - Q* vanishes at 1.
    reduced.push_back(divide_exactly(q.shifted(k) - reciprocal(q), IntPolynomial{-1, 1}));
  }
  auto fit = fit_salem_boyd(plain);
  REQUIRE(fit);
  CHECK(fit->multiplier == IntPolynomial{1});
  for (std::size_t j = 0; j < plain.size(); ++j)
    CHECK(fit->multiplier * plain[j] == fit->q.shifted(j + fit->offset) + reciprocal(fit->q) * mpz_class(fit->sign));

  auto fit2 = fit_salem_boyd(reduced);
  REQUIRE(fit2);
  CHECK(fit2->multiplier == IntPolynomial{-1, 1});
  for (std::size_t j = 0; j < reduced.size(); ++j)
    CHECK(fit2->multiplier * reduced[j] == fit2->q.shifted(j + fit2->offset) + reciprocal(fit2->q) * mpz_class(fit2->sign));

  CHECK_FALSE(fit_salem_boyd({IntPolynomial{1, 1}, IntPolynomial{5, 0, 0, 7}, IntPolynomial{3, 1}}));
  CHECK_FALSE(fit_salem_boyd({IntPolynomial{1, 1}}));
}

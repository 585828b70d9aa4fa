#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mixsign/error.hpp"
#include "mixsign/roots.hpp"
#include "oracles.hpp"

using namespace mixsign;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<mpz_class> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  if (c.front() == 0) c.front() = -1;
  return IntPolynomial(c);
}

// Moduli of the companion eigenvalues, sorted.
std::vector<double> eigen_moduli(const IntPolynomial& p) {
  std::vector<double> r;
  for (auto z : companion_eigenvalues(p)) r.push_back(std::abs(z));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials multiply to x^m - 1") {
  for (unsigned m = 1; m <= 40; ++m) {
    IntPolynomial prod{1};
    for (unsigned d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == IntPolynomial::monomial(1, m) - IntPolynomial{1});
    CHECK(cyclotomic_polynomial(m).degree() == static_cast<int>(euler_phi(m)));
  }
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), Error);
}

TEST_CASE("trace polynomial") {
  // x^2 - 3x + 1 -> x + 1/x = 3
  CHECK(trace_polynomial(IntPolynomial{1, -3, 1}) == IntPolynomial{-3, 1});
  // x^4 + 1 -> (x + 1/x)^2 - 2
  CHECK(trace_polynomial(IntPolynomial{1, 0, 0, 0, 1}) == IntPolynomial{-2, 0, 1});
}

TEST_CASE("unit circle counts agree with numerics away from the circle") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 80; ++t) {
    IntPolynomial p = squarefree_part(random_poly(rng, 2 + t % 9, 3));
    if (p.coeff(0) == 0 || p.degree() < 1) continue;
    auto mods = eigen_moduli(p);
    bool near = std::any_of(mods.begin(), mods.end(), [](double r) { return std::abs(r - 1) < 1e-5 && std::abs(r - 1) > 1e-12; });
    if (near) continue;
    std::size_t on = std::count_if(mods.begin(), mods.end(), [](double r) { return std::abs(r - 1) <= 1e-12; });
    CHECK(count_unit_circle_roots(p) == on);
    ++checked;
  }
  CHECK(checked >= 40);
  CHECK(count_unit_circle_roots(oracle::lehmer()) == 8);
  CHECK(count_unit_circle_roots(IntPolynomial{-1, 0, 0, 0, 0, 1}) == 5);
}

TEST_CASE("Aberth roots match companion eigenvalues") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    IntPolynomial p = random_poly(rng, 2 + t % 12, 5);
    if (squarefree_part(p).degree() != p.degree()) continue;
    auto a = aberth_roots(p);
    auto e = companion_eigenvalues(p);
    REQUIRE(a.size() == e.size());
    for (auto z : e) {
      long double best = 1e9;
      for (auto w : a) best = std::min(best, std::abs(Complex(z.real(), z.imag()) - w));
      CHECK(best < 1e-6);
    }
  }
}

TEST_CASE("inclusion discs contain the roots") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    IntPolynomial p = random_poly(rng, 3 + t % 8, 4);
    if (squarefree_part(p).degree() != p.degree()) continue;
    auto discs = inclusion_discs(p, aberth_roots(p));
    for (auto z : companion_eigenvalues(p)) {
      bool inside = false;
      for (const auto& d : discs) inside |= std::abs(Complex(z.real(), z.imag()) - d.center) <= d.radius + 1e-9;
      CHECK(inside);
    }
  }
}

TEST_CASE("census of Lehmer's polynomial") {
  RootCensus c = root_census(oracle::lehmer());
  double want = oracle::lehmer_number();
  CHECK(oracle::brackets_root(oracle::lehmer(), c.house.lower, c.house.upper));
  CHECK(std::abs(c.house.value() - want) < 1e-12);
  CHECK(c.house.upper - c.house.lower <= 1e-9);
  CHECK(c.outside == 1);
  CHECK(c.inside == 1);
  CHECK(c.on_circle == 8);
  CHECK(c.dominant_root_real);
  CHECK_FALSE(c.all_cyclotomic);
  CHECK(c.path != CertificationPath::Exact);
}

TEST_CASE("census with cyclotomic factors, zero roots and multiplicities") {
  IntPolynomial p = IntPolynomial::monomial(1, 3) * IntPolynomial{-3, 1} * IntPolynomial{-3, 1} * cyclotomic_polynomial(5) *
                    cyclotomic_polynomial(1) * cyclotomic_polynomial(1);
  RootCensus c = root_census(p);
  CHECK(c.zero_roots == 3);
  CHECK(c.outside == 2);
  CHECK(c.on_circle == 6);
  CHECK(c.inside == 0);
  CHECK(c.house.contains(3));
  CHECK(c.house.upper - c.house.lower <= 1e-9);
  CHECK(c.cyclotomic_factors == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {5, 1}});

  RootCensus one = root_census(cyclotomic_polynomial(7) * cyclotomic_polynomial(12) * IntPolynomial{1, 1});
  CHECK(one.all_cyclotomic);
  CHECK(one.house_exactly_one);
  CHECK(one.house.exact());
  CHECK(one.house.lower == 1);
  CHECK(one.path == CertificationPath::Exact);
}

TEST_CASE("non-cyclotomic polynomial with every root on the circle") {
  // 2x^2 - x + 2: both roots have modulus 1 but are not roots of unity.
  RootCensus c = root_census(IntPolynomial{2, -1, 2});
  CHECK(c.on_circle == 2);
  CHECK(c.house_exactly_one);
  CHECK_FALSE(c.all_cyclotomic);
  CHECK(c.house.exact());
}

TEST_CASE("real and complex dominant roots") {
  RootCensus s5 = root_census(IntPolynomial{-5, 0, 1});
  CHECK(oracle::brackets_root(IntPolynomial{-5, 0, 1}, s5.house.lower, s5.house.upper));
  CHECK(std::abs(s5.house.value() - oracle::bisect_value(IntPolynomial{-5, 0, 1}, 2, 3)) < 1e-12);
  CHECK(s5.dominant_root_real);

  RootCensus c = root_census(IntPolynomial{5, 1, 1});  // |root| = sqrt 5
  CHECK(c.house.lower <= std::sqrt(5.0L) + 1e-15);
  CHECK(c.house.upper >= std::sqrt(5.0L) - 1e-15);
  CHECK(c.house.upper - c.house.lower <= 1e-9);
  CHECK_FALSE(c.dominant_root_real);
  CHECK(c.outside == 2);

  RootCensus neg = root_census(IntPolynomial{3, 1});  // root -3
  CHECK(neg.house.contains(3));
}

TEST_CASE("house of random polynomials against companion eigenvalues") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    IntPolynomial p = random_poly(rng, 3 + t % 10, 3);
    RootCensus c = root_census(p);
    CHECK(c.inside + c.on_circle + c.outside + c.zero_roots == static_cast<std::size_t>(p.degree()));
    auto mods = eigen_moduli(p);
    CHECK(std::abs(c.house.value() - mods.back()) < 1e-6 * std::max(1.0, mods.back()));
    CHECK(c.house.upper - c.house.lower <= 1e-9);
    if (c.dominant_root_real && c.house.lower > 1) {
      // The dominant real root is +house or -house; one of them changes sign.
      mpq_class lo(static_cast<double>(c.house.lower)), hi(static_cast<double>(c.house.upper));
      mpq_class l2 = lo - mpq_class(1, 1000000), h2 = hi + mpq_class(1, 1000000);
      bool pos = p.sign_at(l2) != p.sign_at(h2);
      bool negr = p.sign_at(-h2) != p.sign_at(-l2);
      CHECK((pos || negr));
    }
  }
}

TEST_CASE("tolerance and errors") {
  RootCensus c = root_census(oracle::lehmer(), 1e-14);
  CHECK(c.house.upper - c.house.lower <= 1e-14);
  CHECK_THROWS_AS(root_census(IntPolynomial{}), Error);
  CHECK_THROWS_AS(root_census(IntPolynomial{4}), Error);
  CHECK_THROWS_AS(root_census(oracle::lehmer(), 0), Error);
}

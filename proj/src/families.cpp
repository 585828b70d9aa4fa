#include "mixsign/families.hpp"

#include "mixsign/error.hpp"
#include "mixsign/parallel.hpp"

namespace mixsign {

HouseResult house(const IntPolynomial& p, double tol) {
  RootCensus c = root_census(p, tol);
  HouseResult h;
  h.value = c.house;
  h.degree = c.degree;
  h.outside_count = c.outside;
  h.on_circle_count = c.on_circle;
  h.inside_count = c.inside + c.zero_roots;
  h.dominant_root_real = c.dominant_root_real;
  h.path = c.path;
  return h;
}

IntPolynomial salem_boyd(const IntPolynomial& q, unsigned k) {
  if (!q.is_monic()) throw Error(ErrorCode::NotMonic, "Salem-Boyd sequences need a monic Q, got " + q.to_string());
  return q.shifted(k) + reciprocal(q);
}

LtPolynomial lt_poly(unsigned g) {
  if (g < 1) throw Error(ErrorCode::BadParameters, "LT_g needs g >= 1");
  std::vector<mpz_class> c(2 * g + 1);
  c[2 * g] += 1;
  c[g + 1] -= 1;
  c[g] -= 1;
  c[g - 1] -= 1;
  c[0] += 1;
  return {IntPolynomial(std::move(c)), g == 1};
}

IntPolynomial lt_ab_poly(unsigned k, LtAbFamily family) {
  if (k < 1) throw Error(ErrorCode::BadParameters, "lt_ab_poly needs k >= 1");
  std::vector<mpz_class> c(6 * k + 1);
  c[6 * k] += 1;
  c[3 * k + 1] -= 1;
  c[3 * k] += family == LtAbFamily::Geometric ? -1 : 1;
  c[3 * k - 1] -= 1;
  c[0] += 1;
  return IntPolynomial(std::move(c));
}

SalemBoydScan salem_boyd_limit_scan(const IntPolynomial& q, unsigned k_max, double tol) {
  if (k_max < 1) throw Error(ErrorCode::BadParameters, "k_max must be at least 1");
  SalemBoydScan scan;
  if (q.degree() >= 1) scan.q_house = house(q, tol);
  scan.rows.resize(k_max + 1);
  parallel_for(k_max + 1, [&](std::size_t k) {
    scan.rows[k].k = static_cast<unsigned>(k);
    scan.rows[k].house = house(salem_boyd(q, static_cast<unsigned>(k)), tol);
  });
  return scan;
}

std::optional<SalemBoydFit> fit_salem_boyd(const std::vector<IntPolynomial>& seq) {
  if (seq.size() < 2) return std::nullopt;
  const IntPolynomial x{0, 1};
  const IntPolynomial one_minus_x{1, -1};
  for (const IntPolynomial& m : {IntPolynomial{1}, IntPolynomial{-1, 1}, IntPolynomial{1, 1}}) {
    std::vector<IntPolynomial> e;
    for (const auto& d : seq) e.push_back(m * d);
    auto w = exact_divide(e[1] - x * e[0], one_minus_x);
    if (!w || w->is_zero()) continue;
    IntPolynomial rest = e[0] - *w;
    if (rest.is_zero()) continue;
    const std::size_t offset = rest.valuation();
    IntPolynomial q = rest.unshifted(offset);
    IntPolynomial qs = reciprocal(q);
    int sign = 0;
    if (*w == qs)
      sign = 1;
    else if (*w == -qs)
      sign = -1;
    else
      continue;
    bool ok = true;
    for (std::size_t j = 0; j < e.size() && ok; ++j)
      ok = e[j] == q.shifted(j + offset) + qs * mpz_class(sign);
    if (ok) return SalemBoydFit{q, sign, m, offset};
  }
  return std::nullopt;
}

}  // namespace mixsign

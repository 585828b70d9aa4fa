#include "mixsign/coxeter.hpp"

#include <cmath>
#include <limits>

namespace mixsign {

namespace {

void require_nonempty(const MixedSignGraph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
}

void check_index(const MixedSignGraph& g, std::size_t i) {
  if (i >= g.size())
    throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(i) + " out of range for n=" + std::to_string(g.size()));
}

int plus_part(const MixedSignGraph& g, std::size_t i, std::size_t j) { return (i < j && g.adjacent(i, j)) ? 1 : 0; }

int skew_entry(const MixedSignGraph& g, std::size_t i, std::size_t j) {
  if (!g.adjacent(i, j)) return 0;
  return i < j ? 1 : -1;
}

// Row i of the generator, all other rows being the identity.
template <typename Scalar>
std::vector<Scalar> reflection_row(const MixedSignGraph& g, std::size_t i) {
  std::vector<Scalar> row(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) row[j] = (j == i) ? -1 : g.sign(i) * (g.adjacent(i, j) ? 1 : 0);
  return row;
}

std::vector<mpz_class> artin_row(const MixedSignGraph& g, std::size_t i, int power) {
  std::vector<mpz_class> row(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) row[j] = (j == i) ? 1 : power * skew_entry(g, i, j);
  return row;
}

std::vector<mpq_class> interpolating_row(const MixedSignGraph& g, std::size_t i, const mpq_class& c) {
  std::vector<mpq_class> row(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == i)
      row[j] = -c;
    else if (!g.adjacent(i, j))
      row[j] = 0;
    else if (i < j)
      row[j] = g.sign(i);
    else
      row[j] = c * g.sign(i);
  }
  return row;
}

template <typename Scalar>
SquareMatrix<Scalar> from_row(std::size_t n, std::size_t i, const std::vector<Scalar>& row) {
  auto m = SquareMatrix<Scalar>::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  return m;
}

// M <- M * G where G is the identity except for row i.
template <typename Scalar>
void multiply_right(SquareMatrix<Scalar>& m, std::size_t i, const std::vector<Scalar>& row) {
  const std::size_t n = m.size();
  Scalar t;
  for (std::size_t r = 0; r < n; ++r) {
    const Scalar mri = m(r, i);
    if (mri == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || row[j] == 0) continue;
      t = mri * row[j];
      m(r, j) += t;
    }
    m(r, i) = mri * row[i];
  }
}

RatMatrix minus_c_uinv_ut(const MixedSignGraph& g, const mpq_class& c) {
  IntMatrix u = build_U(g);
  RatMatrix ur = to_rational(u);
  RatMatrix prod = inverse(ur) * ur.transposed();
  return prod * mpq_class(-c);
}

}  // namespace

IntMatrix build_U(const MixedSignGraph& g) {
  const std::size_t n = g.size();
  IntMatrix u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = g.sign(i);
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = -plus_part(g, i, j);
  }
  return u;
}

BilinearForms bilinear_forms(const MixedSignGraph& g) {
  IntMatrix u = build_U(g);
  BilinearForms f{u + u.transposed(), IntMatrix(g.size())};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) f.F(i, j) = skew_entry(g, i, j);
  return f;
}

RatMatrix interpolated_form(const MixedSignGraph& g, const mpq_class& c) {
  RatMatrix u = to_rational(build_U(g));
  return u + u.transposed() * c;
}

IntMatrix reflection_matrix(const MixedSignGraph& g, std::size_t i) {
  check_index(g, i);
  return from_row(g.size(), i, reflection_row<mpz_class>(g, i));
}

IntMatrix artin_matrix(const MixedSignGraph& g, std::size_t i, int power) {
  check_index(g, i);
  if (power != 1 && power != -1) throw Error(ErrorCode::BadParameters, "Artin generator power must be +1 or -1");
  return from_row(g.size(), i, artin_row(g, i, power));
}

RatMatrix interpolating_generator(const MixedSignGraph& g, std::size_t i, const mpq_class& c) {
  check_index(g, i);
  if (c == 0) throw Error(ErrorCode::ZeroParameter, "interpolation parameter c must be nonzero");
  return from_row(g.size(), i, interpolating_row(g, i, c));
}

IntMatrix coxeter_element(const MixedSignGraph& g) {
  require_nonempty(g);
  const std::size_t n = g.size();
  IntMatrix w = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) multiply_right(w, i, reflection_row<mpz_class>(g, i));
  auto closed = to_integer(minus_c_uinv_ut(g, 1));
  if (!closed || !(*closed == w))
    throw Error(ErrorCode::InternalInconsistency, "s_1...s_n differs from -U^{-1}U^T");
  return w;
}

IntMatrix artin_element(const MixedSignGraph& g) {
  require_nonempty(g);
  const std::size_t n = g.size();
  IntMatrix a = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) multiply_right(a, i, artin_row(g, i, g.sign(i)));
  if (!(a == -coxeter_element(g)))
    throw Error(ErrorCode::InternalInconsistency, "Artin element differs from minus the Coxeter element");
  return a;
}

RatMatrix howlett_product(const MixedSignGraph& g, const mpq_class& c) {
  require_nonempty(g);
  if (c == 0) throw Error(ErrorCode::ZeroParameter, "interpolation parameter c must be nonzero");
  const std::size_t n = g.size();
  RatMatrix f = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) multiply_right(f, i, interpolating_row(g, i, c));
  if (!(f == minus_c_uinv_ut(g, c)))
    throw Error(ErrorCode::InternalInconsistency, "product of interpolating generators differs from -cU^{-1}U^T");
  return f;
}

SpectralResult spectral_radius(const IntPolynomial& p, double tol) {
  RootCensus census = root_census(p, tol);
  SpectralResult r;
  r.char_poly = p;
  r.spectral_radius = census.house;
  r.dominant_root_real = census.dominant_root_real;
  r.exactly_one = census.house.exact() && census.house.lower == 1;
  r.all_cyclotomic = census.all_cyclotomic;
  r.path = census.path;
  return r;
}

SpectralResult coxeter_spectrum(const MixedSignGraph& g, double tol) {
  return spectral_radius(char_poly(coxeter_element(g)), tol);
}

CertifiedReal bipartite_eigenvalue(const MixedSignGraph& g, double tol) {
  require_nonempty(g);
  IntPolynomial p = char_poly(adjacency_matrix(g));
  // mu > 2 iff the largest eigenvalue exceeds 2 (Perron-Frobenius); decided exactly.
  IntPolynomial sf = squarefree_part(p);
  const mpq_class bound(static_cast<long>(g.size()) + 1);
  if (count_real_roots(sf, mpq_class(2), bound) == 0) return {1, 1};
  // Tighter tolerance on mu since beta stretches the interval.
  CertifiedReal mu = root_census(p, tol / 16).house;
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  auto beta = [](long double t) {
    if (t <= 2) return 1.0L;
    return (t + std::sqrt(t * t - 4)) / 2;
  };
  long double tlo = mu.lower * mu.lower * (1 - 4 * eps) - 2;
  long double thi = mu.upper * mu.upper * (1 + 4 * eps) - 2;
  CertifiedReal out{beta(tlo) * (1 - 8 * eps), beta(thi) * (1 + 8 * eps)};
  if (out.lower < 1) out.lower = 1;
  if (out.upper - out.lower > static_cast<long double>(tol))
    throw Error(ErrorCode::CertificationFailure, "bipartite eigenvalue interval wider than tolerance");
  return out;
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::PseudoAnosovCertified: return "PseudoAnosovCertified";
    case VerdictKind::SpectralRadiusOne: return "SpectralRadiusOne";
    case VerdictKind::NotConnected: return "NotConnected";
  }
  return "?";
}

PAVerdict pa_verdict(const MixedSignGraph& g, double tol) {
  require_nonempty(g);
  if (!is_connected(g)) return {VerdictKind::NotConnected, std::nullopt};
  IntPolynomial p = char_poly(coxeter_element(g));
  double t = tol;
  for (int attempt = 0; attempt < 3; ++attempt, t /= 1000) {
    SpectralResult s = spectral_radius(p, t);
    if (s.all_cyclotomic) return {VerdictKind::SpectralRadiusOne, std::nullopt};
    if (s.exactly_one)
      throw Error(ErrorCode::InternalInconsistency, "all roots on the unit circle but a non-cyclotomic factor remains");
    if (s.spectral_radius.lower > 1) return {VerdictKind::PseudoAnosovCertified, s.spectral_radius};
  }
  throw Error(ErrorCode::CertificationFailure, "could not separate the spectral radius from 1");
}

}  // namespace mixsign

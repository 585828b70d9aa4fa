#include "mixsign/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "mixsign/error.hpp"
#include "mixsign/matrix.hpp"

namespace mixsign {

const char* certification_path_name(CertificationPath p) {
  switch (p) {
    case CertificationPath::Exact: return "exact";
    case CertificationPath::InclusionDiscs: return "inclusion-discs";
    case CertificationPath::InclusionAndBisection: return "inclusion+bisection";
  }
  return "?";
}

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr long double kPi = 3.141592653589793238462643383279502884L;

long double to_long_double(const mpz_class& v) {
  std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (bits <= 62) return static_cast<long double>(v.get_si());
  mpz_class top = abs(v);
  top >>= static_cast<mp_bitcnt_t>(bits - 64);
  long double r = std::ldexp(static_cast<long double>(top.get_ui()), static_cast<int>(bits - 64));
  return v < 0 ? -r : r;
}

// x = m * 2^e exactly.
void split_binary(long double x, mpz_class& m, long& e) {
  if (x == 0) {
    m = 0;
    e = 0;
    return;
  }
  int ex = 0;
  long double fr = std::frexp(x, &ex);
  long double scaled = std::ldexp(std::fabs(fr), 64);
  unsigned long u = static_cast<unsigned long>(scaled);
  m = mpz_class(u);
  if (fr < 0) m = -m;
  e = ex - 64;
}

mpq_class exact_rational(long double x) {
  mpz_class m;
  long e = 0;
  split_binary(x, m, e);
  if (e >= 0) {
    m <<= static_cast<mp_bitcnt_t>(e);
    return mpq_class(m);
  }
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(-e);
  mpq_class r(m, den);
  r.canonicalize();
  return r;
}

long double round_down(const mpq_class& q) {
  double r = q.get_d();
  while (mpq_class(r) > q) r = std::nextafter(r, -std::numeric_limits<double>::infinity());
  return r;
}

long double round_up(const mpq_class& q) {
  double r = q.get_d();
  while (mpq_class(r) < q) r = std::nextafter(r, std::numeric_limits<double>::infinity());
  return r;
}

// log2 |p(z)| with p(z) computed exactly; -inf for an exact root.
long double log2_abs_residual(const IntPolynomial& p, Complex z) {
  mpz_class mx, my;
  long ex = 0, ey = 0;
  split_binary(z.real(), mx, ex);
  split_binary(z.imag(), my, ey);
  long s = 0;
  if (mx != 0) s = std::max(s, -ex);
  if (my != 0) s = std::max(s, -ey);
  mpz_class X = mx, Y = my;
  if (mx != 0) X <<= static_cast<mp_bitcnt_t>(ex + s);
  if (my != 0) Y <<= static_cast<mp_bitcnt_t>(ey + s);
  const auto& c = p.coefficients();
  const std::size_t d = c.size() - 1;
  mpz_class gr = c[d], gi = 0, tr, ti, term;
  for (std::size_t k = d; k-- > 0;) {
    tr = gr * X - gi * Y;
    ti = gr * Y + gi * X;
    term = c[k];
    term <<= static_cast<mp_bitcnt_t>(s * static_cast<long>(d - k));
    gr = tr + term;
    gi = ti;
  }
  mpz_class r2 = gr * gr + gi * gi;
  if (r2 == 0) return -std::numeric_limits<long double>::infinity();
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, r2.get_mpz_t());
  long double log2r2 = std::log2(static_cast<long double>(mant)) + static_cast<long double>(exp2);
  return log2r2 / 2 - static_cast<long double>(s) * static_cast<long double>(d);
}

struct Eval {
  Complex value;
  Complex deriv;
  long double bound;
};

Eval horner(const std::vector<long double>& a, Complex z) {
  Complex v = a.back();
  Complex dv = 0;
  long double bound = std::fabs(a.back());
  long double az = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dv = dv * z + v;
    v = v * z + a[k];
    bound = bound * az + std::fabs(a[k]);
  }
  return {v, dv, bound};
}

}  // namespace

std::vector<Complex> aberth_roots(const IntPolynomial& p, std::vector<Complex> seeds) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  const int deg = p.degree();
  if (deg < 1) return {};
  const std::size_t d = static_cast<std::size_t>(deg);
  std::vector<long double> a(d + 1);
  long double lc = to_long_double(p.leading());
  for (std::size_t k = 0; k <= d; ++k) a[k] = to_long_double(p.coeff(k)) / lc;
  a[d] = 1;

  std::vector<Complex> z = std::move(seeds);
  if (z.size() != d) {
    z.assign(d, 0);
    long double r = std::pow(std::fabs(a[0]), 1.0L / static_cast<long double>(d));
    // Upper bound for the root moduli (Fujiwara).
    long double fuji = 0;
    for (std::size_t k = 0; k < d; ++k)
      fuji = std::max(fuji, std::pow(std::fabs(a[k]) / (k == 0 ? 2 : 1), 1.0L / static_cast<long double>(d - k)));
    fuji *= 2;
    if (!(r > 0) || !std::isfinite(r)) r = 1;
    r = std::min(r, fuji);
    for (std::size_t k = 0; k < d; ++k) {
      long double t = 2 * kPi * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
      z[k] = std::polar(r, t);
    }
  }
  std::vector<char> done(d, 0);
  const int max_iter = 1000;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      Eval e = horner(a, z[i]);
      if (std::abs(e.value) <= 4 * static_cast<long double>(d) * kEps * e.bound) {
        done[i] = 1;
        continue;
      }
      all = false;
      Complex sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      Complex w;
      if (e.deriv == Complex(0)) {
        w = Complex(1e-3L, 1e-3L) * (1 + std::abs(z[i]));
      } else {
        Complex newton = e.value / e.deriv;
        w = newton / (1.0L - newton * sum);
      }
      z[i] -= w;
      if (std::abs(w) <= 2 * kEps * std::abs(z[i])) done[i] = 1;
    }
    if (all) return z;
  }
  if (std::all_of(done.begin(), done.end(), [](char c) { return c != 0; })) return z;
  throw Error(ErrorCode::CertificationFailure, "Aberth iteration did not converge for " + p.to_string());
}

std::vector<std::complex<double>> companion_eigenvalues(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  const int d = p.degree();
  double lc = p.leading().get_d();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lc;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

std::vector<RootDisc> inclusion_discs(const IntPolynomial& p, const std::vector<Complex>& centers) {
  const std::size_t d = centers.size();
  if (static_cast<int>(d) != p.degree()) throw Error(ErrorCode::InternalInconsistency, "one center per root required");
  const long double log2_lc = std::log2(std::fabs(to_long_double(p.leading())));
  std::vector<RootDisc> discs(d);
  for (std::size_t i = 0; i < d; ++i) {
    discs[i].center = centers[i];
    discs[i].real = centers[i].imag() == 0;
    long double den = log2_lc;
    long double rel = 16 * static_cast<long double>(d) * kEps;
    bool coincident = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      long double diff = std::abs(centers[i] - centers[j]);
      if (diff == 0) {
        coincident = true;
        break;
      }
      den += std::log2(diff);
      rel += 8 * kEps * (std::abs(centers[i]) + std::abs(centers[j])) / diff;
    }
    if (coincident) {
      discs[i].radius = std::numeric_limits<long double>::infinity();
      continue;
    }
    long double num = log2_abs_residual(p, centers[i]);
    if (std::isinf(num)) {
      discs[i].radius = 0;
      continue;
    }
    long double r = static_cast<long double>(d) * std::exp2(num - den);
    discs[i].radius = r * (1 + 2 * rel + 1e-12L);
  }
  return discs;
}

unsigned euler_phi(unsigned m) {
  unsigned r = m;
  for (unsigned q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      r -= r / q;
    }
  if (m > 1) r -= r / m;
  return r;
}

IntPolynomial cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorCode::BadParameters, "cyclotomic index must be positive");
  std::vector<unsigned> primes;
  unsigned rest = m;
  for (unsigned q = 2; q * q <= rest; ++q)
    if (rest % q == 0) {
      primes.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  if (rest > 1) primes.push_back(rest);
  IntPolynomial phi{-1, 1};
  unsigned rad = 1;
  for (unsigned q : primes) {
    phi = divide_exactly(phi.substitute_power(q), phi);
    rad *= q;
  }
  return phi.substitute_power(m / rad);
}

IntPolynomial trace_polynomial(const IntPolynomial& g) {
  if (g.degree() < 0 || g.degree() % 2 != 0 || reciprocity_sign(g) != 1)
    throw Error(ErrorCode::InternalInconsistency, "trace polynomial needs a palindromic polynomial of even degree");
  const std::size_t e = static_cast<std::size_t>(g.degree()) / 2;
  IntPolynomial q = IntPolynomial::constant(g.coeff(e));
  IntPolynomial t_prev{2};
  IntPolynomial t_cur{0, 1};
  const IntPolynomial y{0, 1};
  for (std::size_t k = 1; k <= e; ++k) {
    q += t_cur * g.coeff(e + k);
    IntPolynomial t_next = y * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return q;
}

std::size_t count_unit_circle_roots(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "circle count of zero polynomial");
  IntPolynomial f = squarefree.unshifted(squarefree.valuation());
  std::size_t count = 0;
  if (f.degree() < 1) return 0;
  if (f.evaluate(mpz_class(1)) == 0) {
    f = divide_exactly(f, IntPolynomial{-1, 1});
    ++count;
  }
  if (f.degree() >= 1 && f.evaluate(mpz_class(-1)) == 0) {
    f = divide_exactly(f, IntPolynomial{1, 1});
    ++count;
  }
  if (f.degree() < 1) return count;
  IntPolynomial g = reciprocity_sign(f) != 0 ? f : gcd(f, reciprocal(f));
  if (g.degree() < 1) return count;
  g = g.primitive_part();
  if (reciprocity_sign(g) != 1) throw Error(ErrorCode::InternalInconsistency, "self-reciprocal part is not palindromic");
  IntPolynomial q = trace_polynomial(g);
  return count + 2 * count_real_roots(q, mpq_class(-2), mpq_class(2));
}

namespace {

bool isolated(const std::vector<RootDisc>& discs) {
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (!std::isfinite(discs[i].radius)) return false;
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      if (std::abs(discs[i].center - discs[j].center) <= (discs[i].radius + discs[j].radius) * (1 + 1e-12L)) return false;
  }
  return true;
}

std::vector<Complex> snap_real(std::vector<Complex> z) {
  for (auto& w : z)
    if (std::fabs(w.imag()) <= 1e-12L * std::max<long double>(1, std::abs(w))) w = Complex(w.real(), 0);
  return z;
}

// Isolated inclusion discs for a squarefree polynomial, one root each.
std::vector<RootDisc> isolate_roots(const IntPolynomial& f) {
  auto try_centers = [&](const std::vector<Complex>& z, std::vector<RootDisc>& out) {
    for (const auto& centers : {snap_real(z), z}) {
      out = inclusion_discs(f, centers);
      if (isolated(out)) return true;
    }
    return false;
  };
  std::vector<RootDisc> discs;
  try {
    if (try_centers(aberth_roots(f), discs)) return discs;
  } catch (const Error&) {
  }
  std::vector<Complex> seeds;
  for (const auto& e : companion_eigenvalues(f)) seeds.emplace_back(e.real(), e.imag());
  try {
    if (try_centers(aberth_roots(f, seeds), discs)) return discs;
  } catch (const Error&) {
  }
  throw Error(ErrorCode::CertificationFailure, "could not isolate the roots of " + f.to_string());
}

// Rational p/q with q <= max_den and |x - p/q| <= tol, by continued fractions.
std::optional<unsigned> small_denominator(long double x, unsigned max_den, long double tol) {
  long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double v = x;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(v);
    long double h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    if (std::fabs(x - h2 / k2) <= tol) return static_cast<unsigned>(k2);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = v - a;
    if (frac < 1e-30L) break;
    v = 1 / frac;
  }
  return std::nullopt;
}

// Bisection of a real root known to be the only root in the disc.
CertifiedReal bisect_real_root(const IntPolynomial& f, const RootDisc& disc, long double tol) {
  const mpq_class c = exact_rational(disc.center.real());
  const mpq_class r = exact_rational(disc.radius);
  mpq_class lo = c - r;
  mpq_class hi = c + r;
  int slo = f.sign_at(lo), shi = f.sign_at(hi);
  auto modulus = [](const mpq_class& a, const mpq_class& b) {
    CertifiedReal r;
    if (a <= 0 && b >= 0) {
      r.lower = 0;
      r.upper = std::max(round_up(-a), round_up(b));
    } else if (a > 0) {
      r.lower = round_down(a);
      r.upper = round_up(b);
    } else {
      r.lower = round_down(-b);
      r.upper = round_up(-a);
    }
    return r;
  };
  if (slo == 0) return modulus(lo, lo);
  if (shi == 0) return modulus(hi, hi);
  if (slo == shi)
    throw Error(ErrorCode::CertificationFailure,
                "inclusion disc and exact sign evaluation disagree for " + f.to_string());
  mpq_class width_tol = exact_rational(tol / 4);
  for (int it = 0; it < 400 && hi - lo > width_tol; ++it) {
    mpq_class mid = (lo + hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) return modulus(mid, mid);
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return modulus(lo, hi);
}

}  // namespace

RootCensus root_census(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "house of zero polynomial");
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "degree >= 1 required");
  if (!(tol > 0)) throw Error(ErrorCode::BadParameters, "tolerance must be positive");
  RootCensus out;
  out.degree = static_cast<std::size_t>(p.degree());
  out.zero_roots = p.valuation();
  IntPolynomial q = p.unshifted(out.zero_roots);
  if (q.degree() == 0) {
    out.dominant_root_real = true;
    out.all_cyclotomic = false;
    return out;
  }

  bool all_cyclotomic = abs(q.leading()) == 1 && out.zero_roots == 0;
  long double lower = 0, upper = 0;
  long double best_upper = -1;
  bool best_real = false, best_bisected = false;
  auto consider = [&](long double lo, long double hi, bool real, bool bisected) {
    lower = std::max(lower, lo);
    upper = std::max(upper, hi);
    if (hi > best_upper) {
      best_upper = hi;
      best_real = real;
      best_bisected = bisected;
    }
  };

  for (const auto& [f, mult] : squarefree_decomposition(q)) {
    const std::size_t on = count_unit_circle_roots(f);
    IntPolynomial rest = f;
    std::size_t cyc_degree = 0;
    if (on > 0) {
      // Candidate orders from the numerical arguments of roots near the circle,
      // each confirmed by exact division.
      std::set<unsigned> candidates;
      const unsigned max_den = 2 * static_cast<unsigned>(on * on) + 2;
      std::vector<Complex> approx;
      try {
        approx = aberth_roots(f);
      } catch (const Error&) {
      }
      for (const auto& z : approx) {
        if (std::fabs(std::abs(z) - 1) > 1e-6L) continue;
        long double t = std::arg(z) / (2 * kPi);
        if (t < 0) t += 1;
        if (auto m = small_denominator(t, max_den, 1e-9L)) candidates.insert(*m);
      }
      auto take = [&](unsigned m) {
        if (euler_phi(m) > static_cast<unsigned>(rest.degree())) return;
        if (auto div = exact_divide(rest, cyclotomic_polynomial(m))) {
          rest = *div;
          cyc_degree += euler_phi(m);
          out.cyclotomic_factors.emplace_back(m, mult);
        }
      };
      for (unsigned m : candidates) take(m);
      const std::size_t rest_on = on - cyc_degree;
      if (rest_on > 0 && rest_on == static_cast<std::size_t>(rest.degree()) && abs(rest.leading()) == 1) {
        // Kronecker: a monic integer polynomial with all roots on the circle is
        // a product of cyclotomics. Scan exhaustively for the ones missed above.
        for (unsigned m = 1; rest.degree() > 0 && m <= max_den; ++m)
          if (!candidates.count(m)) take(m);
      }
    }
    std::sort(out.cyclotomic_factors.begin(), out.cyclotomic_factors.end());
    const std::size_t rest_on = on - cyc_degree;
    out.on_circle += on * mult;
    if (on > 0) consider(1, 1, false, false);
    if (rest.degree() < 1) continue;
    all_cyclotomic = false;

    std::vector<RootDisc> discs = isolate_roots(rest);
    const std::size_t rd = static_cast<std::size_t>(rest.degree());
    std::size_t outside = 0, inside = 0, ambiguous = 0;
    for (const auto& disc : discs) {
      long double m = std::abs(disc.center);
      if (m - disc.radius > 1)
        ++outside;
      else if (m + disc.radius < 1)
        ++inside;
      else
        ++ambiguous;
    }
    if (reciprocity_sign(rest) != 0) {
      outside = (rd - rest_on) / 2;
      inside = rd - rest_on - outside;
    } else if (ambiguous != rest_on) {
      throw Error(ErrorCode::CertificationFailure, "cannot separate roots from the unit circle for " + rest.to_string());
    }
    out.outside += outside * mult;
    out.inside += inside * mult;

    std::size_t top = 0;
    for (std::size_t i = 1; i < discs.size(); ++i)
      if (std::abs(discs[i].center) + discs[i].radius > std::abs(discs[top].center) + discs[top].radius) top = i;
    for (std::size_t i = 0; i < discs.size(); ++i) {
      const auto& disc = discs[i];
      long double m = std::abs(disc.center);
      long double lo = std::max<long double>(0, m - disc.radius);
      long double hi = m + disc.radius;
      lo *= 1 - 8 * kEps;
      hi *= 1 + 8 * kEps;
      bool bisected = false;
      if (i == top && disc.real) {
        CertifiedReal b = bisect_real_root(rest, disc, static_cast<long double>(tol));
        lo = std::max(lo, b.lower);
        hi = std::min(hi, b.upper);
        bisected = true;
      }
      consider(lo, hi, disc.real, bisected);
    }
  }

  out.all_cyclotomic = all_cyclotomic;
  const std::size_t nonzero = out.degree - out.zero_roots;
  out.house_exactly_one = out.on_circle == nonzero;
  if (out.house_exactly_one) {
    out.house = {1, 1};
    out.path = CertificationPath::Exact;
    out.dominant_root_real = q.evaluate(mpz_class(1)) == 0 || q.evaluate(mpz_class(-1)) == 0;
    return out;
  }
  if (out.outside == 0 && out.on_circle > 0) {
    // No root outside and some on the circle: the house is exactly 1.
    out.house = {1, 1};
    out.path = CertificationPath::Exact;
    out.dominant_root_real = q.evaluate(mpz_class(1)) == 0 || q.evaluate(mpz_class(-1)) == 0;
    return out;
  }
  if (out.outside == 0) upper = std::min<long double>(upper, 1);
  if (out.on_circle > 0) lower = std::max<long double>(lower, 1);
  out.house = {lower, upper};
  out.dominant_root_real = best_real;
  out.path = best_bisected ? CertificationPath::InclusionAndBisection : CertificationPath::InclusionDiscs;
  if (upper - lower > static_cast<long double>(tol))
    throw Error(ErrorCode::CertificationFailure, "certified interval wider than tolerance for " + p.to_string());
  return out;
}

}  // namespace mixsign

#include "mixsign/matrix.hpp"

#include <utility>

namespace mixsign {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j);
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  mpq_class t;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::InternalInconsistency, "singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    mpq_class p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      mpq_class f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        t = f * a(col, j);
        a(i, j) -= t;
        t = f * inv(col, j);
        inv(i, j) -= t;
      }
    }
  }
  return inv;
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  // c holds det(xI - A_r) with the leading coefficient first.
  std::vector<mpz_class> c{1};
  std::vector<mpz_class> v, w;
  mpz_class t;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<mpz_class> toep(r + 2);
    toep[0] = 1;
    toep[1] = -m(r, r);
    v.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      // toep[k] = -R A^{k-2} S
      mpz_class dot = 0;
      for (std::size_t j = 0; j < r; ++j) mpz_addmul(dot.get_mpz_t(), m(r, j).get_mpz_t(), v[j].get_mpz_t());
      toep[k] = -dot;
      if (k + 1 < r + 2) {
        w.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (m(i, j) != 0) mpz_addmul(w[i].get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
        std::swap(v, w);
      }
    }
    std::vector<mpz_class> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= r && j <= i; ++j)
        if (toep[i - j] != 0 && c[j] != 0) mpz_addmul(next[i].get_mpz_t(), toep[i - j].get_mpz_t(), c[j].get_mpz_t());
    c = std::move(next);
  }
  return IntPolynomial(std::vector<mpz_class>(c.rbegin(), c.rend()));
}

IntMatrix companion_matrix(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) throw Error(ErrorCode::NotMonic, "companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

}  // namespace mixsign

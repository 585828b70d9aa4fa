#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixsign {

// Dense integer polynomial, constant term first. The zero polynomial has no
// stored coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);
  static IntPolynomial x_minus(const mpz_class& a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  const mpz_class& coeff(std::size_t k) const;
  const mpz_class& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Multiplicity of the root 0.
  std::size_t valuation() const;

  mpz_class content() const;
  // Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  // x^k * p
  IntPolynomial shifted(std::size_t k) const;
  // p / x^k, requires valuation() >= k
  IntPolynomial unshifted(std::size_t k) const;
  // p(-x)
  IntPolynomial negate_variable() const;
  // p(x^k)
  IntPolynomial substitute_power(std::size_t k) const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const mpz_class& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= mpz_class(-1); }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact division in Z[x]; nullopt if b does not divide a.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);
// Same but throws InternalInconsistency when the division is not exact.
IntPolynomial divide_exactly(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Yun decomposition of a nonconstant polynomial: pairs (f_i, i) with
// p = c * prod f_i^i, each f_i primitive and squarefree, pairwise coprime.
// Constant factors f_i are omitted.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

IntPolynomial reciprocal(const IntPolynomial& q);
// +1 if p* = p, -1 if p* = -p, 0 otherwise (p* taken at degree deg p).
int reciprocity_sign(const IntPolynomial& p);

// Number of distinct real roots in (a, b] of a squarefree polynomial.
std::size_t count_real_roots(const IntPolynomial& squarefree, const mpq_class& a, const mpq_class& b);

// Comma-separated integers, constant term first.
IntPolynomial parse_coefficients(const std::string& text);

}  // namespace mixsign

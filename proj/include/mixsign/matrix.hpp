#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mixsign/error.hpp"
#include "mixsign/polynomial.hpp"

namespace mixsign {

// Dense square matrix, row-major. Column j holds the image of basis vector j.
template <typename Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n) {}
  SquareMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()), a_(n_ * n_) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(ErrorCode::BadParameters, "matrix literal is not square");
      std::size_t j = 0;
      for (long v : row) a_[i * n_ + j++] = v;
      ++i;
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  SquareMatrix& operator*=(const Scalar& s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= Scalar(-1); }
  friend SquareMatrix operator*(SquareMatrix a, const Scalar& s) { return a *= s; }
  friend SquareMatrix operator*(const Scalar& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check(b);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    Scalar t;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar& bkj = b(k, j);
          if (bkj == 0) continue;
          t = aik * bkj;
          c(i, j) += t;
        }
      }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  void check(const SquareMatrix& o) const {
    if (o.n_ != n_) throw Error(ErrorCode::InternalInconsistency, "matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

using IntMatrix = SquareMatrix<mpz_class>;
using RatMatrix = SquareMatrix<mpq_class>;

RatMatrix to_rational(const IntMatrix& m);
// nullopt if some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// Gauss-Jordan over Q. Throws InternalInconsistency on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

// Bareiss fraction-free elimination.
mpz_class determinant(const IntMatrix& m);

// det(xI - M) by the division-free Berkowitz algorithm.
IntPolynomial char_poly(const IntMatrix& m);

// Companion matrix of a monic polynomial (last column holds -c_0..-c_{n-1}).
IntMatrix companion_matrix(const IntPolynomial& p);

}  // namespace mixsign

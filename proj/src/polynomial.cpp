#include "mixsign/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "mixsign/error.hpp"

namespace mixsign {

namespace {

const mpz_class kZero(0);

// Arithmetic mod the Mersenne prime 2^61 - 1, used to short-cut gcd
// computations whose result is 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_reduce(const mpz_class& v) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(t & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

using ModPoly = std::vector<std::uint64_t>;

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd(a, b) mod p, or -1 when the reduction loses a leading term.
int modular_gcd_degree(const IntPolynomial& a, const IntPolynomial& b) {
  ModPoly x, y;
  for (const auto& c : a.coefficients()) x.push_back(mod_reduce(c));
  for (const auto& c : b.coefficients()) y.push_back(mod_reduce(c));
  mod_trim(x);
  mod_trim(y);
  if (static_cast<int>(x.size()) != a.degree() + 1 || static_cast<int>(y.size()) != b.degree() + 1) return -1;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::uint64_t inv = inv_mod(y.back());
    while (x.size() >= y.size() && !x.empty()) {
      std::uint64_t q = mul_mod(x.back(), inv);
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] = sub_mod(x[shift + i], mul_mod(q, y[i]));
      mod_trim(x);
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_minus(const mpz_class& a) {
  return IntPolynomial(std::vector<mpz_class>{mpz_class(-a), mpz_class(1)});
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

const mpz_class& IntPolynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

std::size_t IntPolynomial::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  IntPolynomial r = *this;
  if (g != 1)
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (c_.empty()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::unshifted(std::size_t k) const {
  if (k > valuation()) throw Error(ErrorCode::InternalInconsistency, "unshift past valuation");
  if (c_.empty()) return {};
  return IntPolynomial(std::vector<mpz_class>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

IntPolynomial IntPolynomial::negate_variable() const {
  IntPolynomial r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (c_.empty() || k == 1) return *this;
  std::vector<mpz_class> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  // Homogenized Horner over the integers, one division at the end.
  if (c_.empty()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= num;
    acc += *it * dpow;
    dpow *= den;
  }
  mpz_class scale = dpow / den;  // den^deg
  mpq_class r(acc, scale);
  r.canonicalize();
  return r;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  if (c_.empty()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= num;
    acc += *it * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) out << a.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  std::vector<mpz_class> q(rem.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t = top / lb;
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(rem[k + i].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
    q[k] = t;
  }
  for (std::size_t k = 0; k < db; ++k)
    if (rem[k] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial divide_exactly(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error(ErrorCode::InternalInconsistency, "expected exact division of " + a.to_string() + " by " + b.to_string());
  return *q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const mpz_class& lb = bc.back();
  for (int top = a.degree(); top >= db; --top) {
    mpz_class t = r[top];
    for (int k = 0; k < top; ++k) r[k] *= lb;
    r[top] = 0;
    if (t != 0)
      for (int i = 0; i < db; ++i) mpz_submul(r[top - db + i].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  if (y.degree() == 0) return IntPolynomial{1};
  if (modular_gcd_degree(x, y) == 0) return IntPolynomial{1};
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (p.degree() < 1) return out;
  IntPolynomial f = p.primitive_part();
  IntPolynomial fd = f.derivative();
  IntPolynomial a0 = gcd(f, fd);
  IntPolynomial b = divide_exactly(f, a0);
  IntPolynomial c = divide_exactly(fd, a0);
  IntPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPolynomial ai = gcd(b, d);
    IntPolynomial bn = divide_exactly(b, ai);
    IntPolynomial cn = divide_exactly(d, ai);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = std::move(bn);
    d = cn - b.derivative();
    ++i;
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial r{1};
  for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
  return r;
}

IntPolynomial reciprocal(const IntPolynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reciprocal of zero polynomial");
  std::vector<mpz_class> v(q.coefficients().rbegin(), q.coefficients().rend());
  return IntPolynomial(std::move(v));
}

int reciprocity_sign(const IntPolynomial& p) {
  if (p.is_zero()) return 0;
  const auto& c = p.coefficients();
  const std::size_t n = c.size();
  bool plus = true, minus = true;
  for (std::size_t k = 0; k < n && (plus || minus); ++k) {
    if (c[k] != c[n - 1 - k]) plus = false;
    if (c[k] != -c[n - 1 - k]) minus = false;
  }
  return plus ? 1 : (minus ? -1 : 0);
}

namespace {

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  seq.push_back(p);
  seq.push_back(p.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(da-db+1) * a mod b; keep the Sturm sign -rem.
    int delta = a.degree() - b.degree() + 1;
    bool flip = sgn(b.leading()) < 0 && (delta % 2 == 1);
    mpz_class g = r.content();
    std::vector<mpz_class> v = r.coefficients();
    for (auto& c : v) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      if (!flip) c = -c;
    }
    seq.emplace_back(std::move(v));
  }
  return seq;
}

std::size_t sign_variations(const std::vector<IntPolynomial>& seq, const mpq_class& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

}  // namespace

std::size_t count_real_roots(const IntPolynomial& squarefree, const mpq_class& a, const mpq_class& b) {
  if (squarefree.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (squarefree.degree() < 1 || !(a < b)) return 0;
  auto seq = sturm_sequence(squarefree);
  std::size_t va = sign_variations(seq, a);
  std::size_t vb = sign_variations(seq, b);
  return va >= vb ? va - vb : 0;
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<mpz_class> v;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    std::string tok = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    mpz_class c;
    bool ok = !tok.empty() && tok.find_first_not_of("-0123456789") == std::string::npos &&
              tok.find('-', 1) == std::string::npos && c.set_str(tok, 10) == 0;
    if (!ok)
      throw Error(ErrorCode::ParseError,
                  "bad coefficient '" + item + "' at column " + std::to_string(pos + 1));
    v.push_back(c);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(v));
}

}  // namespace mixsign

#include "metahecke/scalar.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace metahecke {

Poly::Poly(BigInt constant) {
  if (constant != 0) c.push_back(std::move(constant));
}

Poly Poly::monomial(BigInt coeff, int degree) {
  Poly p;
  if (coeff != 0) {
    p.c.assign(degree + 1, BigInt(0));
    p.c[degree] = std::move(coeff);
  }
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& x : c) g = boost::multiprecision::gcd(g, x);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  Poly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Pseudo-remainder of a by b (deg b <= deg a, b nonzero).
Poly pseudo_rem(Poly a, const Poly& b) {
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    BigInt la = a.leading();
    for (auto& x : a.c) x *= lb;
    Poly sub = b * Poly::monomial(la, shift);
    a = a - sub;
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
  if (a.is_zero()) return {};
  // Long division over Q, then check integrality.
  std::vector<BigRat> rem(a.c.begin(), a.c.end());
  int da = a.degree(), db = b.degree();
  if (da < db) throw std::invalid_argument("poly_div_exact: not divisible");
  std::vector<BigRat> quot(da - db + 1, BigRat(0));
  const BigInt& lb = b.leading();
  for (int d = da; d >= db; --d) {
    BigRat q = rem[d] / lb;
    quot[d - db] = q;
    if (q != 0)
      for (int j = 0; j <= db; ++j) rem[d - db + j] -= q * b.c[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::invalid_argument("poly_div_exact: not divisible");
  Poly result;
  result.c.reserve(quot.size());
  for (const auto& q : quot) {
    if (boost::multiprecision::denominator(q) != 1)
      throw std::invalid_argument("poly_div_exact: non-integral quotient");
    result.c.push_back(boost::multiprecision::numerator(q));
  }
  result.trim();
  return result;
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(BigInt(1));
    return;
  }
  size_t dtz = 0;
  while (dtz < den_.c.size() && den_.c[dtz] == 0) ++dtz;
  if (dtz + 1 == den_.c.size()) {
    // monomial denominator c v^k: the polynomial gcd is a power of v, so a
    // coefficient shift replaces the full pseudo-remainder sequence
    size_t ntz = 0;
    while (num_.c[ntz] == 0) ++ntz;
    size_t shift = std::min(ntz, dtz);
    if (shift) {
      num_.c.erase(num_.c.begin(), num_.c.begin() + shift);
      den_.c.erase(den_.c.begin(), den_.c.begin() + shift);
    }
  } else {
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  }
  BigInt cg = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.leading() < 0) cg = -cg;
  if (cg != 1) {
    for (auto& x : num_.c) x /= cg;
    for (auto& x : den_.c) x /= cg;
  }
}

Scalar Scalar::from_rational(const BigRat& r) {
  return Scalar(Poly(boost::multiprecision::numerator(r)),
                Poly(boost::multiprecision::denominator(r)));
}

Scalar Scalar::v() {
  return Scalar(Poly::monomial(BigInt(1), 1), Poly(BigInt(1)));
}

bool Scalar::is_one() const {
  return num_.c.size() == 1 && num_.c[0] == 1 && den_.c.size() == 1 &&
         den_.c[0] == 1;
}

bool Scalar::is_constant() const {
  return num_.degree() <= 0 && den_.degree() <= 0;
}

BigRat Scalar::as_rational() const {
  if (!is_constant()) throw std::logic_error("Scalar::as_rational: not constant");
  if (num_.is_zero()) return BigRat(0);
  return BigRat(num_.c[0], den_.c[0]);
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = Scalar(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::substitute_v(const BigRat& r) const {
  BigRat d = den_.eval(r);
  if (d == 0) throw std::domain_error("Scalar: pole at specialization point");
  return from_rational(num_.eval(r) / d);
}

namespace {

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const BigInt& a = p.c[d];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? "+" : "-");
    else if (a < 0) os << "-";
    BigInt mag = boost::multiprecision::abs(a);
    if (mag != 1 || d == 0) os << mag.str();
    if (d > 0) {
      if (mag != 1) os << "*";
      os << "v";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  std::string n = poly_to_string(num_);
  if (den_.c.size() == 1 && den_.c[0] == 1) return n;
  return "(" + n + ")/(" + poly_to_string(den_) + ")";
}

}  // namespace metahecke

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace metahecke {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense polynomial in one indeterminate v over Z, lowest degree first.
// Always trimmed: no trailing zero coefficients; the zero polynomial is {}.
struct Poly {
  std::vector<BigInt> c;

  Poly() = default;
  explicit Poly(BigInt constant);
  static Poly monomial(BigInt coeff, int degree);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const BigInt& leading() const { return c.back(); }

  void trim();

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  BigInt content() const;      // gcd of coefficients, >= 0; 0 for zero poly
  Poly primitive_part() const;
  BigRat eval(const BigRat& x) const;
};

// gcd of two integer polynomials, returned primitive with positive leading
// coefficient; gcd(0, g) = primitive(g).
Poly poly_gcd(Poly a, Poly b);

// Exact division a / b; throws if b does not divide a over Q or the quotient
// is not integral.
Poly poly_div_exact(const Poly& a, const Poly& b);

// Element of the field Q(v) of rational functions, kept in normal form:
// numerator and denominator are coprime integer polynomials with coprime
// contents and the denominator has positive leading coefficient. The Hecke
// parameter is z = v^2 so that half-powers of z are native.
class Scalar {
 public:
  Scalar() : num_(), den_(BigInt(1)) {}                 // zero
  Scalar(long n) : num_(BigInt(n)), den_(BigInt(1)) {}  // NOLINT: implicit
  explicit Scalar(BigInt n) : num_(std::move(n)), den_(BigInt(1)) {}
  Scalar(Poly num, Poly den);  // normalizes

  static Scalar from_rational(const BigRat& r);
  static Scalar v();                  // the indeterminate
  static Scalar z() { return v() * v(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  BigRat as_rational() const;         // requires is_constant()

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(long e) const;           // e may be negative (requires nonzero)
  Scalar inverse() const;
  Scalar conj() const { return *this; }  // v is real

  // Substitute v -> r, yielding a constant scalar.
  Scalar substitute_v(const BigRat& r) const;

  std::string to_string() const;      // e.g. "(v^2-1)/(v)"

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace metahecke

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metahecke/scalar.hpp"

using namespace metahecke;

namespace {

Poly make_poly(std::initializer_list<long> cs) {
  Poly p;
  for (long c : cs) p.c.emplace_back(c);
  p.trim();
  return p;
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
  auto rand_poly = [&] {
    Poly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p.c.emplace_back(coeff(rng));
    p.trim();
    return p;
  };
  Poly den;
  do {
    den = rand_poly();
  } while (den.is_zero());
  return Scalar(rand_poly(), den);
}

}  // namespace

TEST_CASE("poly basics") {
  Poly a = make_poly({1, 2, 1});   // (1+v)^2
  Poly b = make_poly({1, 1});      // 1+v
  CHECK(poly_gcd(a, b) == b);
  CHECK(poly_div_exact(a, b) == b);
  CHECK(a.degree() == 2);
  CHECK((a - a).is_zero());
  CHECK(make_poly({0, 0, 0}).is_zero());
  CHECK(a.eval(BigRat(1)) == BigRat(4));
}

TEST_CASE("poly gcd is primitive with positive lead") {
  Poly a = make_poly({-2, 0, 2});  // 2(v^2-1)
  Poly b = make_poly({-4, 4});     // 4(v-1)
  Poly g = poly_gcd(a, b);
  CHECK(g == make_poly({-1, 1}));
}

TEST_CASE("scalar normal form") {
  // (v^2-1)/(v+1) = v-1
  Scalar s(make_poly({-1, 0, 1}), make_poly({1, 1}));
  CHECK(s == Scalar(make_poly({-1, 1}), Poly(BigInt(1))));
  // denominator sign normalization
  Scalar t(make_poly({1}), make_poly({0, -1}));
  CHECK(t.den().leading() > 0);
  CHECK(t * Scalar(make_poly({0, 1}), Poly(BigInt(1))) == Scalar(-1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng),
           c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      CHECK(a / a == Scalar(1));
    }
  }
}

TEST_CASE("pow with negative exponents") {
  Scalar v = Scalar::v();
  CHECK(v.pow(0) == Scalar(1));
  CHECK(v.pow(3) == v * v * v);
  CHECK(v.pow(-2) * v.pow(2) == Scalar(1));
  CHECK(Scalar::z() == v.pow(2));
  CHECK_THROWS(Scalar().inverse());
}

TEST_CASE("substitution and rational round trip") {
  Scalar s = (Scalar::z() - Scalar(1)) / Scalar::v();  // (v^2-1)/v
  Scalar at2 = s.substitute_v(BigRat(2));
  CHECK(at2.is_constant());
  CHECK(at2.as_rational() == BigRat(3, 2));
  CHECK_THROWS(Scalar(Scalar(1) / Scalar::v()).substitute_v(BigRat(0)));
  CHECK(Scalar::from_rational(BigRat(-7, 3)).as_rational() == BigRat(-7, 3));
}

TEST_CASE("to_string sanity") {
  CHECK(Scalar::z().to_string() == "v^2");
  CHECK((Scalar::z() - Scalar(1)).to_string() == "v^2-1");
}

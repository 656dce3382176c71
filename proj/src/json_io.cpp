#include "metahecke/json_io.hpp"

#include <stdexcept>

namespace metahecke {

namespace {

Json bigint_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<int64_t>::min() &&
      n <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(n);
  return n.str();  // string fallback for oversized coefficients
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

std::string rational_to_string(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRat rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return BigRat(num, den);
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(bigint_to_json(c));
  return arr;
}

Poly poly_from_json(const Json& j) {
  Poly p;
  for (const auto& c : j) p.c.push_back(bigint_from_json(c));
  p.trim();
  return p;
}

Json scalar_to_json(const Scalar& s) {
  return Json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

Scalar scalar_from_json(const Json& j) {
  return Scalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json mun_to_json(const MuN& m) { return Json{{"n", m.n}, {"e", m.e}}; }

MuN mun_from_json(const Json& j) {
  return MuN::make(j.at("n").get<long>(), j.at("e").get<long>());
}

Json lfelem_to_json(const LocalFieldElem& x) {
  return Json{{"v", x.valuation}, {"u", x.unit.dlog}};
}

LocalFieldElem lfelem_from_json(const Json& j) {
  return LocalFieldElem::make(j.at("v").get<long>(),
                              FFElem::from_dlog(j.at("u").get<int64_t>()));
}

Json weyl_to_json(const TwistedAffineWeylElem& w) {
  return Json{{"s", w.s}, {"num", w.num}, {"perm", w.perm.images}};
}

TwistedAffineWeylElem weyl_from_json(const Json& j) {
  return TwistedAffineWeylElem::from_parts(
      j.at("s").get<long>(), j.at("num").get<std::vector<int64_t>>(),
      Perm{j.at("perm").get<std::vector<int>>()});
}

Json hecke_to_json(const HeckeElement& x) {
  Json arr = Json::array();
  for (const auto& [w, c] : x.coeffs())
    arr.push_back(Json{{"weyl", weyl_to_json(w)}, {"coeff", scalar_to_json(c)}});
  return arr;
}

HeckeElement hecke_from_json(const Json& j, const AlgebraId& id) {
  HeckeElement x(id);
  for (const auto& term : j)
    x.add_term(weyl_from_json(term.at("weyl")),
               scalar_from_json(term.at("coeff")));
  return x;
}

Json intmat_to_json(const IntMat& m) {
  Json arr = Json::array();
  for (const auto& row : m) arr.push_back(row);
  return arr;
}

IntMat intmat_from_json(const Json& j) {
  IntMat m;
  for (const auto& row : j) m.push_back(row.get<IntVec>());
  return m;
}

Json mat_to_json(const Mat& m) {
  Json arr = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(scalar_to_json(e));
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace metahecke

#include "metahecke/ffield.hpp"

#include <cstdlib>
#include <map>
#include <random>

#include "metahecke/errors.hpp"

namespace metahecke {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long max_q_bound() {
  if (const char* env = std::getenv("METAHECKE_MAX_Q")) {
    long b = std::atol(env);
    if (b > 1) return b;
  }
  return FiniteField::kDefaultMaxQ;
}

using PolyP = std::vector<long>;  // coefficients mod p, increasing degree

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, long p) {
  trim(a);
  while (a.size() >= m.size()) {
    long lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      long v = a[shift + i] - lead * m[i] % p;
      a[shift + i] = ((v % p) + p) % p;
    }
    trim(a);
  }
  return a;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

// A monic polynomial of degree k >= 2 is reducible iff it has a monic
// divisor of degree 1..k/2; brute force over all such divisors.
bool divides(const PolyP& d, PolyP a, long p) {
  return poly_mod(std::move(a), d, p).empty();
}

bool is_irreducible(const PolyP& f, long p) {
  long k = static_cast<long>(f.size()) - 1;
  if (k == 1) return true;
  for (long deg = 1; deg <= k / 2; ++deg) {
    // enumerate monic polys of degree deg
    long count = 1;
    for (long i = 0; i < deg; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      PolyP d(deg + 1, 0);
      long c = code;
      for (long i = 0; i < deg; ++i) {
        d[i] = c % p;
        c /= p;
      }
      d[deg] = 1;
      if (divides(d, f, p)) return false;
    }
  }
  return true;
}

long encode(const PolyP& a, long p, long k) {
  long code = 0;
  for (long i = k - 1; i >= 0; --i)
    code = code * p + (i < static_cast<long>(a.size()) ? a[i] : 0);
  return code;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(long p, long k) {
  if (!is_prime(p)) throw err_not_prime(p);
  if (k < 1) throw Error("FieldTooLarge", "extension degree must be >= 1");
  long bound = max_q_bound();
  long q = 1;
  for (long i = 0; i < k; ++i) {
    q *= p;
    if (q > bound) throw err_field_too_large(q, bound);
  }

  auto fld = std::shared_ptr<FiniteField>(new FiniteField());
  fld->p_ = p;
  fld->k_ = k;
  fld->q_ = q;

  // Deterministic scan for a monic irreducible modulus of degree k.
  {
    long count = 1;
    for (long i = 0; i < k; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      PolyP f(k + 1, 0);
      long c = code;
      for (long i = 0; i < k; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[k] = 1;
      if (is_irreducible(f, p)) {
        fld->mod_poly_ = f;
        break;
      }
    }
  }

  // Deterministic scan for a generator: smallest nonzero element, in the
  // base-p encoding of its coefficient vector, of multiplicative order q-1.
  std::vector<char> seen;
  for (long code = 1; code < q; ++code) {
    PolyP g(k, 0);
    long c = code;
    for (long i = 0; i < k; ++i) {
      g[i] = c % p;
      c /= p;
    }
    trim(g);
    // compute powers until hitting 1 or exceeding q-1 steps
    std::vector<PolyP> powers;
    powers.push_back({1});
    PolyP cur = {1};
    bool primitive = true;
    for (long e = 1; e < q - 1; ++e) {
      cur = poly_mul_mod(cur, g, fld->mod_poly_, p);
      if (cur.size() == 1 && cur[0] == 1) {  // order e < q-1
        primitive = false;
        break;
      }
      powers.push_back(cur);
    }
    if (!primitive) continue;
    cur = poly_mul_mod(cur, g, fld->mod_poly_, p);
    if (!(cur.size() == 1 && cur[0] == 1))
      throw Error("InternalError", "generator order check failed");
    fld->gen_poly_.assign(k, 0);
    for (size_t i = 0; i < g.size(); ++i) fld->gen_poly_[i] = g[i];
    fld->powers_.resize(q - 1);
    for (long e = 0; e < q - 1; ++e) {
      fld->powers_[e].assign(k, 0);
      for (size_t i = 0; i < powers[e].size(); ++i)
        fld->powers_[e][i] = powers[e][i];
    }
    break;
  }
  if (fld->powers_.empty())
    throw Error("InternalError", "no generator found");

  // dlog by poly-rep code, then the Zech table.
  std::vector<int64_t> dlog_by_code(q, FFElem::kZero);
  for (long e = 0; e < q - 1; ++e) {
    long code = encode(fld->powers_[e], p, k);
    if (dlog_by_code[code] != FFElem::kZero)
      throw Error("InternalError", "generator has order < q-1");
    dlog_by_code[code] = e;
  }
  fld->zech_.assign(q - 1, FFElem::kZero);
  for (long e = 0; e < q - 1; ++e) {
    PolyP s = fld->powers_[e];
    s.resize(std::max<size_t>(s.size(), 1));
    s[0] = (s[0] + 1) % p;
    trim(s);
    fld->zech_[e] = s.empty() ? FFElem::kZero : dlog_by_code[encode(s, p, k)];
  }

  // Spot-check distributivity on random triples.
  std::mt19937_64 rng(0x5eedULL ^ (static_cast<uint64_t>(p) << 20) ^ k);
  std::uniform_int_distribution<long> pick(-1, q - 2);  // -1 encodes zero
  auto elem = [&](long e) {
    return e < 0 ? FFElem::zero() : FFElem::from_dlog(e);
  };
  for (int trial = 0; trial < 100; ++trial) {
    FFElem a = elem(pick(rng)), b = elem(pick(rng)), c = elem(pick(rng));
    FFElem lhs = fld->mul(a, fld->add(b, c));
    FFElem rhs = fld->add(fld->mul(a, b), fld->mul(a, c));
    if (!(lhs == rhs))
      throw Error("InternalError", "Zech table fails distributivity");
  }
  return fld;
}

FFElem FiniteField::from_int(long m) const {
  m = ((m % p_) + p_) % p_;
  if (m == 0) return FFElem::zero();
  FFElem one_elem = one();
  FFElem acc = FFElem::zero();
  for (long i = 0; i < m; ++i) acc = add(acc, one_elem);
  return acc;
}

FFElem FiniteField::minus_one() const {
  // dlog(-1) = (q-1)/2 in odd characteristic, 0 in characteristic 2.
  return p_ == 2 ? one() : FFElem::from_dlog((q_ - 1) / 2);
}

FFElem FiniteField::add(FFElem x, FFElem y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int64_t d = (y.dlog - x.dlog + (q_ - 1)) % (q_ - 1);
  int64_t zl = zech_[d];
  if (zl == FFElem::kZero) return FFElem::zero();
  return FFElem::from_dlog((x.dlog + zl) % (q_ - 1));
}

FFElem FiniteField::neg(FFElem x) const { return mul(x, minus_one()); }

FFElem FiniteField::sub(FFElem x, FFElem y) const { return add(x, neg(y)); }

FFElem FiniteField::mul(FFElem x, FFElem y) const {
  if (x.is_zero() || y.is_zero()) return FFElem::zero();
  return FFElem::from_dlog((x.dlog + y.dlog) % (q_ - 1));
}

FFElem FiniteField::inv(FFElem x) const {
  if (x.is_zero()) throw err_zero_inverse();
  return FFElem::from_dlog((q_ - 1 - x.dlog) % (q_ - 1));
}

FFElem FiniteField::pow(FFElem x, int64_t e) const {
  if (x.is_zero()) {
    if (e <= 0) throw err_zero_inverse();
    return FFElem::zero();
  }
  int64_t m = q_ - 1;
  int64_t d = ((x.dlog * (e % m)) % m + m) % m;
  return FFElem::from_dlog(d);
}

int64_t FiniteField::dlog(FFElem x) const {
  if (x.is_zero()) throw err_zero_argument("dlog");
  return x.dlog;
}

std::vector<long> FiniteField::to_poly(FFElem x) const {
  if (x.is_zero()) return std::vector<long>(k_, 0);
  return powers_[x.dlog];
}

}  // namespace metahecke

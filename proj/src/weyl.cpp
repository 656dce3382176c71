#include "metahecke/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "metahecke/errors.hpp"

namespace metahecke {

Perm Perm::identity(int t) {
  Perm p;
  p.images.resize(t);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Perm Perm::transposition(int t, int i) {
  Perm p = identity(t);
  std::swap(p.images[i], p.images[i + 1]);
  return p;
}

Perm Perm::pi_cycle(int t) {
  // i -> i-1 mod t; this is the orientation for which conjugation by Pi
  // lowers the index of a simple reflection.
  Perm p;
  p.images.resize(t);
  for (int i = 0; i < t; ++i) p.images[i] = (i + t - 1) % t;
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  r.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) r.images[i] = images[o.images[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) r.images[images[i]] = i;
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

void check_twisted_member(const std::vector<int64_t>& num, long s) {
  if (s < 1) throw err_twist_mismatch();
  if (num.empty()) return;
  int64_t r0 = ((num[0] % s) + s) % s;
  for (int64_t x : num)
    if (((x % s) + s) % s != r0)
      throw Error("NotInLattice",
                  "translation is not in Z^t + Z*(1/s,...,1/s)");
}

// sigma acting on a translation vector: entry j of mu lands in slot sigma(j).
std::vector<int64_t> permute(const Perm& sigma, const std::vector<int64_t>& mu) {
  std::vector<int64_t> r(mu.size());
  for (size_t j = 0; j < mu.size(); ++j) r[sigma(j)] = mu[j];
  return r;
}

}  // namespace

TwistedAffineWeylElem TwistedAffineWeylElem::identity(int t, long s) {
  return TwistedAffineWeylElem{s, std::vector<int64_t>(t, 0),
                               Perm::identity(t)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::translation(
    std::vector<int64_t> lambda, long s) {
  for (auto& x : lambda) x *= s;
  int t = static_cast<int>(lambda.size());
  return TwistedAffineWeylElem{s, std::move(lambda), Perm::identity(t)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::from_parts(long s,
                                                        std::vector<int64_t> num,
                                                        Perm perm) {
  check_twisted_member(num, s);
  return TwistedAffineWeylElem{s, std::move(num), std::move(perm)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::simple_reflection(int t, long s,
                                                               int i) {
  if (i < 1 || i >= t)
    throw Error("BadIndex", "simple reflection index out of range");
  return TwistedAffineWeylElem{s, std::vector<int64_t>(t, 0),
                               Perm::transposition(t, i - 1)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::pi(int t, long s) {
  std::vector<int64_t> num(t, 0);
  num[t - 1] = s;
  return TwistedAffineWeylElem{s, std::move(num), Perm::pi_cycle(t)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::zeta(int t, long s) {
  return TwistedAffineWeylElem{s, std::vector<int64_t>(t, 1),
                               Perm::identity(t)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::affine_reflection(int t, long s) {
  if (t < 2) throw Error("BadIndex", "s_0 needs t >= 2");
  auto Pi = pi(t, s);
  return Pi * simple_reflection(t, s, 1) * Pi.inverse();
}

TwistedAffineWeylElem TwistedAffineWeylElem::operator*(
    const TwistedAffineWeylElem& o) const {
  if (t() != o.t()) throw err_rank_mismatch();
  if (s != o.s) throw err_twist_mismatch();
  std::vector<int64_t> n = num;
  std::vector<int64_t> moved = permute(perm, o.num);
  for (size_t i = 0; i < n.size(); ++i) n[i] += moved[i];
  return TwistedAffineWeylElem{s, std::move(n), perm * o.perm};
}

TwistedAffineWeylElem TwistedAffineWeylElem::inverse() const {
  Perm pinv = perm.inverse();
  std::vector<int64_t> n = permute(pinv, num);
  for (auto& x : n) x = -x;
  return TwistedAffineWeylElem{s, std::move(n), std::move(pinv)};
}

TwistedAffineWeylElem TwistedAffineWeylElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TwistedAffineWeylElem acc = identity(t(), s);
  TwistedAffineWeylElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool TwistedAffineWeylElem::is_identity() const {
  if (!perm.is_identity()) return false;
  for (int64_t x : num)
    if (x != 0) return false;
  return true;
}

bool TwistedAffineWeylElem::operator<(const TwistedAffineWeylElem& o) const {
  return std::tie(s, num, perm.images) < std::tie(o.s, o.num, o.perm.images);
}

TwistedAffineWeylElem TwistedAffineWeylElem::right_mul_simple(int i) const {
  TwistedAffineWeylElem g = i == 0 ? affine_reflection(t(), s)
                                   : simple_reflection(t(), s, i);
  return *this * g;
}

namespace {

// zeta-extraction: common residue b of num mod s, then the integral
// translation (num - b)/s.
std::pair<long, std::vector<int64_t>> split_zeta(
    const TwistedAffineWeylElem& w) {
  check_twisted_member(w.num, w.s);
  long b = w.num.empty() ? 0 : ((w.num[0] % w.s) + w.s) % w.s;
  std::vector<int64_t> lam(w.num.size());
  for (size_t i = 0; i < w.num.size(); ++i) lam[i] = (w.num[i] - b) / w.s;
  return {b, lam};
}

}  // namespace

long length(const TwistedAffineWeylElem& w) {
  auto [b, lam] = split_zeta(w);
  (void)b;
  Perm pinv = w.perm.inverse();
  long len = 0;
  int t = w.t();
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      int64_t d = lam[i] - lam[j] + (pinv(i) > pinv(j) ? 1 : 0);
      len += static_cast<long>(d < 0 ? -d : d);
    }
  return len;
}

ReducedWord reduced_word(const TwistedAffineWeylElem& w) {
  ReducedWord rw;
  auto [b, lam] = split_zeta(w);
  rw.b = b;
  rw.a = std::accumulate(lam.begin(), lam.end(), int64_t{0});
  int t = w.t();
  // u = zeta^-b Pi^-a w lies in the affine Weyl group proper.
  TwistedAffineWeylElem u = TwistedAffineWeylElem::zeta(t, w.s).pow(-rw.b) *
                            TwistedAffineWeylElem::pi(t, w.s).pow(-rw.a) * w;
  std::vector<int> rev;
  long len = length(u);
  while (len > 0) {
    bool stepped = false;
    for (int i = 0; i < t; ++i) {
      TwistedAffineWeylElem next = u.right_mul_simple(i);
      long ln = length(next);
      if (ln < len) {
        rev.push_back(i);
        u = std::move(next);
        len = ln;
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw Error("InternalError", "reduced_word: no descent found");
  }
  if (!u.is_identity())
    throw Error("InternalError", "reduced_word: residual element not trivial");
  rw.word.assign(rev.rbegin(), rev.rend());
  return rw;
}

TwistedAffineWeylElem from_reduced_word(int t, long s, const ReducedWord& rw) {
  TwistedAffineWeylElem w = TwistedAffineWeylElem::pi(t, s).pow(rw.a) *
                            TwistedAffineWeylElem::zeta(t, s).pow(rw.b);
  for (int i : rw.word) w = w.right_mul_simple(i);
  return w;
}

}  // namespace metahecke

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <vector>

#include "metahecke/weyl.hpp"

using namespace metahecke;

namespace {

TwistedAffineWeylElem random_elem(int t, long s, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), pick(0, 5);
  std::vector<int64_t> num(t);
  int64_t b = pick(rng) % s;
  for (auto& x : num) x = coeff(rng) * s + b;
  Perm p = Perm::identity(t);
  for (int k = 0; k < 6; ++k) {
    int i = pick(rng) % (t > 1 ? t - 1 : 1);
    if (t > 1) p = p * Perm::transposition(t, i);
  }
  return TwistedAffineWeylElem::from_parts(s, num, p);
}

// min word length in {s_0,...,s_{t-1}} within the subgroup they generate,
// by breadth-first search
std::map<TwistedAffineWeylElem, long> bfs_lengths(int t, long s, long radius) {
  std::map<TwistedAffineWeylElem, long> dist;
  std::queue<TwistedAffineWeylElem> q;
  auto id = TwistedAffineWeylElem::identity(t, s);
  dist[id] = 0;
  q.push(id);
  while (!q.empty()) {
    auto w = q.front();
    q.pop();
    if (dist[w] == radius) continue;
    for (int i = 0; i < t; ++i) {
      auto w2 = w.right_mul_simple(i);
      if (dist.try_emplace(w2, dist[w] + 1).second) q.push(w2);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("permutation composition and inverse") {
  Perm a = Perm::transposition(3, 0);  // (0 1)
  Perm b = Perm::transposition(3, 1);  // (1 2)
  // (sigma tau)(i) = sigma(tau(i)): (0 1)(1 2) sends 1 -> 2, 2 -> 0... check
  Perm ab = a * b;
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(Perm::identity(4).is_identity());
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(777);
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {3, 2}, {4, 3}}) {
    auto id = TwistedAffineWeylElem::identity(t, s);
    for (int k = 0; k < 100; ++k) {
      auto a = random_elem(t, s, rng), b = random_elem(t, s, rng),
           c = random_elem(t, s, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * id == a);
      CHECK(id * a == a);
      CHECK(a * a.inverse() == id);
      CHECK(a.inverse().inverse() == a);
      CHECK(a.pow(3) == a * a * a);
      CHECK(a.pow(-2) == (a * a).inverse());
    }
  }
}

TEST_CASE("translation conjugation by permutations") {
  // sigma t(mu) sigma^-1 = t(sigma * mu) with (sigma*mu)_{sigma(j)} = mu_j
  int t = 3;
  auto mu = TwistedAffineWeylElem::translation({2, -1, 5}, 1);
  auto sig = TwistedAffineWeylElem::from_parts(
      1, {0, 0, 0}, Perm::transposition(3, 0) * Perm::transposition(3, 1));
  auto conj = sig * mu * sig.inverse();
  CHECK(conj.perm.is_identity());
  std::vector<int64_t> want(t);
  for (int j = 0; j < t; ++j) want[sig.perm(j)] = mu.num[j];
  CHECK(conj.num == want);
}

TEST_CASE("pi rotates the simple reflections") {
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {3, 1}, {4, 2}}) {
    auto Pi = TwistedAffineWeylElem::pi(t, s);
    for (int i = 1; i < t; ++i) {
      auto lhs = Pi * TwistedAffineWeylElem::simple_reflection(t, s, i) *
                 Pi.inverse();
      auto rhs = i == 1 ? TwistedAffineWeylElem::affine_reflection(t, s)
                        : TwistedAffineWeylElem::simple_reflection(t, s, i - 1);
      CHECK(lhs == rhs);
    }
    // Pi s_0 Pi^-1 = s_{t-1}
    CHECK(Pi * TwistedAffineWeylElem::affine_reflection(t, s) * Pi.inverse() ==
          TwistedAffineWeylElem::simple_reflection(t, s, t - 1));
    // Pi^t is the translation by (1,...,1)
    CHECK(Pi.pow(t) ==
          TwistedAffineWeylElem::translation(std::vector<int64_t>(t, 1), s));
  }
}

TEST_CASE("zeta is central of order s upstairs") {
  int t = 3;
  long s = 4;
  auto z = TwistedAffineWeylElem::zeta(t, s);
  std::mt19937 rng(31);
  for (int k = 0; k < 50; ++k) {
    auto a = random_elem(t, s, rng);
    CHECK(a * z == z * a);
  }
  CHECK(z.pow(s) ==
        TwistedAffineWeylElem::translation(std::vector<int64_t>(t, 1), s));
}

TEST_CASE("length closed formula vs BFS") {
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {2, 3}, {3, 1}, {3, 2}}) {
    auto dist = bfs_lengths(t, s, 6);
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
    // the same lengths are insensitive to length-zero twists
    auto Pi = TwistedAffineWeylElem::pi(t, s);
    auto zeta = TwistedAffineWeylElem::zeta(t, s);
    for (const auto& [w, d] : dist) {
      CHECK(length(Pi * w) == d);
      CHECK(length(w * zeta) == d);
    }
  }
}

TEST_CASE("length of named elements") {
  CHECK(length(TwistedAffineWeylElem::pi(3, 1)) == 0);
  CHECK(length(TwistedAffineWeylElem::zeta(2, 5)) == 0);
  CHECK(length(TwistedAffineWeylElem::affine_reflection(2, 1)) == 1);
  CHECK(length(TwistedAffineWeylElem::translation({1, -1}, 1)) == 2);
  CHECK(length(TwistedAffineWeylElem::translation({1, 0}, 1)) == 1);
  CHECK(length(TwistedAffineWeylElem::translation({2, 0, -2}, 1)) == 8);
}

TEST_CASE("reduced word round trip") {
  std::mt19937 rng(99);
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {3, 2}, {4, 1}}) {
    for (int k = 0; k < 100; ++k) {
      auto w = random_elem(t, s, rng);
      ReducedWord rw = reduced_word(w);
      CHECK(static_cast<long>(rw.word.size()) == length(w));
      CHECK(rw.b >= 0);
      CHECK(rw.b < s);
      CHECK(from_reduced_word(t, s, rw) == w);
    }
  }
}

TEST_CASE("affine reflection decomposes as t(-1,0,...,0,1) * transposition") {
  for (int t = 2; t <= 4; ++t) {
    std::vector<int64_t> lam(t, 0);
    lam[0] = -1;
    lam[t - 1] = 1;
    Perm swap = Perm::identity(t);
    std::swap(swap.images[0], swap.images[t - 1]);
    auto want = TwistedAffineWeylElem::translation(lam, 1) *
                TwistedAffineWeylElem::from_parts(
                    1, std::vector<int64_t>(t, 0), swap);
    CHECK(TwistedAffineWeylElem::affine_reflection(t, 1) == want);
  }
}

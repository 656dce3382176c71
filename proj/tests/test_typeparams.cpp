#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "metahecke/errors.hpp"
#include "metahecke/typeparams.hpp"

using namespace metahecke;

namespace {

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("congruence solver worked lattices") {
  // degenerate cover: every equation is 0 = 0
  auto full = solve_congruence(5, 0, 0, {1, 1}, {1, 1});
  CHECK(full.determinant() == 1);
  // KP n=4: only trivial solutions
  auto kp4 = solve_congruence(4, 0, 1, {1, 1}, {1, 1});
  CHECK(kp4.basis == IntMat{{4, 0}, {0, 4}});
  // Savin n=6, l=3: everything solves
  auto sv = solve_congruence(6, -1, 2, {3, 3}, {1, 1});
  CHECK(sv.determinant() == 1);
}

TEST_CASE("kernel route equals enumeration route") {
  for (long n : {2, 3, 4, 6, 8}) {
    for (long c = 0; c < n; ++c)
      for (long d = 0; d < n; ++d)
        for (long l0 : divisors(n))
          for (long r0 : {1L, 2L, 3L}) {
            IntVec l{l0, l0}, r{r0, r0};
            CHECK(solve_congruence(n, c, d, l, r) ==
                  solve_congruence_enumerate(n, c, d, l, r));
          }
  }
  // a non-constant profile as well
  CHECK(solve_congruence(6, 1, 2, {1, 2, 3}, {1, 2, 1}) ==
        solve_congruence_enumerate(6, 1, 2, {1, 2, 3}, {1, 2, 1}));
  CHECK_THROWS_AS(solve_congruence_enumerate(30, 0, 1, {1, 1}, {1, 1}), Error);
}

TEST_CASE("closed forms match the solver on the grid") {
  // the closed forms live on the paper's parameter domain, where r0 is a
  // multiple of m0 and hence of l0
  for (long n = 1; n <= 12; ++n)
    for (long t = 1; t <= 3; ++t)
      for (long r0 = 1; r0 <= 4; ++r0)
        for (long l0 : divisors(n)) {
          if (r0 % l0 != 0) continue;
          IntVec l(t, l0), r(t, r0);
          // KP-covers with all c
          for (long c = 0; c < n; ++c) {
            auto closed = closed_form_solution(n, c, 1, l, r, CoverFlavor::KP);
            CHECK(closed == solve_congruence(n, c, 1, l, r));
          }
          // the S-cover
          auto closed =
              closed_form_solution(n, -1, 2, l, r, CoverFlavor::Savin);
          CHECK(closed == solve_congruence(n, -1, 2, l, r));
        }
  CHECK_THROWS_AS(closed_form_solution(4, 0, 2, {1, 1}, {1, 1},
                                       CoverFlavor::KP),
                  Error);
  CHECK_THROWS_AS(closed_form_solution(4, 0, 1, {1, 1}, {1, 1},
                                       CoverFlavor::Savin),
                  Error);
}

TEST_CASE("invariant triples") {
  // S-cover, n=6, l0=3
  auto sv = TypeParams::make(CoverParams::savin(6), 1, 3, 3, 2);
  auto i1 = invariants_n0_d0_s0(sv);
  CHECK(i1.n0 == 1);
  CHECK(i1.d0 == 1);
  CHECK(i1.s0 == 1);
  // KP, n=3, c=0, r0=2, l0=1, t=2
  auto kp = TypeParams::make(CoverParams::kp(3, 0), 2, 1, 1, 2);
  auto i2 = invariants_n0_d0_s0(kp);
  CHECK(i2.n0 == 3);
  CHECK(i2.d0 == 1);
  CHECK(i2.s0 == 3);
}

TEST_CASE("invariants: divisibility and special-case formulas on a grid") {
  for (long n = 1; n <= 12; ++n)
    for (long t = 1; t <= 3; ++t)
      for (long r0 = 1; r0 <= 4; ++r0)
        for (long l0 : divisors(n)) {
          long m0 = l0;  // l0 | m0 suffices for the formulas
          // KP special case: n0 = n / gcd(n, l0) with c = 0... general c:
          for (long c = 0; c < n; ++c) {
            auto P = TypeParams::make(CoverParams::kp(n, c), r0, m0, l0, t);
            auto inv = invariants_n0_d0_s0(P);
            CHECK(n % inv.n0 == 0);
            CHECK(inv.n0 % inv.d0 == 0);
            CHECK(inv.s0 * inv.d0 == inv.n0);
            long r = r0 * t;
            long g = std::gcd(n, (2 * c + 1) * r0 * l0);
            g = std::gcd(g, l0);  // d = 1
            CHECK(inv.n0 == n / g);
            CHECK(inv.d0 == n / std::gcd(n, l0 * (2 * c * r + r - 1)));
          }
          // S-cover: n0 = d0 = n/gcd(n, 2 l0), s0 = 1
          auto S = TypeParams::make(CoverParams::savin(n), r0, m0, l0, t);
          auto inv = invariants_n0_d0_s0(S);
          CHECK(inv.n0 == n / std::gcd(n, 2 * l0));
          CHECK(inv.d0 == inv.n0);
          CHECK(inv.s0 == 1);
        }
}

TEST_CASE("green-theory l0") {
  // n = q^m0 - 1: every order divides, so o = 1
  auto g1 = l0_from_green(2, 4, 15, 1);
  CHECK(g1.o == 1);
  CHECK(g1.l == 4);
  // n = 1: a regular character needs the full orbit
  auto g2 = l0_from_green(2, 4, 1, 1);
  CHECK(g2.o == 4);
  CHECK(g2.l == 1);
  // brute-force cross-check for q=2,3 and small m0
  for (long q : {2L, 3L}) {
    for (long m0 = 2; m0 <= 4; ++m0) {
      int64_t M = 1;
      for (long i = 0; i < m0; ++i) M *= q;
      M -= 1;  // q^m0 - 1
      for (int64_t xi = 1; xi < M; ++xi) {
        // regularity: orbit of xi under multiplication by q has size m0
        int64_t y = xi;
        long orbit = 0;
        do {
          y = (y * q) % M;
          ++orbit;
        } while (y != xi);
        for (long n : divisors(M)) {
          if (orbit != m0) {
            CHECK_THROWS_AS(l0_from_green(q, m0, n, xi), Error);
            break;
          }
          GreenData g = l0_from_green(q, m0, n, xi);
          CHECK(g.o * g.l == m0);
          // oracle: o = least o with ord(xi^(q^o - 1)) | n
          long o = 0;
          for (long cand = 1; cand <= m0; ++cand) {
            int64_t e = 1;
            for (long i = 0; i < cand; ++i) e *= q;
            int64_t h = (xi * ((e - 1) % M)) % M;
            int64_t ord = M / std::gcd(M, h == 0 ? M : h);
            if (n % ord == 0) {
              o = cand;
              break;
            }
          }
          CHECK(g.o == o);
        }
      }
    }
  }
}

TEST_CASE("W0 vs W0' on KP and Savin grids") {
  for (long n = 1; n <= 12; ++n)
    for (long t = 1; t <= 3; ++t)
      for (long r0 = 1; r0 <= 4; ++r0)
        for (long l0 : divisors(n)) {
          for (long c : {0L, 1L, n - 1}) {
            auto P = TypeParams::make(CoverParams::kp(n, c), r0, l0, l0, t);
            auto cmp = w0_equals_w0prime(P);
            CHECK(cmp.equal);
            CHECK(cmp.index == 1);
            CHECK(hnf_is_sublattice(cmp.w0prime.basis, cmp.t0.basis));
          }
          auto S = TypeParams::make(CoverParams::savin(n), r0, l0, l0, t);
          auto cmp = w0_equals_w0prime(S);
          CHECK(cmp.equal);
          CHECK(cmp.index == 1);
        }
}

TEST_CASE("Pi_E and zeta_E satisfy the defining relation") {
  for (auto P : {TypeParams::make(CoverParams::kp(3, 0), 2, 1, 1, 2),
                 TypeParams::make(CoverParams::kp(4, 1), 1, 2, 2, 3),
                 TypeParams::make(CoverParams::savin(6), 1, 3, 3, 2)}) {
    auto inv = invariants_n0_d0_s0(P);
    auto Pi = pi_E(P);
    auto zeta = zeta_E(P);
    CHECK(Pi.pow(P.t) == zeta.pow(inv.s0));
    // zeta_E is a pure translation by d0 (1,...,1)
    CHECK(zeta.perm.is_identity());
    for (auto x : zeta.num) CHECK(x == inv.d0 * zeta.s);
  }
}

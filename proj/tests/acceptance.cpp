// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check is self-contained and uses independent oracles where
// the library value is not pinned by construction.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "metahecke/cocycle.hpp"
#include "metahecke/hmodules.hpp"

using namespace metahecke;

namespace {

int failures = 0;

void report(int index, const char* name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", index, e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", index,
              name, secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<LocalFieldElem> grid(const LocalField& K, long vmin, long vmax) {
  std::vector<LocalFieldElem> out;
  for (long v = vmin; v <= vmax; ++v)
    for (long e = 0; e < K.q() - 1; ++e)
      out.push_back(LocalFieldElem::make(v, FFElem::from_dlog(e)));
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// --- criterion 1 -----------------------------------------------------------

bool hilbert_laws() {
  for (auto [p, k] : {std::pair<long, long>{5, 1}, {7, 1}, {3, 2}}) {
    long q = 1;
    for (long i = 0; i < k; ++i) q *= p;
    for (long n : divisors(q - 1)) {
      LocalField K(FiniteField::make(p, k), n);
      const FiniteField& f = *K.residue;
      auto g = grid(K, -2, 2);
      for (const auto& x : g)
        for (const auto& y : g) {
          MuN xy = hilbert_symbol(x, y, K);
          if (!(xy + hilbert_symbol(y, x, K)).is_trivial()) return false;
          if (!hilbert_symbol(x, y.pow(n, f), K).is_trivial()) return false;
          if (x.valuation == 0 && y.valuation == 0 && !xy.is_trivial())
            return false;
          if (x.valuation == 0) {
            FFElem om = f.sub(f.one(), x.unit);
            if (!om.is_zero() &&
                !hilbert_symbol(x, LocalFieldElem::make(0, om), K).is_trivial())
              return false;
          }
        }
      // bimultiplicativity over the full cube
      for (const auto& x : g)
        for (const auto& y : g) {
          MuN base = hilbert_symbol(x, y, K);
          for (const auto& w : g) {
            if (hilbert_symbol(x.mul(w, f), y, K) !=
                base + hilbert_symbol(w, y, K))
              return false;
          }
        }
    }
  }
  return true;
}

// --- criterion 2 -----------------------------------------------------------

bool cocycle_cross_consistency() {
  // smallest prime p = 1 mod n per degree
  std::map<long, long> prime_for_n{{1, 5}, {2, 5},  {3, 7},  {4, 5},
                                   {5, 11}, {6, 7}, {7, 29}, {8, 17}};
  std::mt19937 rng(20240817);
  for (long n = 1; n <= 8; ++n) {
    LocalField F(FiniteField::make(prime_for_n[n], 1), n);
    std::uniform_int_distribution<long> val(-2, 2), dl(0, F.q() - 2);
    for (long c = 0; c < n; ++c)
      for (long d = 0; d < n; ++d) {
        CoverParams P = CoverParams::make(n, c, d);
        for (int trial = 0; trial < 1000; ++trial) {
          auto rnd = [&] {
            return LocalFieldElem::make(val(rng), FFElem::from_dlog(dl(rng)));
          };
          std::vector<LocalFieldElem> u{rnd(), rnd()}, v{rnd(), rnd()};
          MuN blockwise = MuN::make(n, 0);
          for (int i = 0; i < 2; ++i)
            blockwise = blockwise + hilbert_symbol(u[i], v[i], F).scaled(2 * c);
          blockwise = blockwise + block_correction(u, v, F, P) +
                      -block_correction(v, u, F, P);
          BlockTorusElem bu{{TorusBlock{1, F, u[0]}, TorusBlock{1, F, u[1]}}};
          BlockTorusElem bv{{TorusBlock{1, F, v[0]}, TorusBlock{1, F, v[1]}}};
          if (blockwise != commutator_field_torus(bu, bv, F, P)) return false;
        }
      }
  }
  return true;
}

// --- criteria 3, 4, 6 ------------------------------------------------------

template <typename Fn>
bool for_cover_grid(Fn fn) {
  for (long n = 1; n <= 12; ++n)
    for (long t = 1; t <= 3; ++t)
      for (long r0 = 1; r0 <= 4; ++r0)
        for (long l0 : divisors(n)) {
          for (long c = 0; c < n; ++c)
            if (!fn(CoverParams::kp(n, c), r0, l0, t, CoverFlavor::KP))
              return false;
          if (!fn(CoverParams::savin(n), r0, l0, t, CoverFlavor::Savin))
            return false;
        }
  return true;
}

bool congruence_closed_forms() {
  return for_cover_grid([](CoverParams P, long r0, long l0, long t,
                           CoverFlavor flavor) {
    // valid type parameters have l0 | m0 | r0
    if (r0 % l0 != 0) return true;
    IntVec l(t, l0), r(t, r0);
    return closed_form_solution(P.n, P.c, P.d, l, r, flavor) ==
           solve_congruence(P.n, P.c, P.d, l, r);
  });
}

bool invariant_identities() {
  return for_cover_grid([](CoverParams P, long r0, long l0, long t,
                           CoverFlavor flavor) {
    auto tp = TypeParams::make(P, r0, l0, l0, t);
    auto inv = invariants_n0_d0_s0(tp);
    if (P.n % inv.n0 != 0 || inv.n0 % inv.d0 != 0 ||
        inv.s0 * inv.d0 != inv.n0)
      return false;
    if (flavor == CoverFlavor::Savin) {
      long g = std::gcd(P.n, 2 * l0);
      if (inv.n0 != P.n / g || inv.d0 != P.n / g || inv.s0 != 1) return false;
    } else if (P.c == 0) {
      if (inv.n0 != P.n / std::gcd(P.n, l0)) return false;
    }
    return true;
  });
}

bool w0_equality() {
  return for_cover_grid(
      [](CoverParams P, long r0, long l0, long t, CoverFlavor) {
        auto cmp = w0_equals_w0prime(TypeParams::make(P, r0, l0, l0, t));
        return cmp.equal && cmp.index == 1;
      });
}

// --- criterion 5 -----------------------------------------------------------

bool elem_zero(const HeckeElement& x) { return x.coeffs().empty(); }

bool weyl_hecke_structure() {
  // eight defining relations across (t, s)
  for (int t = 2; t <= 3; ++t)
    for (long s = 1; s <= 3; ++s) {
      HeckeAlgebra H(AlgebraId::twisted(t, s));
      Scalar z = Scalar::z();
      for (int i = 0; i < t; ++i)
        if (!elem_zero(
                H.multiply(H.simple(i) - H.one() * z, H.simple(i) + H.one())))
          return false;
      for (int i = 1; i + 1 < t; ++i) {
        auto a = H.simple(i), b = H.simple(i + 1);
        if (!elem_zero(H.multiply(H.multiply(a, b), a) -
                       H.multiply(H.multiply(b, a), b)))
          return false;
      }
      for (int i = 1; i < t; ++i)
        for (int j = i + 2; j < t; ++j)
          if (!elem_zero(H.multiply(H.simple(i), H.simple(j)) -
                         H.multiply(H.simple(j), H.simple(i))))
            return false;
      auto Pi = H.pi_elem();
      for (int i = 0; i < t; ++i)
        if (!elem_zero(
                H.multiply(H.multiply(Pi, H.simple(i)), H.pi_inverse()) -
                H.simple((i + t - 1) % t)))
          return false;
      auto zeta = H.zeta_elem();
      for (int i = 0; i < t; ++i)
        if (!elem_zero(H.multiply(zeta, H.simple(i)) -
                       H.multiply(H.simple(i), zeta)))
          return false;
      HeckeElement pit = H.one(), zes = H.one();
      for (int kk = 0; kk < t; ++kk) pit = H.multiply(pit, Pi);
      for (long kk = 0; kk < s; ++kk) zes = H.multiply(zes, zeta);
      if (!elem_zero(pit - zes)) return false;
    }
  // Pi_E^t = zeta_E^{s0} in the twisted affine Weyl group; the algebra-side
  // statement is the [Pi]^t = [zeta]^s relation already checked above
  for (auto P : {TypeParams::make(CoverParams::kp(3, 0), 2, 1, 1, 2),
                 TypeParams::make(CoverParams::kp(4, 1), 1, 2, 2, 3),
                 TypeParams::make(CoverParams::savin(6), 1, 3, 3, 2)}) {
    auto inv = invariants_n0_d0_s0(P);
    if (!(pi_E(P).pow(P.t) == zeta_E(P).pow(inv.s0))) return false;
  }
  // length formula vs BFS, t <= 3 radius <= 6
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    std::map<TwistedAffineWeylElem, long> dist;
    std::queue<TwistedAffineWeylElem> bfs;
    auto id = TwistedAffineWeylElem::identity(t, s);
    dist[id] = 0;
    bfs.push(id);
    while (!bfs.empty()) {
      auto w = bfs.front();
      bfs.pop();
      if (dist[w] == 6) continue;
      for (int i = 0; i < t; ++i) {
        auto w2 = w.right_mul_simple(i);
        if (dist.try_emplace(w2, dist[w] + 1).second) bfs.push(w2);
      }
    }
    HeckeAlgebra H(AlgebraId::twisted(t, s));
    Scalar z = Scalar::z();
    for (const auto& [w, d] : dist) {
      if (length(w) != d) return false;
      // hermitian norm z^l for l <= 5
      if (d <= 5 &&
          H.hermitian_form(H.basis_elem(w), H.basis_elem(w)) != z.pow(d))
        return false;
    }
  }
  // theta additivity: full box at t = 2, all pairs
  {
    HeckeAlgebra H(AlgebraId::affine(2));
    std::vector<std::vector<int64_t>> box;
    std::map<std::pair<int64_t, int64_t>, HeckeElement> cache;
    for (int64_t a = -2; a <= 2; ++a)
      for (int64_t b = -2; b <= 2; ++b) {
        box.push_back({a, b});
        cache.emplace(std::make_pair(a, b), H.bernstein_theta({a, b}));
      }
    std::map<std::pair<int64_t, int64_t>, HeckeElement> sums;
    for (int64_t a = -4; a <= 4; ++a)
      for (int64_t b = -4; b <= 4; ++b)
        sums.emplace(std::make_pair(a, b), H.bernstein_theta({a, b}));
    for (const auto& l1 : box)
      for (const auto& l2 : box) {
        auto prod = H.multiply(cache.at({l1[0], l1[1]}),
                               cache.at({l2[0], l2[1]}));
        if (!elem_zero(prod - sums.at({l1[0] + l2[0], l1[1] + l2[1]})))
          return false;
      }
  }
  // and at t = 3
  {
    HeckeAlgebra H(AlgebraId::affine(3));
    std::map<std::vector<int64_t>, HeckeElement> cache;
    std::vector<std::vector<int64_t>> box;
    for (int64_t a = -2; a <= 2; ++a)
      for (int64_t b = -2; b <= 2; ++b)
        for (int64_t c = -2; c <= 2; ++c) {
          box.push_back({a, b, c});
          cache.emplace(box.back(), H.bernstein_theta(box.back()));
        }
    for (const auto& l1 : box)
      for (const auto& l2 : box) {
        std::vector<int64_t> s{l1[0] + l2[0], l1[1] + l2[1], l1[2] + l2[2]};
        auto it = cache.find(s);
        if (it == cache.end())
          it = cache.emplace(s, H.bernstein_theta(s)).first;
        if (!elem_zero(H.multiply(cache.at(l1), cache.at(l2)) - it->second))
          return false;
      }
  }
  return true;
}

// --- criterion 7 -----------------------------------------------------------

InducedModule module_at_ratio(const BigRat& ratio) {
  CharacterPoint p{{Scalar(1), Scalar::from_rational(ratio)}, std::nullopt};
  return induce(p, 2, AlgebraId::affine(2), BigRat(2));
}

bool reducibility_locus() {
  for (int k = -3; k <= 3; ++k) {
    BigRat ratio(1);
    for (int i = 0; i < std::abs(k); ++i)
      ratio *= k >= 0 ? BigRat(4) : BigRat(1, 4);
    if (is_irreducible(module_at_ratio(ratio), BigRat(2)) !=
        (k != 1 && k != -1))
      return false;
  }
  auto rep = reducibility_point(
      TypeParams::make(CoverParams::kp(3, 0), 2, 1, 1, 2));
  return rep.s_star == BigRat(1, 6) && rep.n0 == 3 &&
         rep.reducible_at_witness && rep.irreducible_at_double &&
         rep.irreducible_at_half;
}

// --- criterion 8 -----------------------------------------------------------

bool trivial_steinberg() {
  for (long zu : {2L, 3L, 5L, 7L}) {
    CharacterPoint p{{Scalar(zu) * Scalar::v(),
                      Scalar(zu) * Scalar::v().pow(-1)},
                     std::nullopt};
    auto M = induce(p, 2, AlgebraId::affine(2), BigRat(2));
    auto cons = one_dim_constituents(M, BigRat(2));
    if (cons.size() != 2) return false;
    int subs = 0;
    bool saw_z = false, saw_m1 = false;
    for (const auto& c : cons) {
      if (c.is_sub) ++subs;
      if (c.sigma_value == BigRat(4)) saw_z = true;
      if (c.sigma_value == BigRat(-1)) saw_m1 = true;
    }
    if (subs != 1 || !saw_z || !saw_m1) return false;
  }
  return true;
}

// --- criterion 9 -----------------------------------------------------------

bool green_consistency() {
  for (long q : {2L, 3L})
    for (long m0 = 1; m0 <= 4; ++m0) {
      int64_t M = 1;
      for (long i = 0; i < m0; ++i) M *= q;
      M -= 1;
      for (int64_t xi = 1; xi < M; ++xi) {
        int64_t y = xi;
        long orbit = 0;
        do {
          y = (y * q) % M;
          ++orbit;
        } while (y != xi);
        if (orbit != m0) continue;  // not regular
        for (long n : divisors(M)) {
          GreenData g = l0_from_green(q, m0, n, xi);
          if (g.o * g.l != m0) return false;
          long o = 0;
          for (long cand = 1; cand <= m0; ++cand) {
            int64_t e = 1;
            for (long i = 0; i < cand; ++i) e *= q;
            int64_t h = (xi % M) * ((e - 1) % M) % M;
            int64_t ord = M / std::gcd(M, h == 0 ? M : h);
            if (n % ord == 0) {
              o = cand;
              break;
            }
          }
          if (g.o != o) return false;
        }
      }
    }
  return true;
}

// --- criterion 10 ----------------------------------------------------------

TwistedAffineWeylElem random_weyl(int t, long s, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2), pick(0, 5);
  std::vector<int64_t> num(t);
  int64_t b = pick(rng) % s;
  for (auto& x : num) x = coeff(rng) * s + b;
  Perm p = Perm::identity(t);
  for (int k = 0; k < 4; ++k)
    if (t > 1) p = p * Perm::transposition(t, pick(rng) % (t - 1));
  return TwistedAffineWeylElem::from_parts(s, num, p);
}

bool hecke_well_defined() {
  std::mt19937 rng(1618);
  // reduced-word independence: 100 cases with a non-canonical reduced word
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {3, 1}}) {
    HeckeAlgebra H(AlgebraId::twisted(t, s));
    std::uniform_int_distribution<int> gen(0, t - 1), len(1, 6);
    int found = 0;
    while (found < 50) {
      int L = len(rng);
      std::vector<int> word(L);
      auto w = TwistedAffineWeylElem::identity(t, s);
      for (int j = 0; j < L; ++j) {
        word[j] = gen(rng);
        w = w.right_mul_simple(word[j]);
      }
      if (length(w) != L) continue;
      ++found;
      auto x = H.basis_elem(random_weyl(t, s, rng));
      if (!elem_zero(H.multiply_basis_via_word(x, ReducedWord{0, 0, word}) -
                     H.multiply(x, H.basis_elem(w))))
        return false;
    }
  }
  // associativity: 200 random basis triples
  for (auto [t, s] : {std::pair<int, long>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    HeckeAlgebra H(AlgebraId::twisted(t, s));
    for (int k = 0; k < 50; ++k) {
      auto a = H.basis_elem(random_weyl(t, s, rng));
      auto b = H.basis_elem(random_weyl(t, s, rng));
      auto c = H.basis_elem(random_weyl(t, s, rng));
      if (!elem_zero(H.multiply(H.multiply(a, b), c) -
                     H.multiply(a, H.multiply(b, c))))
        return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "hilbert symbol laws, exhaustive", hilbert_laws);
  report(2, "cocycle blockwise cross-consistency", cocycle_cross_consistency);
  report(3, "congruence solver vs closed forms", congruence_closed_forms);
  report(4, "invariant identities n0, d0, s0", invariant_identities);
  report(5, "weyl/hecke structure and bernstein additivity",
         weyl_hecke_structure);
  report(6, "W0 = W0' on KP and Savin grids", w0_equality);
  report(7, "reducibility locus and witness", reducibility_locus);
  report(8, "trivial/steinberg constituents", trivial_steinberg);
  report(9, "green-theory o*l = m0", green_consistency);
  report(10, "hecke product well-definedness", hecke_well_defined);
  return failures == 0 ? 0 : 1;
}

#include "metahecke/typeparams.hpp"

#include <numeric>

#include "metahecke/errors.hpp"

namespace metahecke {

namespace {

int64_t gcd3(int64_t a, int64_t b, int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

int64_t mod_pos(int64_t x, int64_t n) { return ((x % n) + n) % n; }

void check_profiles(long n, const IntVec& l, const IntVec& r) {
  if (l.size() != r.size() || l.empty())
    throw err_block_mismatch("profile vectors must have equal positive length");
  for (size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1 || n % l[i] != 0)
      throw err_divisibility_violation("l_i must divide n");
    if (r[i] < 1) throw err_block_mismatch("r_i must be positive");
  }
}

}  // namespace

TypeParams TypeParams::make(CoverParams cover, long r0, long m0, long l0,
                            long t, long f) {
  TypeParams P{cover, r0, m0, l0, t, f};
  if (r0 < 1 || m0 < 1 || l0 < 1 || t < 1 || f < 1)
    throw Error("BadTypeParams", "parameters must be positive");
  if (cover.n % l0 != 0)
    throw err_divisibility_violation("l0 must divide n");
  if (m0 % l0 != 0)
    throw err_divisibility_violation("l0 must divide m0");
  return P;
}

CongruenceLattice solve_congruence(long n, long c, long d, const IntVec& l,
                                   const IntVec& r) {
  check_profiles(n, l, r);
  size_t t = l.size();
  // B[i][j] = coefficient of s_i in equation j: l_j[(2c+d) r_i - d delta_ij]
  IntMat B(t, IntVec(t, 0));
  long cd = 2 * c + d;
  for (size_t i = 0; i < t; ++i)
    for (size_t j = 0; j < t; ++j)
      B[i][j] = mod_pos(l[j] * (cd * r[i] - (i == j ? d : 0)), n);
  CongruenceLattice L;
  L.t = static_cast<int>(t);
  L.basis = kernel_mod(B, n);
  return L;
}

CongruenceLattice solve_congruence_enumerate(long n, long c, long d,
                                             const IntVec& l, const IntVec& r) {
  check_profiles(n, l, r);
  size_t t = l.size();
  if (t > 4 || n > 24)
    throw err_bound_exceeded("enumeration route capped at t <= 4, n <= 24");
  long cd = 2 * c + d;
  IntMat gens;
  for (size_t j = 0; j < t; ++j) {
    IntVec row(t, 0);
    row[j] = n;
    gens.push_back(std::move(row));
  }
  IntVec s(t, 0);
  long total = 1;
  for (size_t j = 0; j < t; ++j) total *= n;
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (size_t j = 0; j < t; ++j) {
      s[j] = x % n;
      x /= n;
    }
    int64_t gamma = 0;
    for (size_t j = 0; j < t; ++j) gamma += s[j] * r[j];
    bool ok = true;
    for (size_t i = 0; i < t && ok; ++i)
      ok = mod_pos(l[i] * (gamma * cd - s[i] * d), n) == 0;
    if (ok) gens.push_back(s);
  }
  CongruenceLattice L;
  L.t = static_cast<int>(t);
  L.basis = hnf_full_rank(std::move(gens), L.t);
  return L;
}

CongruenceLattice closed_form_solution(long n, long c, long d, const IntVec& l,
                                       const IntVec& r, CoverFlavor flavor) {
  check_profiles(n, l, r);
  size_t t = l.size();
  if (flavor == CoverFlavor::KP && mod_pos(d - 1, n) != 0)
    throw err_flavor_mismatch("KP closed form requires d == 1 mod n");
  if (flavor == CoverFlavor::Savin &&
      (mod_pos(c + 1, n) != 0 || mod_pos(d - 2, n) != 0))
    throw err_flavor_mismatch("Savin closed form requires (c,d) == (-1,2) mod n");
  IntMat gens;
  if (flavor == CoverFlavor::KP) {
    for (size_t i = 0; i < t; ++i) {
      IntVec row(t, 0);
      row[i] = n / l[i];
      gens.push_back(std::move(row));
    }
    long rr = 0;
    for (size_t i = 0; i < t; ++i) rr += r[i];
    int64_t step = n / std::gcd<int64_t>(n, std::abs(2 * rr * c + rr - 1) == 0
                                                ? n
                                                : std::abs(2 * rr * c + rr - 1));
    gens.push_back(IntVec(t, (2 * c + 1) * step));
  } else {
    for (size_t i = 0; i < t; ++i) {
      IntVec row(t, 0);
      row[i] = n / std::gcd<int64_t>(n, 2 * l[i]);
      gens.push_back(std::move(row));
    }
  }
  CongruenceLattice L;
  L.t = static_cast<int>(t);
  L.basis = hnf_full_rank(std::move(gens), L.t);
  return L;
}

DerivedInvariants invariants_n0_d0_s0(const TypeParams& P) {
  long n = P.cover.n, c = P.cover.c, d = P.cover.d;
  long r = P.r();
  int64_t cd = 2 * c + d;
  DerivedInvariants inv;
  inv.n0 = n / gcd3(n, mod_pos(cd * P.r0 * P.l0, n), mod_pos(d * P.l0, n));
  inv.d0 = n / std::gcd<int64_t>(n, mod_pos(P.l0 * (cd * r - d), n));
  if (inv.n0 % inv.d0 != 0)
    throw err_divisibility_violation("d0 does not divide n0");
  inv.s0 = inv.n0 / inv.d0;
  return inv;
}

GreenData l0_from_green(long q_l, long m0, long n, int64_t xi_exponent) {
  int64_t M = 1;
  for (long i = 0; i < m0; ++i) M *= q_l;
  M -= 1;  // |l_m0^x|
  int64_t xi = mod_pos(xi_exponent, M);
  // regularity: the Frobenius orbit e -> q_l * e has size exactly m0
  {
    int64_t e = xi;
    for (long j = 1; j < m0; ++j) {
      e = mod_pos(e * q_l, M);
      if (e == xi)
        throw err_not_regular("character has Frobenius orbit of size < m0");
    }
  }
  GreenData g;
  for (long o = 1; o <= m0; ++o) {
    int64_t qo = 1;
    for (long i = 0; i < o; ++i) qo *= q_l;
    int64_t e = mod_pos(xi * (qo - 1), M);  // exponent of xi^{q^o - 1}
    int64_t ord = M / std::gcd(M, e == 0 ? M : e);
    if (n % ord == 0) {
      g.o = o;
      if (m0 % o != 0)
        throw err_divisibility_violation("Green order o does not divide m0");
      g.l = m0 / o;
      return g;
    }
  }
  throw err_not_regular("no Frobenius power of the character has order dividing n");
}

CongruenceLattice w0prime_lattice(const TypeParams& P) {
  DerivedInvariants inv = invariants_n0_d0_s0(P);
  IntMat gens;
  for (long i = 0; i < P.t; ++i) {
    IntVec row(P.t, 0);
    row[i] = inv.n0;
    gens.push_back(std::move(row));
  }
  gens.push_back(IntVec(P.t, inv.d0));
  CongruenceLattice L;
  L.t = static_cast<int>(P.t);
  L.basis = hnf_full_rank(std::move(gens), L.t);
  return L;
}

W0Comparison w0_equals_w0prime(const TypeParams& P) {
  W0Comparison cmp;
  cmp.w0prime = w0prime_lattice(P);
  IntVec l(P.t, P.l0), r(P.t, P.r0);
  cmp.t0 = solve_congruence(P.cover.n, P.cover.c, P.cover.d, l, r);
  if (!hnf_is_sublattice(cmp.w0prime.basis, cmp.t0.basis))
    throw err_not_sublattice("W0' translation lattice not contained in T0");
  cmp.index = cmp.w0prime.determinant() / cmp.t0.determinant();
  cmp.equal = cmp.index == 1;
  return cmp;
}

TwistedAffineWeylElem pi_E(const TypeParams& P) {
  DerivedInvariants inv = invariants_n0_d0_s0(P);
  int t = static_cast<int>(P.t);
  std::vector<int64_t> num(t, 0);
  num[t - 1] = inv.n0 * inv.s0;
  return TwistedAffineWeylElem::from_parts(inv.s0, std::move(num),
                                           Perm::pi_cycle(t));
}

TwistedAffineWeylElem zeta_E(const TypeParams& P) {
  DerivedInvariants inv = invariants_n0_d0_s0(P);
  int t = static_cast<int>(P.t);
  return TwistedAffineWeylElem::translation(std::vector<int64_t>(t, inv.d0),
                                            inv.s0);
}

}  // namespace metahecke

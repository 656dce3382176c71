#pragma once

#include <optional>

#include "metahecke/cocycle.hpp"
#include "metahecke/lattice.hpp"
#include "metahecke/weyl.hpp"

namespace metahecke {

// Combinatorial shadow of a simple type: the cover (n, c, d) together with
// the block data (r0, m0, l0, t) and the unramified degree f of E/F, so
// that q0 = q^{m0 f}.
struct TypeParams {
  CoverParams cover;
  long r0 = 1;
  long m0 = 1;
  long l0 = 1;
  long t = 1;
  long f = 1;

  static TypeParams make(CoverParams cover, long r0, long m0, long l0, long t,
                         long f = 1);
  long r() const { return r0 * t; }
};

// Solution lattice of the intertwining congruences, canonicalized by HNF.
struct CongruenceLattice {
  int t = 0;
  IntMat basis;  // t x t, HNF

  bool operator==(const CongruenceLattice&) const = default;
  bool contains(const IntVec& s) const { return hnf_contains(basis, s); }
  int64_t determinant() const { return hnf_determinant(basis); }
};

// All integer s-vectors with l_i [(sum_j s_j r_j)(2c+d) - s_i d] == 0 mod n
// for every i. Route "kernel": integer linear algebra, any size. Route
// "enumerate": exhaustive residue search, capped at t <= 4, n <= 24 and
// usable as an independent oracle.
CongruenceLattice solve_congruence(long n, long c, long d, const IntVec& l,
                                   const IntVec& r);
CongruenceLattice solve_congruence_enumerate(long n, long c, long d,
                                             const IntVec& l, const IntVec& r);

enum class CoverFlavor { KP, Savin };

// Closed forms from the two neat cases: KP lattice generated by (n/l_i)e_i
// and (2c+1) n/gcd(n, 2rc+r-1) (1,...,1); Savin by (n/gcd(n, 2 l_i)) e_i.
CongruenceLattice closed_form_solution(long n, long c, long d, const IntVec& l,
                                       const IntVec& r, CoverFlavor flavor);

struct DerivedInvariants {
  long n0 = 1;
  long d0 = 1;
  long s0 = 1;
};

// n0 = n/gcd(n, (2c+d) r0 l0, d l0), d0 = n/gcd(n, l0(2cr + dr - d)),
// s0 = n0/d0 (exact, asserted).
DerivedInvariants invariants_n0_d0_s0(const TypeParams& P);

struct GreenData {
  long o = 1;  // smallest o with ord(xi^(q^o - 1)) | n
  long l = 1;  // m0 / o
};

// l0 from a regular character exponent xi mod q_l^{m0} - 1.
GreenData l0_from_green(long q_l, long m0, long n, int64_t xi_exponent);

struct W0Comparison {
  CongruenceLattice t0;        // translation lattice of W0
  CongruenceLattice w0prime;   // n0 Z^t + d0 (1,...,1) Z
  bool equal = false;
  int64_t index = 1;           // [T0 : W0' lattice]
};

CongruenceLattice w0prime_lattice(const TypeParams& P);
W0Comparison w0_equals_w0prime(const TypeParams& P);

// Pi_E and zeta_E as elements of W~(t, s0): translation (0,...,0,n0) with
// the rotation, and translation d0 (1,...,1).
TwistedAffineWeylElem pi_E(const TypeParams& P);
TwistedAffineWeylElem zeta_E(const TypeParams& P);

}  // namespace metahecke

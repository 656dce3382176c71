#pragma once

#include <vector>

#include "metahecke/hilbert.hpp"

namespace metahecke {

// The pair (c, d) mod n classifying an n-fold metaplectic cover of GL_r:
// the 2-cocycle is sigma_det^c * sigma_KP^d. KP-covers have d = 1; the
// S-cover has (c, d) = (-1, 2), so 2c + d = 0.
struct CoverParams {
  long n = 1;
  long c = 0;
  long d = 0;

  static CoverParams make(long n, long c, long d);
  static CoverParams kp(long n, long c) { return make(n, c, 1); }
  static CoverParams savin(long n) { return make(n, -1, 2); }

  bool is_kp() const { return ((d - 1) % n + n) % n == 0; }
  bool is_savin() const {
    return ((c + 1) % n + n) % n == 0 && ((d - 2) % n + n) % n == 0;
  }
  long two_c_plus_d() const { return 2 * c + d; }
};

// One block of an embedded field torus: an element of E_i^x for E_i/F of
// degree d_i. Only unramified E_i are representable (ramified blocks would
// need a finer residue model than (valuation, unit)).
struct TorusBlock {
  long degree = 1;      // d_i = [E_i : F]
  LocalField field;     // residue F_{q^{d_i}}, same n as the base
  LocalFieldElem elem;  // u_i in E_i^x
};

// u in the embedded torus (direct sum of E_i^x).
struct BlockTorusElem {
  std::vector<TorusBlock> blocks;
};

// v in a Levi centralizing the torus, known through its per-block
// determinants det_{E_i}(v_i).
struct LeviDetData {
  std::vector<LocalFieldElem> block_dets;  // over the matching E_i
};

// sigma_det(g1, g2)^c = (det g1, det g2)_n^c, both determinants over F.
MuN sigma_det(const LocalFieldElem& det_g1, const LocalFieldElem& det_g2,
              const LocalField& F, const CoverParams& P);

// Correction factor turning a product of per-block cocycle values into the
// cocycle on the block-diagonal embedding: the double product of symbols
// over i < j with exponent c + d and over j < i with exponent c.
MuN block_correction(const std::vector<LocalFieldElem>& dets1,
                     const std::vector<LocalFieldElem>& dets2,
                     const LocalField& F, const CoverParams& P);

// [z, g] for central z = lambda * I_r: ((2c+d)r - d) * (lambda, det g)_n.
MuN commutator_center(const LocalFieldElem& lambda, const LocalFieldElem& det_g,
                      long r, const LocalField& F, const CoverParams& P);

// [u, v] for u, v in the same embedded field torus with d_i = r_i:
// sum_i -d * (u_i, v_i)_{n,E_i} + (2c+d) * (det_F u, det_F v)_{n,F}.
MuN commutator_field_torus(const BlockTorusElem& u, const BlockTorusElem& v,
                           const LocalField& F, const CoverParams& P);

// [u, v] for v in the centralizer Levi, via the second displayed form:
// sum_i (det_F(u)^{2c+d} u_i^{-d}, det_{E_i}(v_i))_{n,E_i}.
MuN commutator_levi(const BlockTorusElem& u, const LeviDetData& v,
                    const LocalField& F, const CoverParams& P);

// F-determinant of a torus element, via the norms N_{E_i/F}.
LocalFieldElem torus_det_F(const BlockTorusElem& u, const LocalField& F);

// chi_h evaluated on g = diag(g_1,...,g_t) with unit determinants over E:
// sum_i [(sum_j s_j r_j)(2c+d) - s_i d] * (pi_E, det_E g_i)_{n,E}.
MuN chi_h(const std::vector<long>& s, const std::vector<long>& r,
          const std::vector<FFElem>& g_det_units, const LocalField& E,
          const CoverParams& P);

}  // namespace metahecke

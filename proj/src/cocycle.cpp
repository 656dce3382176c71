#include "metahecke/cocycle.hpp"

#include "metahecke/errors.hpp"

namespace metahecke {

CoverParams CoverParams::make(long n, long c, long d) {
  if (n < 1) throw Error("BadCoverParams", "cover degree n must be >= 1");
  return CoverParams{n, ((c % n) + n) % n, ((d % n) + n) % n};
}

MuN sigma_det(const LocalFieldElem& det_g1, const LocalFieldElem& det_g2,
              const LocalField& F, const CoverParams& P) {
  return hilbert_symbol(det_g1, det_g2, F).scaled(P.c);
}

MuN block_correction(const std::vector<LocalFieldElem>& dets1,
                     const std::vector<LocalFieldElem>& dets2,
                     const LocalField& F, const CoverParams& P) {
  if (dets1.size() != dets2.size())
    throw err_block_mismatch("block_correction: block counts differ");
  MuN acc = MuN::make(P.n, 0);
  for (size_t i = 0; i < dets1.size(); ++i)
    for (size_t j = 0; j < dets2.size(); ++j) {
      if (i == j) continue;
      long exp = i < j ? P.c + P.d : P.c;
      acc = acc + hilbert_symbol(dets1[i], dets2[j], F).scaled(exp);
    }
  return acc;
}

MuN commutator_center(const LocalFieldElem& lambda, const LocalFieldElem& det_g,
                      long r, const LocalField& F, const CoverParams& P) {
  return hilbert_symbol(lambda, det_g, F).scaled(P.two_c_plus_d() * r - P.d);
}

LocalFieldElem torus_det_F(const BlockTorusElem& u, const LocalField& F) {
  if (u.blocks.empty()) throw err_block_mismatch("torus element has no blocks");
  LocalFieldElem det = norm_unramified(u.blocks[0].elem, F, u.blocks[0].field);
  for (size_t i = 1; i < u.blocks.size(); ++i)
    det = det.mul(norm_unramified(u.blocks[i].elem, F, u.blocks[i].field),
                  *F.residue);
  return det;
}

namespace {

void check_same_structure(const BlockTorusElem& u, const BlockTorusElem& v) {
  if (u.blocks.size() != v.blocks.size())
    throw err_block_mismatch("torus elements have different block counts");
  for (size_t i = 0; i < u.blocks.size(); ++i)
    if (u.blocks[i].degree != v.blocks[i].degree ||
        u.blocks[i].field.q() != v.blocks[i].field.q())
      throw err_block_mismatch("torus elements have different block fields");
}

}  // namespace

MuN commutator_field_torus(const BlockTorusElem& u, const BlockTorusElem& v,
                           const LocalField& F, const CoverParams& P) {
  check_same_structure(u, v);
  MuN acc = MuN::make(P.n, 0);
  for (size_t i = 0; i < u.blocks.size(); ++i) {
    const LocalField& E = u.blocks[i].field;
    acc = acc + hilbert_symbol(u.blocks[i].elem, v.blocks[i].elem, E)
                    .scaled(-P.d);
  }
  acc = acc + hilbert_symbol(torus_det_F(u, F), torus_det_F(v, F), F)
                  .scaled(P.two_c_plus_d());
  return acc;
}

MuN commutator_levi(const BlockTorusElem& u, const LeviDetData& v,
                    const LocalField& F, const CoverParams& P) {
  if (u.blocks.size() != v.block_dets.size())
    throw err_block_mismatch("commutator_levi: block counts differ");
  LocalFieldElem detFu = torus_det_F(u, F);
  MuN acc = MuN::make(P.n, 0);
  for (size_t i = 0; i < u.blocks.size(); ++i) {
    const LocalField& E = u.blocks[i].field;
    const FiniteField& fE = *E.residue;
    LocalFieldElem lhs = embed_unramified(detFu, F, E)
                             .pow(P.two_c_plus_d(), fE)
                             .mul(u.blocks[i].elem.pow(-P.d, fE), fE);
    acc = acc + hilbert_symbol(lhs, v.block_dets[i], E);
  }
  return acc;
}

MuN chi_h(const std::vector<long>& s, const std::vector<long>& r,
          const std::vector<FFElem>& g_det_units, const LocalField& E,
          const CoverParams& P) {
  if (s.size() != r.size() || s.size() != g_det_units.size())
    throw err_block_mismatch("chi_h: vector lengths differ");
  long gamma = 0;  // s_1 r_1 + ... + s_t r_t
  for (size_t j = 0; j < s.size(); ++j) gamma += s[j] * r[j];
  const FiniteField& fE = *E.residue;
  LocalFieldElem pi = LocalFieldElem::make(1, fE.one());
  MuN acc = MuN::make(P.n, 0);
  for (size_t i = 0; i < s.size(); ++i) {
    if (g_det_units[i].is_zero()) throw err_non_unit_determinant();
    LocalFieldElem gi = LocalFieldElem::make(0, g_det_units[i]);
    long exp = gamma * P.two_c_plus_d() - s[i] * P.d;
    acc = acc + hilbert_symbol(pi, gi, E).scaled(exp);
  }
  return acc;
}

}  // namespace metahecke

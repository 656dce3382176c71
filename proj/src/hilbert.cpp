#include "metahecke/hilbert.hpp"

#include "metahecke/errors.hpp"

namespace metahecke {

MuN MuN::operator+(MuN o) const {
  if (n != o.n) throw err_modulus_mismatch(o.n, n + 1);
  return make(n, e + o.e);
}

LocalField::LocalField(FieldPtr res, long n_) : residue(std::move(res)), n(n_) {
  if (n < 1 || (residue->q() - 1) % n != 0)
    throw err_modulus_mismatch(n, residue->q());
}

LocalFieldElem LocalFieldElem::make(long val, FFElem u) {
  if (u.is_zero())
    throw err_zero_argument("LocalFieldElem: unit part must be nonzero");
  return LocalFieldElem{val, u};
}

LocalFieldElem LocalFieldElem::mul(const LocalFieldElem& o,
                                   const FiniteField& f) const {
  return LocalFieldElem{valuation + o.valuation, f.mul(unit, o.unit)};
}

LocalFieldElem LocalFieldElem::inv(const FiniteField& f) const {
  return LocalFieldElem{-valuation, f.inv(unit)};
}

LocalFieldElem LocalFieldElem::pow(long e, const FiniteField& f) const {
  return LocalFieldElem{valuation * e, f.pow(unit, e)};
}

MuN hilbert_symbol(const LocalFieldElem& x, const LocalFieldElem& y,
                   const LocalField& K) {
  const FiniteField& f = *K.residue;
  // tame symbol in the residue field
  FFElem t = f.mul(f.pow(x.unit, y.valuation), f.pow(y.unit, -x.valuation));
  if ((x.valuation % 2 != 0) && (y.valuation % 2 != 0))
    t = f.mul(t, f.minus_one());
  // t^((q-1)/n) lies in mu_n = <g^((q-1)/n)>; read off its exponent.
  return MuN::make(K.n, static_cast<long>(f.dlog(t) % K.n));
}

LocalFieldElem embed_unramified(const LocalFieldElem& x_over_F,
                                const LocalField& F, const LocalField& E) {
  long qF = F.q(), qE = E.q();
  long ratio = (qE - 1) / (qF - 1);
  if ((qE - 1) % (qF - 1) != 0)
    throw err_degree_mismatch("residue field of E does not extend that of F");
  int64_t d = F.residue->dlog(x_over_F.unit);
  return LocalFieldElem{x_over_F.valuation,
                        FFElem::from_dlog((d * ratio) % (qE - 1))};
}

LocalFieldElem norm_unramified(const LocalFieldElem& y_over_E,
                               const LocalField& F, const LocalField& E) {
  long qF = F.q(), qE = E.q();
  if ((qE - 1) % (qF - 1) != 0)
    throw err_degree_mismatch("residue field of E does not extend that of F");
  // f = [E:F]; N(pi_F^v u) has valuation f*v and unit residue u^((qE-1)/(qF-1)).
  long f_deg = 0;
  for (long t = qF; ; t *= qF) {
    ++f_deg;
    if (t == qE) break;
    if (t > qE) throw err_degree_mismatch("q_E is not a power of q_F");
  }
  long ratio = (qE - 1) / (qF - 1);
  int64_t dE = E.residue->dlog(y_over_E.unit);
  // u^ratio lands in the image of F_q^x; pull its dlog back to the F side.
  int64_t dn = (dE * ratio) % (qE - 1);
  if (dn % ratio != 0)
    throw err_degree_mismatch("norm residue not in the base field");
  return LocalFieldElem{y_over_E.valuation * f_deg,
                        FFElem::from_dlog(dn / ratio)};
}

MuN hilbert_symbol_unramified(const LocalFieldElem& x_over_F,
                              const LocalFieldElem& y_over_E,
                              const LocalField& F, const LocalField& E) {
  if (F.n != E.n)
    throw err_degree_mismatch("symbol modulus differs between E and F");
  MuN direct =
      hilbert_symbol(embed_unramified(x_over_F, F, E), y_over_E, E);
  MuN via_norm =
      hilbert_symbol(x_over_F, norm_unramified(y_over_E, F, E), F);
  if (!(direct == via_norm))
    throw Error("InternalError",
                "unramified symbol: direct and norm routes disagree");
  return direct;
}

}  // namespace metahecke

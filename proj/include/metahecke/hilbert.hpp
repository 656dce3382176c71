#pragma once

#include "metahecke/ffield.hpp"

namespace metahecke {

// n-th roots of unity, written additively: exponent e mod n stands for
// zeta^e. The identification with mu_n inside a residue field F_q is
// zeta = g^((q-1)/n) for the field's fixed generator g.
struct MuN {
  long n = 1;
  long e = 0;

  static MuN make(long n, long e) { return MuN{n, ((e % n) + n) % n}; }
  MuN operator+(MuN o) const;
  MuN operator-() const { return make(n, -e); }
  MuN scaled(long c) const { return make(n, (((c % n) + n) % n) * e); }
  bool is_trivial() const { return e == 0; }
  bool operator==(const MuN&) const = default;
};

// Tame local field: only the residue field and the symbol modulus n | q-1
// are carried; the uniformizer is symbolic.
struct LocalField {
  FieldPtr residue;
  long n;

  LocalField(FieldPtr res, long n_);
  long q() const { return residue->q(); }
};

// Element of the local field up to the data the tame symbol sees: the
// valuation and the residue of the unit part. This is a representable-class
// restriction; nothing deeper in the pi-adic expansion is stored.
struct LocalFieldElem {
  long valuation = 0;
  FFElem unit;  // nonzero residue

  static LocalFieldElem make(long val, FFElem u);
  LocalFieldElem mul(const LocalFieldElem& o, const FiniteField& f) const;
  LocalFieldElem inv(const FiniteField& f) const;
  LocalFieldElem pow(long e, const FiniteField& f) const;
};

// Tame n-th Hilbert symbol (x, y)_n over K, via the tame symbol
// t = (-1)^{v(x)v(y)} u(x)^{v(y)} u(y)^{-v(x)} in the residue field and
// the exponent of t^((q-1)/n) in mu_n.
MuN hilbert_symbol(const LocalFieldElem& x, const LocalFieldElem& y,
                   const LocalField& K);

// Symbol over the degree-f unramified extension E/F for x defined over F:
// computes both (x, y)_{n,E} directly over the residue field F_{q^f} and
// (x, N_{E/F}(y))_{n,F} through the norm, checks that the two routes agree,
// and returns the common value.
//
// F is the base field (residue F_q); E must have residue F_{q^f} with the
// same n. The embedding F_q into F_{q^f} sends the generator of F_q to
// g_E^((q^f-1)/(q-1)).
MuN hilbert_symbol_unramified(const LocalFieldElem& x_over_F,
                              const LocalFieldElem& y_over_E,
                              const LocalField& F, const LocalField& E);

// Norm N_{E/F} for the unramified extension with residue fields as above.
LocalFieldElem norm_unramified(const LocalFieldElem& y_over_E,
                               const LocalField& F, const LocalField& E);

// Image of an F-element inside E (unramified, so the valuation is kept and
// the unit residue is embedded).
LocalFieldElem embed_unramified(const LocalFieldElem& x_over_F,
                                const LocalField& F, const LocalField& E);

}  // namespace metahecke

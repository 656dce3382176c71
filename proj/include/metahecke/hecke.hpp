#pragma once

#include <map>
#include <vector>

#include "metahecke/scalar.hpp"
#include "metahecke/weyl.hpp"

namespace metahecke {

enum class HeckeFlavor { Finite, Affine, Twisted };

// Identifies one of H_0(t,z), H(t,z), H~(t,s,z). The finite and linear
// affine flavors are stored with s = 1.
struct AlgebraId {
  HeckeFlavor flavor = HeckeFlavor::Affine;
  int t = 1;
  long s = 1;

  static AlgebraId finite(int t) { return {HeckeFlavor::Finite, t, 1}; }
  static AlgebraId affine(int t) { return {HeckeFlavor::Affine, t, 1}; }
  static AlgebraId twisted(int t, long s) { return {HeckeFlavor::Twisted, t, s}; }
  bool operator==(const AlgebraId&) const = default;
};

// Element of a Hecke algebra in the Iwahori-Matsumoto basis: a finitely
// supported map from the (twisted affine) Weyl group to Q(v), z = v^2.
// Zero coefficients are never stored.
class HeckeElement {
 public:
  explicit HeckeElement(AlgebraId id) : id_(id) {}

  const AlgebraId& id() const { return id_; }
  const std::map<TwistedAffineWeylElem, Scalar>& coeffs() const {
    return coeffs_;
  }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(const TwistedAffineWeylElem& w) const;
  void add_term(const TwistedAffineWeylElem& w, const Scalar& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const Scalar& c) const;
  bool operator==(const HeckeElement& o) const {
    return id_ == o.id_ && coeffs_ == o.coeffs_;
  }

 private:
  AlgebraId id_;
  std::map<TwistedAffineWeylElem, Scalar> coeffs_;
};

// The algebra: construction of IM basis elements and relation-driven
// multiplication. All three flavors share the multiplication engine; the
// flavor only constrains which group elements are admissible.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(AlgebraId id);

  const AlgebraId& id() const { return id_; }
  int t() const { return id_.t; }
  long s() const { return id_.s; }

  HeckeElement zero() const { return HeckeElement(id_); }
  HeckeElement one() const;
  HeckeElement basis_elem(const TwistedAffineWeylElem& w) const;
  HeckeElement simple(int i) const;        // [s_i], i in 0..t-1
  HeckeElement pi_elem() const;            // [Pi]
  HeckeElement zeta_elem() const;          // [zeta]

  // [w][s_i] = [w s_i] if the length goes up, else z[w s_i] + (z-1)[w];
  // general products expand the right factor along its reduced word.
  HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const;
  // Same expansion but along an externally supplied decomposition of a
  // basis element; used to test independence of the reduced-word choice.
  HeckeElement multiply_basis_via_word(const HeckeElement& x,
                                       const ReducedWord& rw) const;

  // [s_i]^-1 = z^-1 [s_i] + (z^-1 - 1); [Pi]^-1 and [zeta]^-1 are basis
  // elements of the inverse group elements.
  HeckeElement simple_inverse(int i) const;
  HeckeElement pi_inverse() const;
  HeckeElement zeta_inverse() const;
  // [w]^-1 for a single basis element, via its reduced word.
  HeckeElement basis_inverse(const TwistedAffineWeylElem& w) const;

  // Bernstein element theta_lambda = [t(mu)] [t(nu)]^-1 with lambda =
  // mu - nu and mu, nu dominant. lambda is integral for the affine flavor;
  // the twisted flavor additionally accepts the lattice Z^t_{1/s} through
  // num = s*lambda.
  HeckeElement bernstein_theta(const std::vector<int64_t>& lambda) const;
  HeckeElement bernstein_theta_num(const std::vector<int64_t>& num) const;

  // <x, y> = sum_w x_w conj(y_w) z^{l(w)}.
  Scalar hermitian_form(const HeckeElement& x, const HeckeElement& y) const;

 private:
  void check_member(const TwistedAffineWeylElem& w) const;
  HeckeElement right_mul_simple(const HeckeElement& x, int i) const;
  HeckeElement right_mul_length_zero(const HeckeElement& x,
                                     const TwistedAffineWeylElem& w0) const;

  AlgebraId id_;
};

}  // namespace metahecke

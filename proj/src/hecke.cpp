#include "metahecke/hecke.hpp"

#include <algorithm>

#include "metahecke/errors.hpp"

namespace metahecke {

Scalar HeckeElement::coeff(const TwistedAffineWeylElem& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void HeckeElement::add_term(const TwistedAffineWeylElem& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (!(id_ == o.id_)) throw err_algebra_mismatch();
  HeckeElement r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  if (!(id_ == o.id_)) throw err_algebra_mismatch();
  HeckeElement r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, -c);
  return r;
}

HeckeElement HeckeElement::operator*(const Scalar& c) const {
  HeckeElement r(id_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : coeffs_) r.add_term(w, cw * c);
  return r;
}

HeckeAlgebra::HeckeAlgebra(AlgebraId id) : id_(id) {
  if (id_.t < 1) throw Error("BadAlgebra", "rank t must be >= 1");
  if (id_.s < 1) throw Error("BadAlgebra", "twist s must be >= 1");
  if (id_.flavor != HeckeFlavor::Twisted && id_.s != 1)
    throw err_flavor_mismatch("only the twisted flavor carries s > 1");
}

void HeckeAlgebra::check_member(const TwistedAffineWeylElem& w) const {
  if (w.t() != id_.t) throw err_rank_mismatch();
  if (w.s != id_.s) throw err_twist_mismatch();
  if (id_.flavor == HeckeFlavor::Finite)
    for (int64_t x : w.num)
      if (x != 0)
        throw err_flavor_mismatch(
            "finite flavor supports pure permutations only");
}

HeckeElement HeckeAlgebra::one() const {
  return basis_elem(TwistedAffineWeylElem::identity(id_.t, id_.s));
}

HeckeElement HeckeAlgebra::basis_elem(const TwistedAffineWeylElem& w) const {
  check_member(w);
  HeckeElement e(id_);
  e.add_term(w, Scalar(1));
  return e;
}

HeckeElement HeckeAlgebra::simple(int i) const {
  if (i == 0 && id_.flavor == HeckeFlavor::Finite)
    throw err_flavor_mismatch("[s_0] is not in the finite algebra");
  return basis_elem(i == 0
                        ? TwistedAffineWeylElem::affine_reflection(id_.t, id_.s)
                        : TwistedAffineWeylElem::simple_reflection(id_.t, id_.s,
                                                                   i));
}

HeckeElement HeckeAlgebra::pi_elem() const {
  if (id_.flavor == HeckeFlavor::Finite)
    throw err_flavor_mismatch("[Pi] is not in the finite algebra");
  return basis_elem(TwistedAffineWeylElem::pi(id_.t, id_.s));
}

HeckeElement HeckeAlgebra::zeta_elem() const {
  if (id_.flavor == HeckeFlavor::Finite)
    throw err_flavor_mismatch("[zeta] is not in the finite algebra");
  return basis_elem(TwistedAffineWeylElem::zeta(id_.t, id_.s));
}

HeckeElement HeckeAlgebra::right_mul_simple(const HeckeElement& x,
                                            int i) const {
  HeckeElement r(id_);
  Scalar z = Scalar::z();
  Scalar zm1 = z - Scalar(1);
  for (const auto& [u, c] : x.coeffs()) {
    TwistedAffineWeylElem u2 = u.right_mul_simple(i);
    if (length(u2) > length(u)) {
      r.add_term(u2, c);
    } else {
      r.add_term(u2, c * z);
      r.add_term(u, c * zm1);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::right_mul_length_zero(
    const HeckeElement& x, const TwistedAffineWeylElem& w0) const {
  HeckeElement r(id_);
  for (const auto& [u, c] : x.coeffs()) r.add_term(u * w0, c);
  return r;
}

HeckeElement HeckeAlgebra::multiply_basis_via_word(const HeckeElement& x,
                                                   const ReducedWord& rw) const {
  TwistedAffineWeylElem w0 = TwistedAffineWeylElem::pi(id_.t, id_.s).pow(rw.a) *
                             TwistedAffineWeylElem::zeta(id_.t, id_.s).pow(rw.b);
  HeckeElement r = right_mul_length_zero(x, w0);
  for (int i : rw.word) r = right_mul_simple(r, i);
  return r;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& x,
                                    const HeckeElement& y) const {
  if (!(x.id() == id_) || !(y.id() == id_)) throw err_algebra_mismatch();
  HeckeElement result(id_);
  for (const auto& [w, c] : y.coeffs()) {
    HeckeElement term = multiply_basis_via_word(x, reduced_word(w));
    result = result + term * c;
  }
  return result;
}

HeckeElement HeckeAlgebra::simple_inverse(int i) const {
  // [s_i]^-1 = z^-1 [s_i] + (z^-1 - 1) [1]
  Scalar zinv = Scalar::z().inverse();
  HeckeElement r = simple(i) * zinv;
  r.add_term(TwistedAffineWeylElem::identity(id_.t, id_.s),
             zinv - Scalar(1));
  return r;
}

HeckeElement HeckeAlgebra::pi_inverse() const {
  return basis_elem(TwistedAffineWeylElem::pi(id_.t, id_.s).inverse());
}

HeckeElement HeckeAlgebra::zeta_inverse() const {
  return basis_elem(TwistedAffineWeylElem::zeta(id_.t, id_.s).inverse());
}

HeckeElement HeckeAlgebra::basis_inverse(const TwistedAffineWeylElem& w) const {
  check_member(w);
  ReducedWord rw = reduced_word(w);
  HeckeElement r = one();
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it)
    r = multiply(r, simple_inverse(*it));
  TwistedAffineWeylElem tail =
      TwistedAffineWeylElem::zeta(id_.t, id_.s).pow(-rw.b) *
      TwistedAffineWeylElem::pi(id_.t, id_.s).pow(-rw.a);
  return right_mul_length_zero(r, tail);
}

HeckeElement HeckeAlgebra::bernstein_theta(
    const std::vector<int64_t>& lambda) const {
  std::vector<int64_t> num(lambda);
  for (auto& x : num) x *= id_.s;
  return bernstein_theta_num(num);
}

HeckeElement HeckeAlgebra::bernstein_theta_num(
    const std::vector<int64_t>& num) const {
  if (static_cast<int>(num.size()) != id_.t) throw err_rank_mismatch();
  if (id_.flavor == HeckeFlavor::Finite)
    throw err_flavor_mismatch("no Bernstein elements in the finite algebra");
  long s = id_.s;
  int64_t b = num.empty() ? 0 : ((num[0] % s) + s) % s;
  std::vector<int64_t> lam(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    if (((num[i] % s) + s) % s != b)
      throw Error("NotInLattice", "theta argument not in Z^t_{1/s}");
    lam[i] = (num[i] - b) / s;
  }
  // lambda = mu - nu with both dominant (weakly decreasing entries); the
  // minimal such nu accumulates the ascent deficits from the right
  int t = id_.t;
  std::vector<int64_t> mu(t), nu(t);
  nu[t - 1] = 0;
  for (int i = t - 2; i >= 0; --i)
    nu[i] = nu[i + 1] + std::max<int64_t>(0, lam[i + 1] - lam[i]);
  for (int i = 0; i < t; ++i) mu[i] = lam[i] + nu[i];
  auto tmu = TwistedAffineWeylElem::translation(mu, s);
  auto tnu = TwistedAffineWeylElem::translation(nu, s);
  // normalization v^{l(nu) - l(mu)}: makes theta multiplicative AND places
  // the induced-module X-eigenvalues on the S_t-orbit of the character
  HeckeElement theta = multiply(basis_elem(tmu), basis_inverse(tnu)) *
                       Scalar::v().pow(length(tnu) - length(tmu));
  if (b != 0) {
    // Z^b with Z = [zeta]; central, so the side does not matter.
    theta = right_mul_length_zero(
        theta, TwistedAffineWeylElem::zeta(t, s).pow(b));
  }
  return theta;
}

Scalar HeckeAlgebra::hermitian_form(const HeckeElement& x,
                                    const HeckeElement& y) const {
  if (!(x.id() == id_) || !(y.id() == id_)) throw err_algebra_mismatch();
  Scalar z = Scalar::z();
  Scalar acc;
  for (const auto& [w, cx] : x.coeffs()) {
    Scalar cy = y.coeff(w);
    if (cy.is_zero()) continue;
    acc += cx * cy.conj() * z.pow(length(w));
  }
  return acc;
}

}  // namespace metahecke

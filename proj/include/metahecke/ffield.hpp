#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace metahecke {

class FiniteField;

// Element of a finite field, stored as the discrete logarithm with respect
// to the field's fixed generator, or as the zero marker.
struct FFElem {
  static constexpr int64_t kZero = -1;
  int64_t dlog = kZero;  // in [0, q-1) for nonzero elements

  bool is_zero() const { return dlog == kZero; }
  static FFElem zero() { return FFElem{}; }
  static FFElem from_dlog(int64_t e) { return FFElem{e}; }
  bool operator==(const FFElem&) const = default;
};

// Small finite field F_q, q = p^k, with Zech-logarithm addition. Elements
// are powers of a fixed generator; the Zech table realizes x -> x+1 on the
// nonzero elements. Immutable after construction.
class FiniteField {
 public:
  // Default cap on q; overridable via the env var METAHECKE_MAX_Q.
  static constexpr long kDefaultMaxQ = 1 << 16;

  static std::shared_ptr<const FiniteField> make(long p, long k);

  long p() const { return p_; }
  long k() const { return k_; }
  long q() const { return q_; }

  // Generator in the polynomial basis F_p[X]/(modulus), coefficients of
  // increasing degree. Recorded so runs are reproducible.
  const std::vector<long>& generator_poly() const { return gen_poly_; }
  const std::vector<long>& modulus_poly() const { return mod_poly_; }

  FFElem one() const { return FFElem::from_dlog(0); }
  FFElem generator() const { return FFElem::from_dlog(1); }
  // The element "m mod p" of the prime subfield.
  FFElem from_int(long m) const;
  FFElem minus_one() const;

  FFElem add(FFElem x, FFElem y) const;
  FFElem sub(FFElem x, FFElem y) const;
  FFElem mul(FFElem x, FFElem y) const;
  FFElem neg(FFElem x) const;
  FFElem inv(FFElem x) const;
  FFElem pow(FFElem x, int64_t e) const;

  int64_t dlog(FFElem x) const;  // throws ZeroArgument on zero

  // Polynomial-basis representation of an element (length k, entries in
  // [0, p)); mainly for reproducibility output and cross-checks.
  std::vector<long> to_poly(FFElem x) const;

 private:
  FiniteField() = default;

  long p_ = 0, k_ = 0, q_ = 0;
  std::vector<long> mod_poly_;           // monic irreducible, length k+1
  std::vector<long> gen_poly_;           // generator, length k
  std::vector<int64_t> zech_;            // zech_[e] = dlog(g^e + 1), kZero if g^e = -1
  std::vector<std::vector<long>> powers_;  // dlog -> poly rep
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace metahecke

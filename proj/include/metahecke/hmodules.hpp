#pragma once

#include <optional>

#include "metahecke/hecke.hpp"
#include "metahecke/typeparams.hpp"

namespace metahecke {

using Mat = std::vector<std::vector<Scalar>>;

// Character of the Bernstein subalgebra A(t) (resp. A~(t,s)): X_i acts by
// x_i; for the twisted flavor Z acts by zval with zval^s = x_1 ... x_t.
struct CharacterPoint {
  std::vector<Scalar> x;
  std::optional<Scalar> zval;

  int t() const { return static_cast<int>(x.size()); }
};

// Ind_A^H(C_x) on the basis {[sigma] (x) 1 : sigma in S_t}, with explicit
// action matrices for the algebra generators. Matrices act on column
// vectors; column sigma of act(g) is the expansion of g * ([sigma] (x) 1).
struct InducedModule {
  AlgebraId algebra;
  CharacterPoint point;
  int dim = 1;
  std::vector<Perm> basis;          // S_t, lexicographic
  std::vector<Mat> sigma_action;    // [s_1], ..., [s_{t-1}]
  Mat pi_action;                    // [Pi]
  std::vector<Mat> x_action;        // X_1, ..., X_t
  std::optional<Scalar> zeta_scalar;  // twisted flavor: [zeta] acts by this
  std::optional<Scalar> spec_z;       // z after substitution, when specialized

  // generator matrices used for irreducibility testing
  std::vector<const Mat*> generators() const;
};

// Build the induced module. Generator actions outside the finite part are
// obtained by re-expressing products in the basis {[tau] theta_lambda} with
// lambda in an adaptively enlarged translation box (hard cap: coordinates
// within [-8, 8]) and evaluating theta_lambda -> x(lambda).
//
// If specialize_v is given, v is substituted before solving, so all matrix
// entries are rational constants.
InducedModule induce(const CharacterPoint& x, int t, const AlgebraId& id,
                     std::optional<BigRat> specialize_v = std::nullopt);

// Absolute irreducibility over the given specialization of v: the
// generator matrices must span all of M_d after specialization (Burnside).
// For t = 2 a direct common-eigenvector check is used instead.
bool is_irreducible(const InducedModule& M, const BigRat& v_value);

// The span-dimension route on its own (used as the t = 2 cross-check).
bool is_irreducible_burnside(const InducedModule& M, const BigRat& v_value);

struct OneDimConstituent {
  bool is_sub = true;           // false: one-dimensional quotient
  BigRat sigma_value;           // the scalar through which every [s_i] acts
  std::vector<BigRat> x_values; // X_i eigenvalues on the line
};

// All one-dimensional invariant subspaces (common eigenvectors) and
// quotients (common left-eigenvectors) after specializing v. The sigma
// value is z or -1 by the quadratic relation.
std::vector<OneDimConstituent> one_dim_constituents(const InducedModule& M,
                                                    const BigRat& v_value);

struct ReducibilityReport {
  BigRat s_star;              // 1/(2 n0)
  long n0 = 1;
  bool reducible_at_witness = false;    // ratio q0 = z
  bool irreducible_at_double = false;   // ratio q0^2
  bool irreducible_at_half = false;     // ratio q0^{1/2}
};

// Rank-one reducibility point for the t = 2 interpretation, with module
// witnesses computed at v = 2 (so z = q0 = 4).
ReducibilityReport reducibility_point(const TypeParams& P);

}  // namespace metahecke

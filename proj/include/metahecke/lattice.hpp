#pragma once

#include <cstdint>
#include <vector>

namespace metahecke {

using IntVec = std::vector<int64_t>;
using IntMat = std::vector<IntVec>;  // rows

// Row-style Hermite normal form of the lattice spanned by the given rows:
// echelon rows with positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped, so the result is a canonical basis.
IntMat hnf(IntMat rows);

// Full-rank t x t HNF basis; throws if the span has rank < t.
IntMat hnf_full_rank(IntMat rows, int t);

// |det| of a full-rank HNF basis (product of pivots).
int64_t hnf_determinant(const IntMat& basis);

// Membership of v in the lattice spanned by an HNF basis.
bool hnf_contains(const IntMat& basis, IntVec v);

// Sublattice test: every row of `sub` lies in the span of `sup`.
bool hnf_is_sublattice(const IntMat& sub, const IntMat& sup);

// Kernel lattice {s in Z^t : s * B == 0 (mod n) in every column}, returned
// as a full-rank HNF basis (it always contains n Z^t).
IntMat kernel_mod(const IntMat& B, int64_t n);

}  // namespace metahecke

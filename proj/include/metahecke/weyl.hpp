#pragma once

#include <cstdint>
#include <vector>

namespace metahecke {

// Permutation of {0..t-1}, stored by images: sigma(i) = images[i].
// Composition is (sigma * tau)(i) = sigma(tau(i)).
struct Perm {
  std::vector<int> images;

  static Perm identity(int t);
  static Perm transposition(int t, int i);  // swaps i and i+1 (0-based)
  // t-cycle used in the translation presentation of Pi; chosen so that
  // Pi s_i Pi^{-1} = s_{i-1} holds in the group below.
  static Perm pi_cycle(int t);

  int t() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  bool operator==(const Perm&) const = default;
};

// Element of the twisted affine Weyl group W~(t, s) = Z^t_{1/s} x| S_t,
// stored as translation * permutation. The translation lambda = num / s
// lives in Z^t + Z*(1/s,...,1/s), so all entries of num share a residue
// mod s.
struct TwistedAffineWeylElem {
  long s = 1;
  std::vector<int64_t> num;  // s * lambda
  Perm perm;

  static TwistedAffineWeylElem identity(int t, long s);
  // translation by an integral vector
  static TwistedAffineWeylElem translation(std::vector<int64_t> lambda, long s);
  static TwistedAffineWeylElem from_parts(long s, std::vector<int64_t> num,
                                          Perm perm);
  static TwistedAffineWeylElem simple_reflection(int t, long s, int i);  // i in 1..t-1
  // s_0 = Pi s_1 Pi^{-1}, the affine reflection
  static TwistedAffineWeylElem affine_reflection(int t, long s);
  static TwistedAffineWeylElem pi(int t, long s);
  static TwistedAffineWeylElem zeta(int t, long s);  // (1/s,...,1/s)

  int t() const { return perm.t(); }
  TwistedAffineWeylElem operator*(const TwistedAffineWeylElem& o) const;
  TwistedAffineWeylElem inverse() const;
  TwistedAffineWeylElem pow(long e) const;
  bool is_identity() const;
  bool operator==(const TwistedAffineWeylElem&) const = default;
  bool operator<(const TwistedAffineWeylElem& o) const;  // for map keys

  // simple reflection by index in {0,...,t-1}; index 0 is s_0
  TwistedAffineWeylElem right_mul_simple(int i) const;
};

// Length with respect to the generators {s_0,...,s_{t-1}}: elements of
// length zero are exactly the Pi^a zeta^b. Computed by the closed
// root-counting formula on the integral part, validated against BFS in
// the tests.
long length(const TwistedAffineWeylElem& w);

struct ReducedWord {
  long a = 0;         // Pi-power
  long b = 0;         // zeta-power, in [0, s)
  std::vector<int> word;  // indices in {0..t-1}
};

// w = Pi^a zeta^b * prod s_i with |word| = length(w); greedy descent with
// smallest-index tie-break.
ReducedWord reduced_word(const TwistedAffineWeylElem& w);

// Reconstruct the element from its decomposition.
TwistedAffineWeylElem from_reduced_word(int t, long s, const ReducedWord& rw);

}  // namespace metahecke

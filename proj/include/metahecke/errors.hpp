#pragma once

#include <stdexcept>
#include <string>

namespace metahecke {

// Domain errors carry a stable machine-readable code next to the message so
// the CLI can emit structured error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error err_not_prime(long p) {
  return Error("NotPrime", "not a prime: " + std::to_string(p));
}
inline Error err_field_too_large(long q, long bound) {
  return Error("FieldTooLarge", "field cardinality " + std::to_string(q) +
                                    " exceeds bound " + std::to_string(bound));
}
inline Error err_field_mismatch() {
  return Error("FieldMismatch", "elements belong to different fields");
}
inline Error err_zero_inverse() {
  return Error("ZeroInverse", "inverse of zero field element");
}
inline Error err_zero_argument(const std::string& op) {
  return Error("ZeroArgument", op + ": zero argument");
}
inline Error err_modulus_mismatch(long n, long q) {
  return Error("ModulusMismatch", "n = " + std::to_string(n) +
                                      " does not divide q-1 = " +
                                      std::to_string(q - 1));
}
inline Error err_degree_mismatch(const std::string& msg) {
  return Error("DegreeMismatch", msg);
}
inline Error err_block_mismatch(const std::string& msg) {
  return Error("BlockMismatch", msg);
}
inline Error err_non_unit_determinant() {
  return Error("NonUnitDeterminant", "determinant is not a unit");
}
inline Error err_rank_mismatch() {
  return Error("RankMismatch", "elements have different rank t");
}
inline Error err_twist_mismatch() {
  return Error("TwistMismatch", "elements have different twist denominator s");
}
inline Error err_flavor_mismatch(const std::string& msg) {
  return Error("FlavorMismatch", msg);
}
inline Error err_algebra_mismatch() {
  return Error("AlgebraMismatch", "elements belong to different algebras");
}
inline Error err_bound_exceeded(const std::string& msg) {
  return Error("BoundExceeded", msg);
}
inline Error err_divisibility_violation(const std::string& msg) {
  return Error("DivisibilityViolation", msg);
}
inline Error err_not_regular(const std::string& msg) {
  return Error("NotRegular", msg);
}
inline Error err_not_sublattice(const std::string& msg) {
  return Error("NotSublattice", msg);
}
inline Error err_box_overflow(const std::string& msg) {
  return Error("BoxOverflow", msg);
}
inline Error err_singular_solve(const std::string& msg) {
  return Error("SingularSolve", msg);
}
inline Error err_specialization_pole(const std::string& msg) {
  return Error("SpecializationPole", msg);
}

}  // namespace metahecke

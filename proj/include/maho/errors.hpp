// Typed error hierarchy for the many-help-one rate-distortion library.
//
// All library errors derive from maho::Error (itself a std::runtime_error) so
// callers can distinguish domain failures from programming errors. The CLI
// maps ValidationError/InfeasibleError to its "input error" exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace maho {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad variance, dimension mismatch, bad JSON field).
// Carries the path of the offending field, e.g. "sigma_z_sq[2]".
class ValidationError : public Error {
 public:
  ValidationError(std::string field_path, const std::string& message)
      : Error(field_path + ": " + message), field_path_(std::move(field_path)) {}

  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// The g-recursion hit a pole: 1 - sigma_Z(l)^2 * [eta_{l-1}]^+ <= 0 at the
// reported level. This only happens outside the feasible rate region, where
// the recursion legitimately diverges; we surface it instead of returning
// infinities.
class GPoleError : public Error {
 public:
  explicit GPoleError(int level)
      : Error("g-pole: recursion diverges at level " + std::to_string(level)),
        level_(level) {}

  int level() const { return level_; }

 private:
  int level_;
};

// A requested computation has no solution in its domain: distortion/rate
// budget outside the reachable set, an alpha vector violating its feasibility
// set, or a parametric target outside the range of the recursion.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A covariance block needed for a log-determinant is singular (or not
// positive definite within tolerance). Carries a description of the block.
class SingularBlockError : public Error {
 public:
  explicit SingularBlockError(const std::string& block)
      : Error("singular covariance block: " + block) {}
};

// An internal consistency guarantee failed (e.g. a vertex component came out
// negative beyond numerical noise, which monotonicity forbids). Indicates a
// bug or severely ill-conditioned input, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace maho

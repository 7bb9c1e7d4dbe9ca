// Tree-structured (TS) Gaussian source model.
//
// The model: a primary source X_0 feeds a chain Y_l = Y_{l-1} + Z_l
// (Y_0 = X_0, 1 <= l <= L) observed through leaves X_l = Y_l + N_l for
// l < L and X_L = Y_L (so the L-th leaf noise is identified with Z_L).
// L helper encoders observe X_1..X_L and assist one decoder in
// reconstructing X_0 under a mean-squared distortion budget.
//
// A SourceSpec stores the variances sigma_X0^2, sigma_Zl^2, sigma_Nl^2 and
// the derived ratios
//   eps_l = sigma_Zl^2 / sigma_Nl^2        (eps_L = 1 by construction),
//   tau_l = sigma_Nl^2 / sigma_N(l-1)^2    (l = 2..L).
// Setting every sigma_Zl^2 = 0 for l < L recovers the conditionally
// independent (CI) case; additionally equalizing all sigma_Nl^2 gives the
// CEO case. All rates throughout the library are in nats.
#pragma once

#include <string>
#include <vector>

#include "maho/errors.hpp"

namespace maho {

struct SourceSpec {
  int big_l = 0;                    // number of helpers L (>= 2)
  double sigma_x0_sq = 0.0;         // Var(X_0) > 0
  std::vector<double> sigma_z_sq;   // sigma_Z1^2..sigma_ZL^2; index L strictly positive
  std::vector<double> sigma_n_sq;   // sigma_N1^2..sigma_NL^2; all positive
  std::vector<double> eps;          // derived: eps_l, l = 1..L
  std::vector<double> tau;          // derived: tau_l, l = 2..L (stored at l-2)

  // Accessors in the 1-based math indexing used by the recursions.
  double sz(int l) const { return sigma_z_sq[static_cast<size_t>(l) - 1]; }
  double sn(int l) const { return sigma_n_sq[static_cast<size_t>(l) - 1]; }
  double eps_at(int l) const { return eps[static_cast<size_t>(l) - 1]; }
  double tau_at(int l) const { return tau[static_cast<size_t>(l) - 2]; }  // l in 2..L
};

// Auxiliary rate vector (r_0, r_1..r_L), all nonnegative, in nats. r_0 is the
// rate granted to the primary encoder; r_i parameterizes helper i's
// quantizer.
struct RateAllocation {
  double r0 = 0.0;
  std::vector<double> r;  // r_1..r_L at indices 0..L-1

  double at(int i) const { return r[static_cast<size_t>(i) - 1]; }  // i in 1..L
};

// Distortion budget D with 0 < D <= sigma_X0^2 (larger budgets are met by
// sending nothing, so they are rejected as input errors).
struct DistortionBudget {
  double d = 0.0;
};

// Checks all invariants and fills in the derived eps/tau vectors. Throws
// ValidationError naming the offending field otherwise.
SourceSpec validate(SourceSpec spec);

// CEO special case: every helper-chain noise vanishes (sigma_Zl^2 = 0 for
// l < L) and all observation noises share one variance sigma_sq, which also
// becomes sigma_ZL^2.
SourceSpec ceo_spec(int l_count, double sigma_sq, double sigma_x0_sq);

// Conditionally independent special case: sigma_Zl^2 = 0 for l < L with the
// given observation-noise variances; sigma_ZL^2 = sigma_n_sq_vec[L].
SourceSpec ci_spec(int l_count, const std::vector<double>& sigma_n_sq_vec,
                   double sigma_x0_sq);

// Parses {"L":..,"sigma_x0_sq":..,"sigma_z_sq":[..],"sigma_n_sq":[..]} and
// validates. Errors carry the JSON field path.
SourceSpec spec_from_json(const std::string& text);

// Serializes a validated spec back to the same JSON shape (derived fields
// omitted). Stable field order for deterministic reports.
std::string spec_to_json(const SourceSpec& spec);

// Checks r0 >= 0, r_i >= 0 and |r| == L. Throws ValidationError.
RateAllocation validate_alloc(const SourceSpec& spec, RateAllocation alloc);

// Checks 0 < d <= sigma_X0^2. Throws ValidationError.
DistortionBudget validate_budget(const SourceSpec& spec, double d);

}  // namespace maho

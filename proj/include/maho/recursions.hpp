// Scalar recursions underlying the rate-distortion bounds.
//
// Two families of sequences drive everything:
//
//   f_l(r_l..r_L): achievable "information mass" about the chain node Y_l
//   accumulated by helpers l..L. Defined top-down from
//     f_{L-1} = (1-e^{-2 r_{L-1}})/sigma_N(L-1)^2 + (1-e^{-2 r_L})/sigma_NL^2
//   through f_l = f_{l+1}/(1 + sigma_Z(l+1)^2 f_{l+1}) + (1-e^{-2 r_l})/sigma_Nl^2
//   down to f_0 = f_1/(1 + sigma_Z1^2 f_1). Monotone nondecreasing in every rate.
//
//   g_l(D, r_0, r_1..r_{l-1}): the information mass *required* at level l to
//   meet distortion D given primary rate r_0, peeled level by level with
//   positive-part clipping. g_0 = e^{-2 r_0}/D - 1/sigma_X0^2 may be negative
//   (the budget is already met); the sequence itself is reported clipped at 0.
//
// The feasible set B_L(D) collects allocations with f_0(r^L) >= g_0(D, r_0);
// its boundary is the equality case. Aggregates:
//   F(r^L)          = prod_{l=1}^{L-1} (1 + sigma_Zl^2 f_l),
//   G(D,r_0,r^{L-2}) = prod_{l=1}^{L-1} (1 + sigma_Zl^2 g_l),
// where G also admits an equivalent "eta-path" evaluation used as a mutual
// numerical check. f*_l is the everything-at-infinite-rate limit of f_l.
#pragma once

#include <cstdint>
#include <vector>

#include "maho/source_model.hpp"

namespace maho {

// Default tolerance on the slack f_0 - g_0 separating boundary from
// interior/outside. All quantities are O(1)-scaled rationals of variances.
inline constexpr double kTolBoundary = 1e-9;

struct FGReport {
  std::vector<double> f;  // [f_0..f_{L-1}]
  std::vector<double> g;  // [g_0..g_{L-1}], clipped at 0
  double big_f = 1.0;     // F(r^L) >= 1
  double big_g = 1.0;     // G(D, r_0, r^{L-2}) >= 1
};

enum class RegionSide { outside, interior, boundary };

struct RegionClass {
  RegionSide side = RegionSide::outside;
  double slack = 0.0;  // f_0(r^L) - g_0(D, r_0), with g_0 unclipped
};

// [f_0..f_{L-1}] for the given helper rates (r_1..r_L at indices 0..L-1).
std::vector<double> f_seq(const SourceSpec& spec, const std::vector<double>& r);

// [g_0..g_{L-1}], clipped nonnegative. r_prefix holds r_1..r_{L-2} (empty for
// L = 2). Throws GPoleError when a level's denominator closes.
std::vector<double> g_seq(const SourceSpec& spec, double d, double r0,
                          const std::vector<double>& r_prefix);

// Unclipped g_0 = e^{-2 r0}/D - 1/sigma_X0^2; negative values signal
// deep-interior allocations and feed the slack computation.
double g0_raw(const SourceSpec& spec, double d, double r0);

// [f*_1..f*_{L-1}] (index l-1 holds f*_l): the componentwise supremum of f_l
// over all rate vectors, reached in the limit of all rates to infinity.
std::vector<double> f_star(const SourceSpec& spec);

// Supremum of f_0 over all rate vectors: f*_1/(1 + sigma_Z1^2 f*_1). The
// supremum is not attained; equality targets above it are infeasible.
double f0_limit(const SourceSpec& spec);

double big_f(const SourceSpec& spec, const std::vector<double>& r);

// F with the rates outside s zeroed before evaluation. Subsets of {1..L} are
// bitmasks with helper i at bit i-1; s = 0 gives the empty restriction F = 1.
double big_f_restricted(const SourceSpec& spec, const std::vector<double>& r,
                        std::uint32_t s);

// f_0 with the rates outside s zeroed before evaluation.
double f0_restricted(const SourceSpec& spec, const std::vector<double>& r,
                     std::uint32_t s);

double big_g(const SourceSpec& spec, double d, double r0,
             const std::vector<double>& r_prefix);

// Same value through the eta-sequence identity
//   log G = sum_k log 1/(1 - sigma_Z(k+1)^2 [eta_k]^+),
// computed along a different floating-point path; the pair is mutually
// checking and must agree to 1e-10.
double big_g_via_eta(const SourceSpec& spec, double d, double r0,
                     const std::vector<double>& r_prefix);

// Classifies an allocation against B_L(D) by the sign of the slack.
RegionClass classify(const SourceSpec& spec, double d, const RateAllocation& alloc,
                     double tol = kTolBoundary);

// The unique r_0 >= 0 placing (r_0, r^L) on the boundary of B_L(D):
// max(0, -1/2 log[D (f_0(r^L) + 1/sigma_X0^2)]). When the clamp binds,
// (0, r^L) is already interior.
double boundary_r0(const SourceSpec& spec, double d, const std::vector<double>& r);

// Convenience bundle of all four quantities for one allocation.
FGReport fg_report(const SourceSpec& spec, double d, const RateAllocation& alloc);

// Copy of r with the entries outside the bitmask s zeroed.
std::vector<double> restrict_rates(const std::vector<double>& r, std::uint32_t s);

}  // namespace maho

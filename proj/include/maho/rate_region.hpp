// Subset rate functions and the inner/outer rate-region machinery.
//
// For a subset S of helpers {1..L} (bitmask, helper i at bit i-1) and an
// auxiliary allocation (r_0, r^L):
//
//   J_S: outer-bound requirement on the helper rates of S, built from the
//        demand-side aggregate G and the restriction of F/f_0 to the
//        complement S^c (rates off S^c zeroed);
//   K_S: inner-bound requirement, built from the supply-side aggregates at
//        the full and restricted allocations. K_S >= 0 always, J_S <= K_S on
//        the feasible set B_L(D) with equality exactly on its boundary;
//   hat-J_S: a variant that carries the full helper-rate sum and an explicit
//        primary-rate cap, dominating J_S when the cap equals r_0.
//
// Both subset maps are co-polymatroids (zero at the empty set, monotone,
// supermodular), so each allocation induces a polytope whose L! tight
// vertices are produced by telescoping differences along a permutation.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maho/recursions.hpp"
#include "maho/source_model.hpp"

namespace maho {

// Tolerance used when checking rate certificates; vertices are tight by
// construction, so the slack only absorbs floating-point noise.
inline constexpr double kCertTol = 1e-9;

enum class RegionKind { outer, inner };

// Dense table of rho_S over all 2^L subsets, indexed by bitmask.
struct SubsetRates {
  int big_l = 0;
  std::vector<double> rho;  // size 1 << big_l

  double at(std::uint32_t s) const { return rho[s]; }
  std::uint32_t full_mask() const { return (1u << big_l) - 1u; }
};

// Candidate rate vector (R_0, R_1..R_L).
struct RegionPoint {
  double r0_rate = 0.0;
  std::vector<double> helper_rates;  // R_1..R_L at indices 0..L-1
};

// Bijection on {1..L}; order[i] is the helper placed at position i+1.
struct Permutation {
  std::vector<int> order;
};

double j_subset(const SourceSpec& spec, double d, const RateAllocation& alloc,
                std::uint32_t s);

double k_subset(const SourceSpec& spec, const std::vector<double>& r,
                std::uint32_t s);

// [ (inner clamped log term) + sum_{i=1}^{L} r_i - r0_cap ]^+ ; dominates
// j_subset(spec, d, alloc, s) whenever r0_cap == alloc.r0.
double hat_j_subset(const SourceSpec& spec, double d, const RateAllocation& alloc,
                    std::uint32_t s, double r0_cap);

// Fills every subset with J_S (outer; needs d) or K_S (inner). Guarded to
// L <= 20 (table size 2^L).
SubsetRates subset_rates(const SourceSpec& spec, std::optional<double> d,
                         const RateAllocation& alloc, RegionKind kind);

// Helper-rate part of the region vertex selected by the permutation:
// R_{pi(i)} = rho_{ {pi(i)..pi(L)} } - rho_{ {pi(i+1)..pi(L)} }. Components
// are nonnegative by monotonicity; values below -1e-12 raise InternalError,
// smaller negative noise is clamped to 0. The components sum to rho_Lambda.
std::vector<double> vertex(const SubsetRates& rates, const Permutation& pi);

struct CertificateResult {
  bool ok = false;
  bool r0_ok = false;
  double r0_slack = 0.0;           // candidate.r0_rate - alloc.r0
  double worst_slack = 0.0;        // min over subsets of sum_S R_i - rho_S
  std::uint32_t worst_subset = 0;  // argmin of the above
};

// Checks candidate.r0_rate >= alloc.r0 and sum_{i in S} R_i >= rho_S for
// every subset, reporting the most violated subset.
CertificateResult certificate_check(const SourceSpec& spec, std::optional<double> d,
                                    const RegionPoint& candidate,
                                    const RateAllocation& alloc, RegionKind kind);

struct MembershipConfig {
  int grid_points = 9;      // per helper axis
  double r_max = 3.0;       // nats
  int descent_steps = 200;  // coordinate line searches after the grid pass
};

struct MembershipResult {
  bool found = false;
  RateAllocation witness;       // meaningful when found
  double best_min_slack = 0.0;  // over the search, even when not found
};

// Searches for an allocation whose certificate admits the candidate: coarse
// grid over r^L with r_0 chosen on the feasibility boundary, then local
// coordinate ascent on the minimum certificate slack. A not-found result is
// inconclusive (the grid may simply have missed a witness).
MembershipResult membership_search(const SourceSpec& spec, double d,
                                   const RegionPoint& candidate, RegionKind kind,
                                   const MembershipConfig& cfg = {});

// All L! permutations of {1..L} in lexicographic order.
std::vector<Permutation> all_permutations(int big_l);

}  // namespace maho

#include "maho/recursions.hpp"

#include <algorithm>
#include <cmath>

namespace maho {

namespace {

// 1 - e^{-2r}, the saturating rate-to-mass factor.
inline double rate_factor(double r) { return -std::expm1(-2.0 * r); }

}  // namespace

std::vector<double> f_seq(const SourceSpec& spec, const std::vector<double>& r) {
  const int big_l = spec.big_l;
  std::vector<double> f(static_cast<size_t>(big_l));
  // Base level couples the last two helpers.
  f[static_cast<size_t>(big_l) - 1] =
      rate_factor(r[static_cast<size_t>(big_l) - 2]) / spec.sn(big_l - 1) +
      rate_factor(r[static_cast<size_t>(big_l) - 1]) / spec.sn(big_l);
  for (int l = big_l - 2; l >= 1; --l) {
    const double next = f[static_cast<size_t>(l) + 1];
    f[static_cast<size_t>(l)] = next / (1.0 + spec.sz(l + 1) * next) +
                                rate_factor(r[static_cast<size_t>(l) - 1]) / spec.sn(l);
  }
  f[0] = f[1] / (1.0 + spec.sz(1) * f[1]);
  return f;
}

double g0_raw(const SourceSpec& spec, double d, double r0) {
  return std::exp(-2.0 * r0) / d - 1.0 / spec.sigma_x0_sq;
}

std::vector<double> g_seq(const SourceSpec& spec, double d, double r0,
                          const std::vector<double>& r_prefix) {
  const int big_l = spec.big_l;
  std::vector<double> g(static_cast<size_t>(big_l));
  const double g0 = g0_raw(spec, d, r0);
  g[0] = std::max(g0, 0.0);
  double carry = g0;  // the pre-clip argument entering the next level
  for (int l = 1; l <= big_l - 1; ++l) {
    const double clipped = std::max(carry, 0.0);
    const double den = 1.0 - spec.sz(l) * clipped;
    if (den <= 0.0) throw GPoleError(l);
    g[static_cast<size_t>(l)] = clipped / den;
    if (l <= big_l - 2)
      carry = g[static_cast<size_t>(l)] -
              rate_factor(r_prefix[static_cast<size_t>(l) - 1]) / spec.sn(l);
  }
  return g;
}

std::vector<double> f_star(const SourceSpec& spec) {
  const int big_l = spec.big_l;
  std::vector<double> fs(static_cast<size_t>(big_l) - 1);
  fs[static_cast<size_t>(big_l) - 2] = 1.0 / spec.sn(big_l - 1) + 1.0 / spec.sn(big_l);
  for (int l = big_l - 2; l >= 1; --l) {
    const double next = fs[static_cast<size_t>(l)];  // f*_{l+1}
    fs[static_cast<size_t>(l) - 1] =
        next / (1.0 + spec.sz(l + 1) * next) + 1.0 / spec.sn(l);
  }
  return fs;
}

double f0_limit(const SourceSpec& spec) {
  const double f1 = f_star(spec)[0];
  return f1 / (1.0 + spec.sz(1) * f1);
}

double big_f(const SourceSpec& spec, const std::vector<double>& r) {
  const std::vector<double> f = f_seq(spec, r);
  double out = 1.0;
  for (int l = 1; l <= spec.big_l - 1; ++l)
    out *= 1.0 + spec.sz(l) * f[static_cast<size_t>(l)];
  return out;
}

std::vector<double> restrict_rates(const std::vector<double>& r, std::uint32_t s) {
  std::vector<double> out(r.size(), 0.0);
  for (size_t i = 0; i < r.size(); ++i)
    if (s & (1u << i)) out[i] = r[i];
  return out;
}

double big_f_restricted(const SourceSpec& spec, const std::vector<double>& r,
                        std::uint32_t s) {
  return big_f(spec, restrict_rates(r, s));
}

double f0_restricted(const SourceSpec& spec, const std::vector<double>& r,
                     std::uint32_t s) {
  return f_seq(spec, restrict_rates(r, s))[0];
}

double big_g(const SourceSpec& spec, double d, double r0,
             const std::vector<double>& r_prefix) {
  const std::vector<double> g = g_seq(spec, d, r0, r_prefix);
  double out = 1.0;
  for (int l = 1; l <= spec.big_l - 1; ++l)
    out *= 1.0 + spec.sz(l) * g[static_cast<size_t>(l)];
  return out;
}

double big_g_via_eta(const SourceSpec& spec, double d, double r0,
                     const std::vector<double>& r_prefix) {
  // eta_0 = g_0 raw; eta_l peels one level's rate mass off g_l. Each level
  // contributes log 1/(1 - sigma_Z(l)^2 [eta_{l-1}]^+) to log G.
  double eta = g0_raw(spec, d, r0);
  double log_g = 0.0;
  for (int l = 1; l <= spec.big_l - 1; ++l) {
    const double clipped = std::max(eta, 0.0);
    const double shrink = spec.sz(l) * clipped;
    if (shrink >= 1.0) throw GPoleError(l);
    log_g -= std::log1p(-shrink);
    if (l <= spec.big_l - 2) {
      const double g_l = clipped / (1.0 - shrink);
      eta = g_l - rate_factor(r_prefix[static_cast<size_t>(l) - 1]) / spec.sn(l);
    }
  }
  return std::exp(log_g);
}

RegionClass classify(const SourceSpec& spec, double d, const RateAllocation& alloc,
                     double tol) {
  RegionClass out;
  out.slack = f_seq(spec, alloc.r)[0] - g0_raw(spec, d, alloc.r0);
  if (out.slack > tol)
    out.side = RegionSide::interior;
  else if (out.slack < -tol)
    out.side = RegionSide::outside;
  else
    out.side = RegionSide::boundary;
  return out;
}

double boundary_r0(const SourceSpec& spec, double d, const std::vector<double>& r) {
  const double f0 = f_seq(spec, r)[0];
  const double arg = d * (f0 + 1.0 / spec.sigma_x0_sq);
  return std::max(0.0, -0.5 * std::log(arg));
}

FGReport fg_report(const SourceSpec& spec, double d, const RateAllocation& alloc) {
  FGReport report;
  report.f = f_seq(spec, alloc.r);
  std::vector<double> prefix(alloc.r.begin(),
                             alloc.r.begin() + std::max(spec.big_l - 2, 0));
  report.g = g_seq(spec, d, alloc.r0, prefix);
  report.big_f = big_f(spec, alloc.r);
  report.big_g = big_g(spec, d, alloc.r0, prefix);
  return report;
}

}  // namespace maho

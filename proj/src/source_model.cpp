#include "maho/source_model.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace maho {

namespace {

void require_finite(double v, const std::string& path) {
  if (!std::isfinite(v)) throw ValidationError(path, "must be finite");
}

}  // namespace

SourceSpec validate(SourceSpec spec) {
  if (spec.big_l < 2)
    throw ValidationError("L", "need at least two helpers (the recursion base "
                               "couples levels L-1 and L)");
  const size_t big_l = static_cast<size_t>(spec.big_l);
  if (spec.sigma_z_sq.size() != big_l)
    throw ValidationError("sigma_z_sq", "expected " + std::to_string(spec.big_l) +
                                            " entries, got " +
                                            std::to_string(spec.sigma_z_sq.size()));
  if (spec.sigma_n_sq.size() != big_l)
    throw ValidationError("sigma_n_sq", "expected " + std::to_string(spec.big_l) +
                                            " entries, got " +
                                            std::to_string(spec.sigma_n_sq.size()));
  require_finite(spec.sigma_x0_sq, "sigma_x0_sq");
  if (spec.sigma_x0_sq <= 0.0)
    throw ValidationError("sigma_x0_sq", "must be positive");

  for (size_t i = 0; i < big_l; ++i) {
    const std::string zp = "sigma_z_sq[" + std::to_string(i) + "]";
    const std::string np = "sigma_n_sq[" + std::to_string(i) + "]";
    require_finite(spec.sigma_z_sq[i], zp);
    require_finite(spec.sigma_n_sq[i], np);
    if (spec.sigma_z_sq[i] < 0.0)
      throw ValidationError(zp, "must be nonnegative");
    if (spec.sigma_n_sq[i] <= 0.0)
      throw ValidationError(np, "must be positive");
  }
  // The terminal leaf has no separate observation noise: X_L = Y_L, so its
  // nominal noise variance must equal sigma_ZL^2 exactly.
  if (spec.sigma_z_sq[big_l - 1] != spec.sigma_n_sq[big_l - 1])
    throw ValidationError("sigma_n_sq[" + std::to_string(big_l - 1) + "]",
                          "must equal sigma_z_sq[" + std::to_string(big_l - 1) +
                              "] exactly (the L-th leaf observes Y_L directly)");
  if (spec.sigma_z_sq[big_l - 1] <= 0.0)
    throw ValidationError("sigma_z_sq[" + std::to_string(big_l - 1) + "]",
                          "must be strictly positive");

  spec.eps.resize(big_l);
  for (size_t i = 0; i < big_l; ++i)
    spec.eps[i] = spec.sigma_z_sq[i] / spec.sigma_n_sq[i];
  spec.tau.resize(big_l - 1);
  for (size_t i = 1; i < big_l; ++i)
    spec.tau[i - 1] = spec.sigma_n_sq[i] / spec.sigma_n_sq[i - 1];
  return spec;
}

SourceSpec ceo_spec(int l_count, double sigma_sq, double sigma_x0_sq) {
  if (sigma_sq <= 0.0) throw ValidationError("sigma_sq", "must be positive");
  SourceSpec spec;
  spec.big_l = l_count;
  spec.sigma_x0_sq = sigma_x0_sq;
  spec.sigma_n_sq.assign(static_cast<size_t>(std::max(l_count, 0)), sigma_sq);
  spec.sigma_z_sq.assign(static_cast<size_t>(std::max(l_count, 0)), 0.0);
  if (l_count >= 1) spec.sigma_z_sq.back() = sigma_sq;
  return validate(std::move(spec));
}

SourceSpec ci_spec(int l_count, const std::vector<double>& sigma_n_sq_vec,
                   double sigma_x0_sq) {
  SourceSpec spec;
  spec.big_l = l_count;
  spec.sigma_x0_sq = sigma_x0_sq;
  spec.sigma_n_sq = sigma_n_sq_vec;
  spec.sigma_z_sq.assign(sigma_n_sq_vec.size(), 0.0);
  if (!sigma_n_sq_vec.empty()) spec.sigma_z_sq.back() = sigma_n_sq_vec.back();
  return validate(std::move(spec));
}

SourceSpec spec_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("$", "top level must be an object");

  auto get_number = [&](const char* key) -> double {
    if (!doc.contains(key)) throw ValidationError(key, "missing field");
    if (!doc[key].is_number()) throw ValidationError(key, "must be a number");
    return doc[key].get<double>();
  };
  auto get_array = [&](const char* key) -> std::vector<double> {
    if (!doc.contains(key)) throw ValidationError(key, "missing field");
    if (!doc[key].is_array()) throw ValidationError(key, "must be an array");
    std::vector<double> out;
    size_t i = 0;
    for (const auto& item : doc[key]) {
      if (!item.is_number())
        throw ValidationError(std::string(key) + "[" + std::to_string(i) + "]",
                              "must be a number");
      out.push_back(item.get<double>());
      ++i;
    }
    return out;
  };

  SourceSpec spec;
  const double l_value = get_number("L");
  if (l_value != std::floor(l_value))
    throw ValidationError("L", "must be an integer");
  spec.big_l = static_cast<int>(l_value);
  spec.sigma_x0_sq = get_number("sigma_x0_sq");
  spec.sigma_z_sq = get_array("sigma_z_sq");
  spec.sigma_n_sq = get_array("sigma_n_sq");
  return validate(std::move(spec));
}

std::string spec_to_json(const SourceSpec& spec) {
  nlohmann::ordered_json doc;
  doc["L"] = spec.big_l;
  doc["sigma_x0_sq"] = spec.sigma_x0_sq;
  doc["sigma_z_sq"] = spec.sigma_z_sq;
  doc["sigma_n_sq"] = spec.sigma_n_sq;
  return doc.dump();
}

RateAllocation validate_alloc(const SourceSpec& spec, RateAllocation alloc) {
  if (alloc.r.size() != static_cast<size_t>(spec.big_l))
    throw ValidationError("r", "expected " + std::to_string(spec.big_l) +
                                   " helper rates, got " +
                                   std::to_string(alloc.r.size()));
  require_finite(alloc.r0, "r0");
  if (alloc.r0 < 0.0) throw ValidationError("r0", "must be nonnegative");
  for (size_t i = 0; i < alloc.r.size(); ++i) {
    const std::string path = "r[" + std::to_string(i) + "]";
    require_finite(alloc.r[i], path);
    if (alloc.r[i] < 0.0) throw ValidationError(path, "must be nonnegative");
  }
  return alloc;
}

DistortionBudget validate_budget(const SourceSpec& spec, double d) {
  require_finite(d, "d");
  if (d <= 0.0) throw ValidationError("d", "must be positive");
  if (d > spec.sigma_x0_sq)
    throw ValidationError("d", "must not exceed sigma_x0_sq (larger budgets "
                               "are met with zero rate)");
  return DistortionBudget{d};
}

}  // namespace maho

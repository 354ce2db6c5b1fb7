#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dcad/features.hpp"

namespace dcad {

/// Streaming per-feature moments (Welford update, Chan merge).
struct MomentAccumulator {
  std::uint64_t count = 0;
  std::array<double, kFeatureCount> mean{};
  std::array<double, kFeatureCount> m2{};
};

inline void accumulate(MomentAccumulator& acc, const std::array<double, kFeatureCount>& x,
                       std::string_view doc_id = {}) {
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    if (!std::isfinite(x[j])) {
      std::string msg = "non-finite value for feature " + std::to_string(j);
      if (!doc_id.empty()) msg += " in document " + std::string(doc_id);
      throw std::invalid_argument(msg);
    }
  }
  acc.count += 1;
  const double n = static_cast<double>(acc.count);
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    const double delta = x[j] - acc.mean[j];
    acc.mean[j] += delta / n;
    acc.m2[j] += delta * (x[j] - acc.mean[j]);
  }
}

inline void accumulate(MomentAccumulator& acc, const FeatureVector& x,
                       std::string_view doc_id = {}) {
  accumulate(acc, x.as_array(), doc_id);
}

inline MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  MomentAccumulator out;
  out.count = a.count + b.count;
  const double na = static_cast<double>(a.count);
  const double nb = static_cast<double>(b.count);
  const double n = na + nb;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    const double delta = b.mean[j] - a.mean[j];
    out.mean[j] = a.mean[j] + delta * nb / n;
    out.m2[j] = a.m2[j] + b.m2[j] + delta * delta * na * nb / n;
  }
  return out;
}

struct StandardizationStats {
  std::uint64_t count = 0;
  std::array<double, kFeatureCount> mu{};
  std::array<double, kFeatureCount> sigma{};
};

/// Population standard deviation (divisor N).
inline StandardizationStats finalize(const MomentAccumulator& acc) {
  if (acc.count == 0) throw std::invalid_argument("cannot finalize empty accumulator");
  StandardizationStats stats;
  stats.count = acc.count;
  stats.mu = acc.mean;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    double var = acc.m2[j] / static_cast<double>(acc.count);
    if (var < 0.0) var = 0.0;
    stats.sigma[j] = std::sqrt(var);
  }
  return stats;
}

/// x̃_j = (x_j − μ_j)/σ_j; constant features map to 0.
inline std::array<double, kFeatureCount> standardize(
    const std::array<double, kFeatureCount>& x, const StandardizationStats& stats) {
  std::array<double, kFeatureCount> out;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    out[j] = stats.sigma[j] > 0.0 ? (x[j] - stats.mu[j]) / stats.sigma[j] : 0.0;
  }
  return out;
}

inline std::array<double, kFeatureCount> standardize(const FeatureVector& x,
                                                     const StandardizationStats& stats) {
  return standardize(x.as_array(), stats);
}

inline void save_stats(const StandardizationStats& stats, const std::string& path) {
  nlohmann::ordered_json j;
  j["count"] = stats.count;
  j["mu"] = stats.mu;
  j["sigma"] = stats.sigma;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

inline StandardizationStats load_stats(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  StandardizationStats stats;
  stats.count = j.at("count").get<std::uint64_t>();
  auto mu = j.at("mu").get<std::vector<double>>();
  auto sigma = j.at("sigma").get<std::vector<double>>();
  if (mu.size() != kFeatureCount || sigma.size() != kFeatureCount) {
    throw std::runtime_error(path + ": expected " + std::to_string(kFeatureCount) +
                             " entries in mu and sigma");
  }
  std::copy(mu.begin(), mu.end(), stats.mu.begin());
  std::copy(sigma.begin(), sigma.end(), stats.sigma.begin());
  return stats;
}

}  // namespace dcad

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dcad/features.hpp"
#include "dcad/parallel.hpp"
#include "dcad/rng.hpp"

namespace dcad {

/// Row-major dense matrix of standardized feature vectors.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }
  std::span<const double> row_span(std::size_t r) const { return {row(r), cols}; }
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact harmonic numbers below this; ln + Euler-Mascheroni beyond.
constexpr std::size_t kHarmonicExactCutoff = 200000;

namespace detail {

inline double harmonic(std::size_t i) {
  if (i == 0) return 0.0;
  if (i <= kHarmonicExactCutoff) {
    double h = 0.0;
    for (std::size_t k = 1; k <= i; ++k) h += 1.0 / static_cast<double>(k);
    return h;
  }
  constexpr double kEulerMascheroni = 0.57721566490153286060651209008240243;
  const double x = static_cast<double>(i);
  return std::log(x) + kEulerMascheroni + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
}

inline double sq_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(sq_distance(a, b));
}

}  // namespace detail

/// Average path length of an unsuccessful BST search over n points (Eq. 5):
/// 2H(n−1) − 2(n−1)/n, with c(0) = c(1) = 0.
inline double c_factor(std::size_t n) {
  if (n <= 1) return 0.0;
  if (n == 2) return 1.0;
  const double nd = static_cast<double>(n);
  return 2.0 * detail::harmonic(n - 1) - 2.0 * (nd - 1.0) / nd;
}

struct IsolationTree {
  struct Node {
    std::int32_t feature = -1;  // -1 marks an external node
    double split = 0.0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t size = 0;
    double c_corr = 0.0;
  };
  std::vector<Node> nodes;
  int height_limit = 0;
};

enum class Algorithm { kIForest, kLof, kKMeans };

struct DetectorModel {
  Algorithm algorithm = Algorithm::kIForest;
  std::uint64_t seed = 0;
  double tau = std::numeric_limits<double>::quiet_NaN();
  // Isolation forest
  std::vector<IsolationTree> trees;
  std::size_t psi_effective = 0;
  double c_psi = 0.0;
  // LOF
  Matrix lof_refs;
  int lof_k = 0;
  std::vector<double> lof_kdist;
  std::vector<double> lof_lrd;
  // K-means
  Matrix centroids;
};

struct AnomalyVerdict {
  double score = 0.0;
  int label = 1;  // +1 keep, -1 remove
};

namespace detail {

struct TreeBuilder {
  const Matrix& X;
  std::vector<std::uint32_t>& idx;
  IsolationTree& tree;
  Rng& rng;

  // Column bounds over idx[begin, end); a column is splittable only when a
  // representable value strictly between min and max exists.
  bool splittable(std::size_t col, std::size_t begin, std::size_t end, double& lo,
                  double& hi) const {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = X.at(idx[i], col);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return lo < hi && std::nextafter(lo, hi) < hi;
  }

  std::uint32_t build(std::size_t begin, std::size_t end, int depth) {
    const std::uint32_t count = static_cast<std::uint32_t>(end - begin);
    if (depth >= tree.height_limit || count <= 1) {
      return external(count);
    }
    bool any = false;
    double lo = 0.0, hi = 0.0;
    for (std::size_t c = 0; c < X.cols && !any; ++c) {
      any = splittable(c, begin, end, lo, hi);
    }
    if (!any) return external(count);

    std::size_t col;
    do {
      col = rng.next_index(X.cols);
    } while (!splittable(col, begin, end, lo, hi));

    double split = 0.0;
    bool interior = false;
    for (int attempt = 0; attempt < 64 && !interior; ++attempt) {
      split = lo + rng.next_double() * (hi - lo);
      interior = split > lo && split < hi;
    }
    if (!interior) split = lo + (hi - lo) / 2.0;

    auto* base = idx.data();
    auto mid_it = std::partition(base + begin, base + end, [&](std::uint32_t r) {
      return X.at(r, col) < split;
    });
    const std::size_t mid = static_cast<std::size_t>(mid_it - base);

    const std::uint32_t self = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[self].feature = static_cast<std::int32_t>(col);
    tree.nodes[self].split = split;
    tree.nodes[self].size = count;
    const std::uint32_t left = build(begin, mid, depth + 1);
    const std::uint32_t right = build(mid, end, depth + 1);
    tree.nodes[self].left = left;
    tree.nodes[self].right = right;
    return self;
  }

  std::uint32_t external(std::uint32_t count) {
    const std::uint32_t self = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[self].size = count;
    tree.nodes[self].c_corr = c_factor(count);
    return self;
  }
};

}  // namespace detail

inline DetectorModel fit_iforest(const Matrix& X, int trees, int psi, std::uint64_t seed,
                                 unsigned threads = 1) {
  if (X.rows < 2) throw std::invalid_argument("isolation forest needs at least 2 points");
  if (trees < 1) throw std::invalid_argument("tree count must be >= 1");
  if (psi < 2) throw std::invalid_argument("subsample size must be >= 2");

  DetectorModel model;
  model.algorithm = Algorithm::kIForest;
  model.seed = seed;
  model.psi_effective = std::min<std::size_t>(psi, X.rows);
  model.c_psi = c_factor(model.psi_effective);
  model.trees.resize(trees);

  const int height_limit = static_cast<int>(
      std::ceil(std::log2(static_cast<double>(model.psi_effective))));

  std::uint64_t state = seed;
  std::vector<std::uint64_t> tree_seeds(trees);
  for (int t = 0; t < trees; ++t) tree_seeds[t] = splitmix64(state);

  parallel_for(static_cast<std::size_t>(trees), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng(tree_seeds[t]);
      auto idx = sample_without_replacement(X.rows, model.psi_effective, rng);
      IsolationTree& tree = model.trees[t];
      tree.height_limit = height_limit;
      tree.nodes.reserve(2 * idx.size());
      detail::TreeBuilder builder{X, idx, tree, rng};
      builder.build(0, idx.size(), 0);
    }
  });
  return model;
}

/// Edges from root to the reached external node plus that node's subtree
/// correction c(size).
inline double path_length(std::span<const double> x, const IsolationTree& tree) {
  const IsolationTree::Node* node = &tree.nodes[0];
  double edges = 0.0;
  while (node->feature >= 0) {
    node = &tree.nodes[x[node->feature] < node->split ? node->left : node->right];
    edges += 1.0;
  }
  return edges + node->c_corr;
}

/// Eq. 4: φ = 2^(−h/c(ψ)) with h the mean path length over all trees.
inline double anomaly_score(std::span<const double> x, const DetectorModel& model) {
  double total = 0.0;
  for (const auto& tree : model.trees) total += path_length(x, tree);
  const double h = total / static_cast<double>(model.trees.size());
  return std::pow(2.0, -h / model.c_psi);
}

namespace detail {

/// k nearest reference rows by (distance, index); at most one zero-distance
/// reference (the lowest-index one) is treated as the query itself and
/// skipped, so scoring a fitted point reproduces its fit-time neighborhood.
inline std::vector<std::pair<double, std::uint32_t>> nearest_refs(
    std::span<const double> x, const Matrix& refs, std::size_t k, bool exclude_self) {
  std::vector<std::pair<double, std::uint32_t>> dists;
  dists.reserve(refs.rows);
  bool excluded = false;
  for (std::size_t j = 0; j < refs.rows; ++j) {
    const double d = distance(x, refs.row_span(j));
    if (exclude_self && !excluded && d == 0.0) {
      excluded = true;
      continue;
    }
    dists.emplace_back(d, static_cast<std::uint32_t>(j));
  }
  if (k < dists.size()) {
    std::partial_sort(dists.begin(), dists.begin() + k, dists.end());
    dists.resize(k);
  } else {
    std::sort(dists.begin(), dists.end());
  }
  return dists;
}

constexpr double kLrdEpsilon = 1e-10;

}  // namespace detail

inline DetectorModel fit_lof(const Matrix& X, int k) {
  if (k < 1) throw std::invalid_argument("neighbor count must be >= 1");
  if (X.rows <= static_cast<std::size_t>(k)) {
    throw std::invalid_argument("LOF needs more points than neighbors");
  }
  DetectorModel model;
  model.algorithm = Algorithm::kLof;
  model.lof_refs = X;
  model.lof_k = k;
  const std::size_t n = X.rows;
  model.lof_kdist.resize(n);
  model.lof_lrd.resize(n);

  std::vector<std::vector<std::pair<double, std::uint32_t>>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto nb = detail::nearest_refs(X.row_span(i), X, k, /*exclude_self=*/true);
    model.lof_kdist[i] = nb.back().first;
    neighbors[i] = std::move(nb);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double reach_sum = 0.0;
    for (const auto& [d, o] : neighbors[i]) {
      reach_sum += std::max(model.lof_kdist[o], d);
    }
    model.lof_lrd[i] =
        1.0 / (reach_sum / static_cast<double>(k) + detail::kLrdEpsilon);
  }
  return model;
}

/// Mean neighbor density over own density; near 1 inside uniform regions.
inline double score_lof(std::span<const double> x, const DetectorModel& model) {
  const std::size_t k = model.lof_k;
  auto nb = detail::nearest_refs(x, model.lof_refs, k, /*exclude_self=*/true);
  double reach_sum = 0.0;
  double lrd_sum = 0.0;
  for (const auto& [d, o] : nb) {
    reach_sum += std::max(model.lof_kdist[o], d);
    lrd_sum += model.lof_lrd[o];
  }
  const double lrd_x = 1.0 / (reach_sum / static_cast<double>(k) + detail::kLrdEpsilon);
  return lrd_sum / static_cast<double>(k) / lrd_x;
}

inline DetectorModel fit_kmeans(const Matrix& X, int clusters, std::uint64_t seed,
                                int iters = 100) {
  if (clusters < 1) throw std::invalid_argument("cluster count must be >= 1");
  if (X.rows < static_cast<std::size_t>(clusters)) {
    throw std::invalid_argument("k-means needs at least as many points as clusters");
  }
  if (iters < 1) throw std::invalid_argument("iteration count must be >= 1");

  DetectorModel model;
  model.algorithm = Algorithm::kKMeans;
  model.seed = seed;
  const std::size_t n = X.rows;
  const std::size_t kc = static_cast<std::size_t>(clusters);
  Rng rng(seed);

  // Initial centroids: first `clusters` distinct point values in a seeded
  // shuffle order; duplicates fill in only when distinct values run out.
  Matrix centroids(kc, X.cols);
  {
    auto order = sample_without_replacement(n, n, rng);
    std::vector<std::uint32_t> chosen;
    auto row_equal = [&](std::uint32_t a, std::uint32_t b) {
      return std::equal(X.row(a), X.row(a) + X.cols, X.row(b));
    };
    for (auto cand : order) {
      if (chosen.size() == kc) break;
      bool dup = false;
      for (auto c : chosen) {
        if (row_equal(cand, c)) {
          dup = true;
          break;
        }
      }
      if (!dup) chosen.push_back(cand);
    }
    for (auto cand : order) {
      if (chosen.size() == kc) break;
      chosen.push_back(cand);
    }
    for (std::size_t c = 0; c < kc; ++c) {
      std::copy(X.row(chosen[c]), X.row(chosen[c]) + X.cols, centroids.row(c));
    }
  }

  std::vector<std::uint32_t> assign(n, 0);
  std::vector<double> assign_dist(n, 0.0);
  for (int it = 0; it < iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::uint32_t best_c = 0;
      for (std::size_t c = 0; c < kc; ++c) {
        const double d = detail::sq_distance(X.row_span(i), centroids.row_span(c));
        if (d < best) {
          best = d;
          best_c = static_cast<std::uint32_t>(c);
        }
      }
      assign[i] = best_c;
      assign_dist[i] = best;
    }

    Matrix next(kc, X.cols);
    std::vector<std::uint64_t> sizes(kc, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++sizes[assign[i]];
      const double* src = X.row(i);
      double* dst = next.row(assign[i]);
      for (std::size_t j = 0; j < X.cols; ++j) dst[j] += src[j];
    }
    std::vector<bool> reseeded(n, false);
    for (std::size_t c = 0; c < kc; ++c) {
      if (sizes[c] > 0) {
        double* dst = next.row(c);
        for (std::size_t j = 0; j < X.cols; ++j) {
          dst[j] /= static_cast<double>(sizes[c]);
        }
        continue;
      }
      // Empty cluster: restart it at the point farthest from its centroid.
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!reseeded[i] && assign_dist[i] > far_d) {
          far_d = assign_dist[i];
          far = i;
        }
      }
      reseeded[far] = true;
      std::copy(X.row(far), X.row(far) + X.cols, next.row(c));
    }

    if (next.data == centroids.data) break;
    centroids = std::move(next);
  }
  model.centroids = std::move(centroids);
  return model;
}

/// Euclidean distance to the nearest centroid.
inline double score_kmeans(std::span<const double> x, const DetectorModel& model) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < model.centroids.rows; ++c) {
    best = std::min(best, detail::sq_distance(x, model.centroids.row_span(c)));
  }
  return std::sqrt(best);
}

/// (1 − contamination) empirical quantile with linear interpolation between
/// order statistics; an override wins outright.
inline double choose_tau(std::vector<double> scores, double contamination,
                         std::optional<double> override_tau = std::nullopt) {
  if (override_tau) return *override_tau;
  if (scores.empty()) throw std::invalid_argument("cannot choose tau from no scores");
  if (!(contamination > 0.0 && contamination < 1.0)) {
    throw std::invalid_argument("contamination must lie in (0,1)");
  }
  std::sort(scores.begin(), scores.end());
  const double pos = (1.0 - contamination) * static_cast<double>(scores.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= scores.size()) return scores.back();
  return scores[lo] + frac * (scores[lo + 1] - scores[lo]);
}

/// Eq. 6: keep (+1) below τ, remove (−1) at or above it.
inline int classify(double score, double tau) { return score < tau ? 1 : -1; }

struct DetectorConfig {
  Algorithm algorithm = Algorithm::kIForest;
  double contamination = 0.0769;
  std::optional<double> tau_override;
  int trees = 100;
  int psi = 256;
  int lof_k = 20;
  int kmeans_clusters = 8;
  int kmeans_iters = 100;
  std::uint64_t seed = 42;
  std::array<bool, kFeatureCount> feature_mask = {true, true, true, true,
                                                  true, true, true, true};
};

/// Projects rows onto the masked feature columns. Inputs narrower than the
/// mask keep their leading columns' mask entries.
inline Matrix apply_feature_mask(const Matrix& X, const std::array<bool, kFeatureCount>& mask) {
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < std::min<std::size_t>(X.cols, kFeatureCount); ++j) {
    if (mask[j]) active.push_back(j);
  }
  if (active.empty()) throw std::invalid_argument("feature mask excludes every column");
  if (active.size() == X.cols) return X;
  Matrix out(X.rows, active.size());
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* src = X.row(i);
    double* dst = out.row(i);
    for (std::size_t j = 0; j < active.size(); ++j) dst[j] = src[active[j]];
  }
  return out;
}

/// Fits the configured algorithm on already-masked rows.
inline DetectorModel fit_detector(const Matrix& Xp, const DetectorConfig& config,
                                  unsigned threads = 1) {
  switch (config.algorithm) {
    case Algorithm::kLof:
      return fit_lof(Xp, config.lof_k);
    case Algorithm::kKMeans:
      return fit_kmeans(Xp, config.kmeans_clusters, config.seed, config.kmeans_iters);
    case Algorithm::kIForest:
    default:
      return fit_iforest(Xp, config.trees, config.psi, config.seed, threads);
  }
}

inline double score_point(std::span<const double> x, const DetectorModel& model) {
  switch (model.algorithm) {
    case Algorithm::kLof:
      return score_lof(x, model);
    case Algorithm::kKMeans:
      return score_kmeans(x, model);
    case Algorithm::kIForest:
    default:
      return anomaly_score(x, model);
  }
}

inline std::vector<double> score_matrix(const Matrix& Xp, const DetectorModel& model,
                                        unsigned threads = 1) {
  std::vector<double> scores(Xp.rows);
  parallel_for(Xp.rows, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      scores[i] = score_point(Xp.row_span(i), model);
    }
  });
  return scores;
}

/// Labels scores against τ. Without an override the removal count is
/// exactly the contamination quantile count; tied boundary scores are
/// removed in ascending index order.
inline std::vector<int> quantile_labels(const std::vector<double>& scores,
                                        double contamination,
                                        std::optional<double> tau_override = std::nullopt,
                                        double* tau_out = nullptr) {
  const double tau = choose_tau(scores, contamination, tau_override);
  if (tau_out) *tau_out = tau;
  const std::size_t n = scores.size();
  std::vector<int> labels(n, 1);
  if (tau_override) {
    for (std::size_t i = 0; i < n; ++i) labels[i] = classify(scores[i], tau);
    return labels;
  }
  const double pos = (1.0 - contamination) * static_cast<double>(n - 1);
  const std::size_t removals = n - static_cast<std::size_t>(std::ceil(pos));
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  for (std::size_t r = 0; r < removals && r < n; ++r) {
    labels[order[r]] = -1;
  }
  return labels;
}

/// Fits the configured detector, scores every row, selects τ, and labels.
inline std::vector<AnomalyVerdict> detect(const Matrix& X, const DetectorConfig& config,
                                          unsigned threads = 1) {
  if (X.rows == 0) throw std::invalid_argument("cannot detect over an empty matrix");
  const Matrix Xp = apply_feature_mask(X, config.feature_mask);
  const DetectorModel model = fit_detector(Xp, config, threads);
  const std::vector<double> scores = score_matrix(Xp, model, threads);
  double tau = 0.0;
  const std::vector<int> labels =
      quantile_labels(scores, config.contamination, config.tau_override, &tau);
  std::vector<AnomalyVerdict> verdicts(Xp.rows);
  for (std::size_t i = 0; i < Xp.rows; ++i) {
    verdicts[i] = {scores[i], labels[i]};
  }
  return verdicts;
}

}  // namespace dcad

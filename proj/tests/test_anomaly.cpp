#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "dcad/anomaly.hpp"
#include "helpers.hpp"

using namespace dcad;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                     double mu = 0.0, double sd = 1.0) {
  Matrix X(rows, cols);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(mu, sd);
  for (auto& v : X.data) v = dist(rng);
  return X;
}

}  // namespace

TEST_CASE("c_factor matches the harmonic-sum definition", "[anomaly]") {
  CHECK(c_factor(0) == 0.0);
  CHECK(c_factor(1) == 0.0);
  CHECK(c_factor(2) == 1.0);
  CHECK(c_factor(3) == Catch::Approx(5.0 / 3.0).epsilon(1e-12));  // 2(1+1/2) − 4/3
  for (std::size_t n : {4ul, 10ul, 100ul, 5000ul, 10000ul}) {
    CHECK(c_factor(n) == Catch::Approx(testutil::oracle_c(n)).margin(1e-12));
  }
  // The asymptotic branch stays continuous at the cutoff.
  const double below = c_factor(kHarmonicExactCutoff);
  const double above = c_factor(kHarmonicExactCutoff + 1);
  CHECK(above > below);
  CHECK(above - below < 1e-4);
  CHECK(std::abs(above - testutil::oracle_c(kHarmonicExactCutoff + 1)) < 1e-9);
}

TEST_CASE("score is exactly one half when the path equals c(psi)", "[anomaly]") {
  DetectorModel model;
  model.c_psi = c_factor(256);
  IsolationTree tree;
  tree.height_limit = 0;
  // Single external node holding 256 points: path length = c(256) for any x.
  tree.nodes.push_back({-1, 0.0, 0, 0, 256, c_factor(256)});
  model.trees.push_back(tree);
  const double x[1] = {0.0};
  CHECK(anomaly_score({x, 1}, model) == 0.5);
}

TEST_CASE("path_length agrees with an independent recursive traversal", "[anomaly]") {
  auto X = random_matrix(300, 4, 11);
  auto model = fit_iforest(X, 25, 64, 2024);
  for (const auto& tree : model.trees) {
    for (std::size_t i = 0; i < 40; ++i) {
      const auto x = X.row_span(i);
      // Same edge count; c(m) differs only by double-vs-long-double rounding.
      CHECK(path_length(x, tree) ==
            Catch::Approx(testutil::oracle_path_length(x, tree)).margin(1e-12));
    }
  }
}

TEST_CASE("forest fitting is deterministic and thread-invariant", "[anomaly]") {
  auto X = random_matrix(500, 8, 3);
  auto a = fit_iforest(X, 20, 128, 99, 1);
  auto b = fit_iforest(X, 20, 128, 99, 4);
  REQUIRE(a.trees.size() == b.trees.size());
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    REQUIRE(a.trees[t].nodes.size() == b.trees[t].nodes.size());
    for (std::size_t k = 0; k < a.trees[t].nodes.size(); ++k) {
      const auto& na = a.trees[t].nodes[k];
      const auto& nb = b.trees[t].nodes[k];
      CHECK(na.feature == nb.feature);
      CHECK(na.split == nb.split);
      CHECK(na.size == nb.size);
    }
  }
  auto c = fit_iforest(X, 20, 128, 100, 1);  // different seed → different forest
  bool any_diff = false;
  for (std::size_t t = 0; t < a.trees.size() && !any_diff; ++t) {
    any_diff = a.trees[t].nodes.size() != c.trees[t].nodes.size();
    if (!any_diff) {
      for (std::size_t k = 0; k < a.trees[t].nodes.size(); ++k) {
        if (a.trees[t].nodes[k].split != c.trees[t].nodes[k].split) {
          any_diff = true;
          break;
        }
      }
    }
  }
  CHECK(any_diff);
}

TEST_CASE("iforest scores lie in (0,1] and flag a gross outlier", "[anomaly]") {
  auto X = random_matrix(400, 8, 21);
  // Plant one far point.
  for (std::size_t j = 0; j < 8; ++j) X.at(0, j) = 12.0;
  auto model = fit_iforest(X, 100, 256, 7);
  auto scores = score_matrix(X, model);
  double max_inlier = 0.0;
  for (std::size_t i = 1; i < X.rows; ++i) max_inlier = std::max(max_inlier, scores[i]);
  for (double s : scores) {
    CHECK(s > 0.0);
    CHECK(s <= 1.0);
  }
  CHECK(scores[0] > max_inlier);
}

TEST_CASE("constant matrix still fits and scores", "[anomaly]") {
  Matrix X(50, 3);
  for (auto& v : X.data) v = 4.2;
  auto model = fit_iforest(X, 10, 16, 5);
  auto scores = score_matrix(X, model);
  for (double s : scores) {
    CHECK(std::isfinite(s));
    CHECK(s > 0.0);
    CHECK(s <= 1.0);
  }
  // All points identical → identical scores.
  for (double s : scores) CHECK(s == scores[0]);
}

TEST_CASE("fit validations", "[anomaly]") {
  Matrix one(1, 2);
  CHECK_THROWS(fit_iforest(one, 10, 16, 1));
  Matrix ok(10, 2);
  CHECK_THROWS(fit_iforest(ok, 0, 16, 1));
  CHECK_THROWS(fit_iforest(ok, 10, 1, 1));
}

TEST_CASE("lof matches the brute-force oracle", "[anomaly]") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto X = random_matrix(80, 5, seed);
    const int k = 5;
    auto model = fit_lof(X, k);
    auto oracle = testutil::oracle_lof(X, k);
    for (std::size_t i = 0; i < X.rows; ++i) {
      CHECK(score_lof(X.row_span(i), model) == Catch::Approx(oracle[i]).margin(1e-9));
    }
  }
}

TEST_CASE("lof handles duplicate points and validates k", "[anomaly]") {
  Matrix X(30, 2);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coord(0, 3);  // heavy duplication
  for (auto& v : X.data) v = coord(rng);
  auto model = fit_lof(X, 4);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double s = score_lof(X.row_span(i), model);
    CHECK(std::isfinite(s));
    CHECK(s >= 0.0);
  }
  CHECK_THROWS(fit_lof(X, 30));  // needs N > k
  CHECK_THROWS(fit_lof(X, 0));
}

TEST_CASE("lof scoring a fresh far point is anomalous", "[anomaly]") {
  auto X = random_matrix(100, 3, 13);
  auto model = fit_lof(X, 10);
  std::vector<double> far = {25.0, 25.0, 25.0};
  double mean_fit = 0.0;
  for (std::size_t i = 0; i < X.rows; ++i) mean_fit += score_lof(X.row_span(i), model);
  mean_fit /= double(X.rows);
  CHECK(score_lof(far, model) > 3.0 * mean_fit);
}

TEST_CASE("kmeans with one cluster centers on the mean", "[anomaly]") {
  auto X = random_matrix(200, 4, 15, 3.0, 2.0);
  auto model = fit_kmeans(X, 1, 77);
  REQUIRE(model.centroids.rows == 1);
  for (std::size_t j = 0; j < 4; ++j) {
    double mu = 0.0;
    for (std::size_t i = 0; i < X.rows; ++i) mu += X.at(i, j);
    mu /= double(X.rows);
    CHECK(model.centroids.at(0, j) == Catch::Approx(mu).margin(1e-9));
  }
  // Score = distance to that centroid.
  const auto x = X.row_span(0);
  double d = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    d += (x[j] - model.centroids.at(0, j)) * (x[j] - model.centroids.at(0, j));
  }
  CHECK(score_kmeans(x, model) == Catch::Approx(std::sqrt(d)).epsilon(1e-12));
}

TEST_CASE("kmeans separates well-spaced blobs and is deterministic", "[anomaly]") {
  Matrix X(300, 2);
  std::mt19937_64 rng(6);
  std::normal_distribution<double> noise(0.0, 0.05);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double cx = (i % 3 == 0) ? 0.0 : (i % 3 == 1) ? 10.0 : 20.0;
    X.at(i, 0) = cx + noise(rng);
    X.at(i, 1) = cx + noise(rng);
  }
  auto a = fit_kmeans(X, 3, 1);
  auto b = fit_kmeans(X, 3, 1);
  CHECK(a.centroids.data == b.centroids.data);
  std::multiset<long> found;
  for (std::size_t c = 0; c < 3; ++c) found.insert(std::lround(a.centroids.at(c, 0)));
  CHECK(found == std::multiset<long>{0, 10, 20});
  // Points near a blob center score near zero; a gap point scores ~7.
  std::vector<double> near{10.02, 9.98}, gap{5.0, 5.0};
  CHECK(score_kmeans(near, a) < 0.5);
  CHECK(score_kmeans(gap, a) > 5.0);
}

TEST_CASE("kmeans handles more clusters than distinct points", "[anomaly]") {
  Matrix X(6, 1);
  for (std::size_t i = 0; i < 6; ++i) X.at(i, 0) = double(i % 2);  // two distinct values
  auto model = fit_kmeans(X, 4, 9);
  REQUIRE(model.centroids.rows == 4);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(score_kmeans(X.row_span(i), model) == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("tau is the type-7 quantile of the scores", "[anomaly]") {
  // Scores 0.1 .. 1.0; contamination 0.1 → position 8.1 → 0.9 + 0.1·0.1.
  std::vector<double> scores;
  for (int i = 1; i <= 10; ++i) scores.push_back(double(i) / 10.0);
  const double tau = choose_tau(scores, 0.1);
  CHECK(tau == Catch::Approx(0.91).epsilon(1e-12));

  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> random_scores;
  for (int i = 0; i < 257; ++i) random_scores.push_back(u(rng));
  auto sorted = random_scores;
  std::sort(sorted.begin(), sorted.end());
  for (double c : {0.05, 0.0769, 0.25, 0.5}) {
    CHECK(choose_tau(random_scores, c) ==
          Catch::Approx(testutil::oracle_quantile7(sorted, 1.0 - c)).margin(1e-12));
  }
  CHECK(choose_tau({0.7}, 0.3) == 0.7);
  CHECK_THROWS(choose_tau({}, 0.1));
  CHECK_THROWS(choose_tau({0.1, 0.2}, 0.0));
  CHECK_THROWS(choose_tau({0.1, 0.2}, 1.0));
  CHECK(choose_tau({0.1, 0.2}, 0.5, 0.42) == 0.42);  // override short-circuits
}

TEST_CASE("classification is keep below tau, remove at or above", "[anomaly]") {
  CHECK(classify(0.89, 0.91) == 1);
  CHECK(classify(0.91, 0.91) == -1);
  CHECK(classify(0.95, 0.91) == -1);
}

TEST_CASE("quantile labels remove the exact quota", "[anomaly]") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  std::vector<double> ten;
  for (int i = 0; i < 10; ++i) ten.push_back(u(rng));
  auto labels10 = quantile_labels(ten, 0.1);
  CHECK(std::count(labels10.begin(), labels10.end(), -1) == 1);

  std::vector<double> big;
  for (int i = 0; i < 10000; ++i) big.push_back(u(rng));
  auto labels = quantile_labels(big, 0.0769);
  CHECK(std::count(labels.begin(), labels.end(), -1) == 769);
  // The removed set is exactly the 769 highest scores.
  auto sorted = big;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double boundary = sorted[768];
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (labels[i] == -1) CHECK(big[i] >= boundary);
  }
}

TEST_CASE("tied scores are removed in ascending index order", "[anomaly]") {
  std::vector<double> tied(10, 0.5);
  auto labels = quantile_labels(tied, 0.2);  // quota: 10 − ceil(0.8·9) = 2
  CHECK(std::count(labels.begin(), labels.end(), -1) == 2);
  CHECK(labels[0] == -1);
  CHECK(labels[1] == -1);
  for (std::size_t i = 2; i < 10; ++i) CHECK(labels[i] == 1);
}

TEST_CASE("tau override labels every score independently", "[anomaly]") {
  std::vector<double> scores = {0.1, 0.5, 0.9, 0.5};
  double tau = 0.0;
  auto labels = quantile_labels(scores, 0.5, 0.5, &tau);
  CHECK(tau == 0.5);
  CHECK(labels == std::vector<int>{1, -1, -1, -1});
}

TEST_CASE("feature mask projects columns", "[anomaly]") {
  Matrix X(2, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    X.at(0, j) = double(j);
    X.at(1, j) = double(10 + j);
  }
  std::array<bool, 8> mask{};
  mask.fill(true);
  mask[3] = false;
  auto P = apply_feature_mask(X, mask);
  CHECK(P.cols == 7);
  CHECK(P.at(0, 2) == 2.0);
  CHECK(P.at(0, 3) == 4.0);  // column 3 dropped
  CHECK(P.at(1, 6) == 17.0);

  // A 7-column input with the full mask passes through unchanged.
  std::array<bool, 8> full{};
  full.fill(true);
  auto Q = apply_feature_mask(P, full);
  CHECK(Q.data == P.data);

  std::array<bool, 8> none{};
  CHECK_THROWS(apply_feature_mask(X, none));
}

TEST_CASE("detect composes fit, score, tau, and labels", "[anomaly]") {
  auto X = random_matrix(500, 8, 61);
  DetectorConfig config;
  config.contamination = 0.1;
  config.seed = 17;
  auto verdicts = detect(X, config);
  REQUIRE(verdicts.size() == X.rows);
  // Quota: 500 − ceil(0.9·499) = 500 − 450 = 50.
  std::size_t removed = 0;
  for (const auto& v : verdicts) {
    if (v.label == -1) ++removed;
    CHECK((v.label == 1 || v.label == -1));
    CHECK(v.score > 0.0);
  }
  CHECK(removed == 50);
  // Every removed score ≥ every kept score.
  double min_removed = 1e9, max_kept = -1e9;
  for (const auto& v : verdicts) {
    if (v.label == -1) min_removed = std::min(min_removed, v.score);
    if (v.label == 1) max_kept = std::max(max_kept, v.score);
  }
  CHECK(min_removed >= max_kept);

  // Equivalent to the separated pipeline entry points.
  auto Xp = apply_feature_mask(X, config.feature_mask);
  auto model = fit_detector(Xp, config);
  auto scores = score_matrix(Xp, model);
  auto labels = quantile_labels(scores, config.contamination);
  for (std::size_t i = 0; i < X.rows; ++i) {
    CHECK(verdicts[i].score == scores[i]);
    CHECK(verdicts[i].label == labels[i]);
  }
}

TEST_CASE("all three algorithms rank scattered extreme outliers last", "[anomaly]") {
  // Each planted point sits in its own far corner; a tight outlier *cluster*
  // would form its own density/centroid and defeat LOF and k-means by design.
  const std::size_t n = 400, planted = 20;
  auto X = random_matrix(n, 8, 71);
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::set<std::size_t> outliers;
  while (outliers.size() < planted) outliers.insert(pick(rng));
  for (auto i : outliers) {
    for (std::size_t j = 0; j < 8; ++j) {
      X.at(i, j) = (sign(rng) ? 9.0 : -9.0) + X.at(i, j) * 0.1;
    }
  }
  for (auto algo : {Algorithm::kIForest, Algorithm::kLof, Algorithm::kKMeans}) {
    DetectorConfig config;
    config.algorithm = algo;
    config.contamination = double(planted) / double(n);
    config.seed = 5;
    auto verdicts = detect(X, config);
    std::size_t caught = 0;
    for (auto i : outliers) caught += verdicts[i].label == -1;
    INFO("algorithm " << int(algo));
    // k-means can sacrifice a point whose corner captured a centroid.
    CHECK(caught >= (algo == Algorithm::kKMeans ? 17 : planted * 9 / 10));
  }
}

#pragma once

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcad/anomaly.hpp"

namespace testutil {

/// Unique scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    static std::atomic<std::uint64_t> counter{0};
    const auto id = counter.fetch_add(1);
    path_ = base / ("dcad_test_" + std::to_string(::getpid()) + "_" + std::to_string(id));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline long double oracle_harmonic(std::uint64_t n) {
  long double h = 0.0L;
  for (std::uint64_t i = 1; i <= n; ++i) h += 1.0L / static_cast<long double>(i);
  return h;
}

inline double oracle_c(std::uint64_t n) {
  if (n <= 1) return 0.0;
  if (n == 2) return 1.0;
  const long double nn = static_cast<long double>(n);
  return static_cast<double>(2.0L * oracle_harmonic(n - 1) - 2.0L * (nn - 1.0L) / nn);
}

/// Independent recursive walk of an isolation tree; returns edges traversed
/// plus the size correction at the external node reached.
inline double oracle_path_length(std::span<const double> x, const dcad::IsolationTree& tree,
                                 std::int32_t node = 0, double depth = 0.0) {
  const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
  if (nd.feature < 0) return depth + oracle_c(nd.size);
  if (x[static_cast<std::size_t>(nd.feature)] < nd.split) {
    return oracle_path_length(x, tree, nd.left, depth + 1.0);
  }
  return oracle_path_length(x, tree, nd.right, depth + 1.0);
}

/// Brute-force LOF with (distance, index) neighbor ordering, k exact.
inline std::vector<double> oracle_lof(const dcad::Matrix& X, int k) {
  const std::size_t n = X.rows;
  const auto dist = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t j = 0; j < X.cols; ++j) {
      const double d = X.at(a, j) - X.at(b, j);
      s += d * d;
    }
    return std::sqrt(s);
  };
  std::vector<std::vector<std::pair<double, std::size_t>>> knn(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      all.emplace_back(dist(i, j), j);
    }
    std::sort(all.begin(), all.end());
    all.resize(static_cast<std::size_t>(k));
    knn[i] = std::move(all);
  }
  const auto k_dist = [&](std::size_t i) { return knn[i].back().first; };
  std::vector<double> lrd(n);
  for (std::size_t i = 0; i < n; ++i) {
    double reach = 0.0;
    for (const auto& [d, o] : knn[i]) reach += std::max(k_dist(o), d);
    lrd[i] = 1.0 / (reach / static_cast<double>(k) + 1e-10);
  }
  std::vector<double> score(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (const auto& [d, o] : knn[i]) s += lrd[o];
    score[i] = s / static_cast<double>(k) / lrd[i];
  }
  return score;
}

/// Type-7 quantile over an already sorted ascending sample.
inline double oracle_quantile7(const std::vector<double>& sorted, double q) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = q * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

/// Naive duplicated-occurrence ratio over k-grams of any unit sequence.
template <typename T>
double oracle_rep_ratio(const std::vector<T>& units, std::size_t k) {
  if (units.size() < k) return 0.0;
  std::map<std::vector<T>, int> counts;
  const std::size_t total = units.size() - k + 1;
  for (std::size_t i = 0; i < total; ++i) {
    counts[std::vector<T>(units.begin() + static_cast<std::ptrdiff_t>(i),
                          units.begin() + static_cast<std::ptrdiff_t>(i + k))] += 1;
  }
  std::uint64_t dup = 0;
  for (const auto& [gram, c] : counts) {
    if (c > 1) dup += static_cast<std::uint64_t>(c);
  }
  return static_cast<double>(dup) / static_cast<double>(total);
}

inline const std::vector<std::string>& sample_words() {
  static const std::vector<std::string> words = {
      "the",   "of",    "and",   "to",     "in",    "that",  "was",   "his",
      "river", "stone", "light", "cloud",  "water", "earth", "wind",  "fire",
      "tree",  "bird",  "song",  "road",   "house", "field", "night", "morning",
      "child", "voice", "hand",  "window", "garden", "letter", "winter", "summer"};
  return words;
}

inline std::string word_soup(std::mt19937_64& rng, std::size_t n_words) {
  const auto& words = sample_words();
  std::string text;
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (std::size_t i = 0; i < n_words; ++i) {
    if (i) text += ' ';
    text += words[pick(rng)];
  }
  return text;
}

inline std::string json_doc(const std::string& id, const std::string& lang,
                            const std::string& text) {
  nlohmann::json j;
  j["id"] = id;
  j["lang"] = lang;
  j["text"] = text;
  return j.dump();
}

struct SyntheticCorpus {
  std::vector<std::string> lines;
  std::vector<int> is_noise;  // parallel to lines, 1 for planted noise
};

/// Fluent word-soup documents plus three kinds of planted noise:
/// phrase repetition spam, wrong-script injections, and symbol floods.
inline SyntheticCorpus make_mixed_corpus(std::size_t fluent, std::size_t noise,
                                         std::uint64_t seed, const std::string& lang = "eng_Latn") {
  std::mt19937_64 rng(seed);
  SyntheticCorpus c;
  std::uniform_int_distribution<std::size_t> len(30, 80);
  for (std::size_t i = 0; i < fluent; ++i) {
    c.lines.push_back(json_doc("fluent" + std::to_string(i), lang, word_soup(rng, len(rng))));
    c.is_noise.push_back(0);
  }
  const std::vector<std::string> cyr = {"и", "не", "на", "что", "вода", "земля",
                                        "огонь", "ветер", "птица", "дорога"};
  std::uniform_int_distribution<std::size_t> cpick(0, cyr.size() - 1);
  for (std::size_t i = 0; i < noise; ++i) {
    std::string text;
    const int kind = static_cast<int>(i % 3);
    if (kind == 0) {
      const std::string phrase = word_soup(rng, 3);
      for (int r = 0; r < 25; ++r) {
        if (r) text += ' ';
        text += phrase;
      }
    } else if (kind == 1) {
      for (int r = 0; r < 45; ++r) {
        if (r) text += ' ';
        text += cyr[cpick(rng)];
      }
    } else {
      for (int r = 0; r < 30; ++r) text += "!!$%#@ ";
      text += word_soup(rng, 4);
    }
    c.lines.push_back(json_doc("noise" + std::to_string(i), lang, text));
    c.is_noise.push_back(1);
  }
  // Interleave deterministically so noise is not a contiguous block.
  std::vector<std::size_t> order(c.lines.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  SyntheticCorpus shuffled;
  for (std::size_t i : order) {
    shuffled.lines.push_back(std::move(c.lines[i]));
    shuffled.is_noise.push_back(c.is_noise[i]);
  }
  return shuffled;
}

inline void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const auto& line : lines) out << line << '\n';
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil

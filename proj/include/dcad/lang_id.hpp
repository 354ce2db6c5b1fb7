#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcad/numfmt.hpp"
#include "dcad/unicode.hpp"

namespace dcad {

/// Character n-gram classifier with add-alpha smoothing. Languages are kept
/// sorted; grams map to one log-probability per language, in that order.
struct LidModel {
  int n = 3;
  double alpha = 1.0;
  std::vector<std::string> languages;
  std::vector<double> log_priors;
  std::vector<double> log_unknown;
  std::map<std::u32string, std::vector<double>> gram_logprobs;
};

namespace detail {

inline constexpr char32_t kLidPad = 0x01;

inline std::vector<std::u32string> char_ngrams(std::u32string_view text, int n) {
  std::vector<std::u32string> grams;
  if (text.empty()) return grams;
  std::u32string padded;
  padded.reserve(text.size() + 2 * (n - 1));
  padded.append(n - 1, kLidPad);
  padded.append(text);
  padded.append(n - 1, kLidPad);
  if (static_cast<int>(padded.size()) < n) return grams;
  grams.reserve(padded.size() - n + 1);
  for (std::size_t i = 0; i + n <= padded.size(); ++i) {
    grams.emplace_back(padded.substr(i, n));
  }
  return grams;
}

}  // namespace detail

inline LidModel train_lid(const std::map<std::string, std::vector<std::string>>& samples,
                          int n = 3, double alpha = 1.0) {
  if (n < 1) throw std::invalid_argument("gram length must be >= 1");
  if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
  if (samples.size() < 2) throw std::invalid_argument("need at least 2 languages");

  LidModel model;
  model.n = n;
  model.alpha = alpha;
  for (const auto& [lang, texts] : samples) model.languages.push_back(lang);
  const std::size_t nl = model.languages.size();

  std::map<std::u32string, std::vector<std::uint64_t>> counts;
  std::vector<std::uint64_t> totals(nl, 0);
  for (std::size_t li = 0; li < nl; ++li) {
    for (const auto& text : samples.at(model.languages[li])) {
      for (auto& g : detail::char_ngrams(to_u32(text), n)) {
        auto [it, inserted] = counts.try_emplace(std::move(g), nl, 0);
        ++it->second[li];
        ++totals[li];
      }
    }
    if (totals[li] == 0) {
      throw std::invalid_argument("language has no grams: " + model.languages[li]);
    }
  }

  // Add-alpha over the shared gram vocabulary plus one unknown bucket, so
  // each language's smoothed distribution sums to 1.
  const double vocab = static_cast<double>(counts.size());
  std::vector<double> denom(nl);
  for (std::size_t li = 0; li < nl; ++li) {
    denom[li] = static_cast<double>(totals[li]) + alpha * (vocab + 1.0);
  }

  std::uint64_t grand_total = 0;
  for (auto t : totals) grand_total += t;
  model.log_priors.resize(nl);
  model.log_unknown.resize(nl);
  for (std::size_t li = 0; li < nl; ++li) {
    model.log_priors[li] =
        std::log(static_cast<double>(totals[li]) / static_cast<double>(grand_total));
    model.log_unknown[li] = std::log(alpha / denom[li]);
  }

  for (auto& [gram, per_lang] : counts) {
    std::vector<double> logs(nl);
    for (std::size_t li = 0; li < nl; ++li) {
      logs[li] = std::log((static_cast<double>(per_lang[li]) + alpha) / denom[li]);
    }
    model.gram_logprobs.emplace(gram, std::move(logs));
  }
  return model;
}

namespace detail {

/// Per-language scores: prior plus summed gram log-probs, divided by the
/// gram count. Empty when the text yields no grams.
inline std::vector<double> lid_scores(std::string_view text, const LidModel& model) {
  const std::size_t nl = model.languages.size();
  if (nl == 0) throw std::invalid_argument("model has no languages");
  auto grams = char_ngrams(to_u32(text), model.n);
  if (grams.empty()) return {};

  std::vector<double> scores(model.log_priors);
  for (const auto& g : grams) {
    auto it = model.gram_logprobs.find(g);
    const std::vector<double>& logs =
        it != model.gram_logprobs.end() ? it->second : model.log_unknown;
    for (std::size_t li = 0; li < nl; ++li) scores[li] += logs[li];
  }
  const double inv = 1.0 / static_cast<double>(grams.size());
  for (auto& s : scores) s *= inv;
  return scores;
}

inline double softmax_share(const std::vector<double>& scores, std::size_t index) {
  const double ref = scores[index];
  double sum = 0.0;
  for (auto s : scores) sum += std::exp(s - ref);
  return 1.0 / sum;
}

}  // namespace detail

/// Argmax language and its softmax share of the length-normalized scores.
/// Ties go to the lexicographically first language. Empty text yields
/// ("und", 1/|languages|).
inline std::pair<std::string, double> identify(std::string_view text, const LidModel& model) {
  auto scores = detail::lid_scores(text, model);
  if (scores.empty()) {
    return {"und", 1.0 / static_cast<double>(model.languages.size())};
  }
  std::size_t best = 0;
  for (std::size_t li = 1; li < scores.size(); ++li) {
    if (scores[li] > scores[best]) best = li;
  }
  return {model.languages[best], detail::softmax_share(scores, best)};
}

/// Softmax share of a specific language, so a document labeled with the wrong
/// language scores low instead of inheriting the winner's confidence. Falls
/// back to the argmax share when the language is outside the model inventory;
/// empty text yields 1/|languages|.
inline double confidence_for(std::string_view text, const LidModel& model,
                             std::string_view lang) {
  auto scores = detail::lid_scores(text, model);
  if (scores.empty()) return 1.0 / static_cast<double>(model.languages.size());
  auto it = std::find(model.languages.begin(), model.languages.end(), lang);
  std::size_t index;
  if (it != model.languages.end()) {
    index = static_cast<std::size_t>(it - model.languages.begin());
  } else {
    index = 0;
    for (std::size_t li = 1; li < scores.size(); ++li) {
      if (scores[li] > scores[index]) index = li;
    }
  }
  return detail::softmax_share(scores, index);
}

/// Text table: header lines (version, n, alpha, languages with prior and
/// unknown log-probs), then one line per gram with the gram's codepoints in
/// hex joined by '-' followed by per-language log-probs.
inline void save_lid(const LidModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "lidmodel 1\n";
  out << "n " << model.n << "\n";
  out << "alpha " << format_double(model.alpha) << "\n";
  out << "languages " << model.languages.size() << "\n";
  for (std::size_t li = 0; li < model.languages.size(); ++li) {
    out << model.languages[li] << " " << format_double(model.log_priors[li]) << " "
        << format_double(model.log_unknown[li]) << "\n";
  }
  out << "grams " << model.gram_logprobs.size() << "\n";
  for (const auto& [gram, logs] : model.gram_logprobs) {
    for (std::size_t i = 0; i < gram.size(); ++i) {
      if (i) out << '-';
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%X", static_cast<unsigned>(gram[i]));
      out << buf;
    }
    for (double v : logs) out << " " << format_double(v);
    out << "\n";
  }
  out << "end\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) parts.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return parts;
}

}  // namespace detail

inline LidModel load_lid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::uint64_t line_no = 0;
  std::string line;
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
  };
  auto next = [&]() -> std::string& {
    if (!std::getline(in, line)) throw fail("unexpected end of file");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };

  LidModel model;
  if (next() != "lidmodel 1") throw fail("bad header, expected 'lidmodel 1'");
  {
    auto p = detail::split_ws(next());
    if (p.size() != 2 || p[0] != "n") throw fail("expected 'n <gram length>'");
    model.n = std::stoi(p[1]);
  }
  {
    auto p = detail::split_ws(next());
    if (p.size() != 2 || p[0] != "alpha") throw fail("expected 'alpha <value>'");
    model.alpha = parse_double(p[1]);
  }
  std::size_t nl = 0;
  {
    auto p = detail::split_ws(next());
    if (p.size() != 2 || p[0] != "languages") throw fail("expected 'languages <count>'");
    nl = std::stoul(p[1]);
  }
  for (std::size_t li = 0; li < nl; ++li) {
    auto p = detail::split_ws(next());
    if (p.size() != 3) throw fail("expected '<lang> <log prior> <log unknown>'");
    model.languages.push_back(p[0]);
    model.log_priors.push_back(parse_double(p[1]));
    model.log_unknown.push_back(parse_double(p[2]));
  }
  std::size_t ngrams = 0;
  {
    auto p = detail::split_ws(next());
    if (p.size() != 2 || p[0] != "grams") throw fail("expected 'grams <count>'");
    ngrams = std::stoul(p[1]);
  }
  for (std::size_t gi = 0; gi < ngrams; ++gi) {
    auto p = detail::split_ws(next());
    if (p.size() != 1 + nl) throw fail("expected gram plus one log-prob per language");
    std::u32string gram;
    std::size_t pos = 0;
    const std::string& hex = p[0];
    while (pos < hex.size()) {
      std::size_t dash = hex.find('-', pos);
      std::string piece = hex.substr(pos, dash == std::string::npos ? dash : dash - pos);
      gram.push_back(static_cast<char32_t>(std::stoul(piece, nullptr, 16)));
      pos = dash == std::string::npos ? hex.size() : dash + 1;
    }
    std::vector<double> logs(nl);
    for (std::size_t li = 0; li < nl; ++li) logs[li] = parse_double(p[1 + li]);
    model.gram_logprobs.emplace(std::move(gram), std::move(logs));
  }
  if (next() != "end") throw fail("expected 'end'");
  return model;
}

}  // namespace dcad

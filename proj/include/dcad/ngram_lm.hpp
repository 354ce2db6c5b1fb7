#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcad/numfmt.hpp"
#include "dcad/tokenize.hpp"
#include "dcad/unicode.hpp"

namespace dcad {

inline const std::u32string kSentStart = U"<s>";
inline const std::u32string kSentEnd = U"</s>";
inline const std::u32string kUnkToken = U"<unk>";

/// Thrown when a text has no scored positions; callers substitute
/// default_perplexity().
struct PerplexityUndefined : std::runtime_error {
  PerplexityUndefined() : std::runtime_error("perplexity undefined, use default") {}
};

constexpr double default_perplexity() { return 500.0; }

/// Backoff multiplier applied once per order skipped during scoring.
constexpr double kBackoffWeight = 0.4;

/// N-gram model over log10 probabilities. tables[k-1] maps k-grams to
/// entries; grams of order < n carry a backoff field for the ARPA format.
struct LanguageModel {
  using Gram = std::vector<std::u32string>;
  struct Entry {
    double logprob = 0.0;
    double backoff = 0.0;
    bool has_backoff = false;
  };

  int order = 3;
  std::vector<std::map<Gram, Entry>> tables;

  bool in_vocab(const std::u32string& token) const {
    return tables[0].count(Gram{token}) != 0;
  }

  const Entry* find(const Gram& gram) const {
    if (gram.empty() || gram.size() > tables.size()) return nullptr;
    const auto& table = tables[gram.size() - 1];
    auto it = table.find(gram);
    return it == table.end() ? nullptr : &it->second;
  }
};

inline LanguageModel train_lm(std::span<const std::string> corpus, int order,
                              std::string_view lang,
                              std::size_t min_sentences = 10000) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");

  const auto mode = tokenizer_mode(lang);
  std::vector<std::map<LanguageModel::Gram, std::uint64_t>> counts(order);
  std::uint64_t sentences = 0;
  std::uint64_t real_tokens = 0;

  for (const auto& text : corpus) {
    auto tokens = tokenize(to_u32(text), mode);
    if (tokens.empty()) continue;
    ++sentences;
    LanguageModel::Gram padded;
    padded.reserve(tokens.size() + order);
    padded.insert(padded.end(), order - 1, kSentStart);
    for (auto& t : tokens) padded.push_back(std::move(t));
    padded.push_back(kSentEnd);
    real_tokens += tokens.size() + 1;
    for (int k = 1; k <= order; ++k) {
      if (padded.size() < static_cast<std::size_t>(k)) continue;
      for (std::size_t i = 0; i + k <= padded.size(); ++i) {
        LanguageModel::Gram g(padded.begin() + i, padded.begin() + i + k);
        ++counts[k - 1][std::move(g)];
      }
    }
  }
  if (sentences == 0) throw std::runtime_error("empty corpus");
  if (sentences < min_sentences) {
    std::cerr << "warning: training on " << sentences << " sentences (below "
              << min_sentences << ")\n";
  }

  LanguageModel model;
  model.order = order;
  model.tables.resize(order);
  const bool has_backoff_orders = order > 1;
  const double backoff = std::log10(kBackoffWeight);
  const double unk_denom = static_cast<double>(real_tokens) + 1.0;

  for (const auto& [gram, c] : counts[0]) {
    LanguageModel::Entry e;
    if (gram[0] == kSentStart) {
      e.logprob = -99.0;
    } else {
      e.logprob = std::log10(static_cast<double>(c) / unk_denom);
    }
    if (has_backoff_orders) {
      e.backoff = backoff;
      e.has_backoff = true;
    }
    model.tables[0].emplace(gram, e);
  }
  {
    LanguageModel::Entry e;
    e.logprob = std::log10(1.0 / unk_denom);
    if (has_backoff_orders) {
      e.backoff = backoff;
      e.has_backoff = true;
    }
    model.tables[0].emplace(LanguageModel::Gram{kUnkToken}, e);
  }

  for (int k = 2; k <= order; ++k) {
    for (const auto& [gram, c] : counts[k - 1]) {
      LanguageModel::Gram prefix(gram.begin(), gram.end() - 1);
      auto pit = counts[k - 2].find(prefix);
      if (pit == counts[k - 2].end()) continue;
      LanguageModel::Entry e;
      e.logprob = std::log10(static_cast<double>(c) / static_cast<double>(pit->second));
      if (k < order) {
        e.backoff = backoff;
        e.has_backoff = true;
      }
      model.tables[k - 1].emplace(gram, e);
    }
  }
  return model;
}

namespace detail {

/// Stupid-backoff log10 score of one position: longest matching gram wins,
/// each skipped order multiplies by the backoff weight.
inline double backoff_logprob(const LanguageModel& model,
                              const LanguageModel::Gram& context,
                              const std::u32string& word) {
  const int n = model.order;
  for (int k = n; k >= 1; --k) {
    LanguageModel::Gram gram;
    gram.reserve(k);
    for (int j = k - 1; j >= 1; --j) {
      gram.push_back(context[context.size() - j]);
    }
    gram.push_back(word);
    if (const auto* e = model.find(gram)) {
      return e->logprob + static_cast<double>(n - k) * std::log10(kBackoffWeight);
    }
  }
  throw std::runtime_error("token has no unigram entry and model lacks <unk>");
}

}  // namespace detail

/// 10^(−(1/T)·Σ log10 p); scored positions are the tokens plus </s>.
inline double perplexity(std::string_view text, const LanguageModel& model,
                         TokenizerMode mode = TokenizerMode::kSeparator) {
  auto tokens = tokenize(to_u32(text), mode);
  if (tokens.empty()) throw PerplexityUndefined();

  LanguageModel::Gram seq;
  seq.reserve(tokens.size() + model.order);
  seq.insert(seq.end(), model.order - 1, kSentStart);
  for (auto& t : tokens) {
    seq.push_back(model.in_vocab(t) ? std::move(t) : kUnkToken);
  }
  seq.push_back(kSentEnd);

  const std::size_t first = model.order - 1;
  const std::size_t positions = seq.size() - first;
  double total = 0.0;
  LanguageModel::Gram context(seq.begin(), seq.begin() + first);
  for (std::size_t i = first; i < seq.size(); ++i) {
    total += detail::backoff_logprob(model, context, seq[i]);
    context.push_back(seq[i]);
  }
  return std::pow(10.0, -total / static_cast<double>(positions));
}

inline void save_arpa(const LanguageModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "\\data\\\n";
  for (int k = 1; k <= model.order; ++k) {
    out << "ngram " << k << "=" << model.tables[k - 1].size() << "\n";
  }
  for (int k = 1; k <= model.order; ++k) {
    out << "\n\\" << k << "-grams:\n";
    for (const auto& [gram, e] : model.tables[k - 1]) {
      out << format_double(e.logprob);
      for (std::size_t i = 0; i < gram.size(); ++i) {
        out << (i == 0 ? '\t' : ' ');
        out << encode_utf8(gram[i]);
      }
      if (e.has_backoff) out << '\t' << format_double(e.backoff);
      out << "\n";
    }
  }
  out << "\n\\end\\\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline LanguageModel load_arpa(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::uint64_t line_no = 0;
  std::string line;
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
  };
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  auto expect = [&](std::string_view what) {
    if (!next()) throw fail("unexpected end of file, expected " + std::string(what));
  };

  expect("\\data\\");
  if (line != "\\data\\") throw fail("expected \\data\\");
  std::vector<std::size_t> gram_counts;
  while (true) {
    expect("ngram counts");
    if (line.empty()) break;
    if (line.rfind("ngram ", 0) != 0) throw fail("expected 'ngram k=count' or blank line");
    auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected 'ngram k=count'");
    int k = std::stoi(line.substr(6, eq - 6));
    if (k != static_cast<int>(gram_counts.size()) + 1) throw fail("ngram orders out of sequence");
    gram_counts.push_back(std::stoul(line.substr(eq + 1)));
  }
  if (gram_counts.empty()) throw fail("no ngram counts");

  LanguageModel model;
  model.order = static_cast<int>(gram_counts.size());
  model.tables.resize(model.order);
  for (int k = 1; k <= model.order; ++k) {
    const std::string header = "\\" + std::to_string(k) + "-grams:";
    expect(header);
    if (line != header) throw fail("expected " + header);
    for (std::size_t i = 0; i < gram_counts[k - 1]; ++i) {
      expect("gram entry");
      std::vector<std::string> fields;
      std::size_t pos = 0;
      while (pos <= line.size()) {
        auto tab = line.find('\t', pos);
        fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
        if (tab == std::string::npos) break;
        pos = tab + 1;
      }
      if (fields.size() < 2 || fields.size() > 3) {
        throw fail("expected 'logprob<TAB>gram[<TAB>backoff]'");
      }
      LanguageModel::Entry e;
      e.logprob = parse_double(fields[0]);
      if (fields.size() == 3) {
        e.backoff = parse_double(fields[2]);
        e.has_backoff = true;
      }
      LanguageModel::Gram gram;
      std::size_t tpos = 0;
      const std::string& toks = fields[1];
      while (tpos <= toks.size()) {
        auto sp = toks.find(' ', tpos);
        auto piece = toks.substr(tpos, sp == std::string::npos ? sp : sp - tpos);
        if (piece.empty()) throw fail("empty token in gram");
        gram.push_back(to_u32(piece));
        if (sp == std::string::npos) break;
        tpos = sp + 1;
      }
      if (static_cast<int>(gram.size()) != k) throw fail("gram length does not match section");
      model.tables[k - 1].emplace(std::move(gram), e);
    }
    expect("blank line");
    if (!line.empty()) throw fail("expected blank line after gram section");
  }
  expect("\\end\\");
  if (line != "\\end\\") throw fail("expected \\end\\");
  return model;
}

/// Per-language model registry; languages without a model score the default.
class LmStore {
 public:
  void add(const std::string& lang, LanguageModel model) {
    models_[lang] = std::move(model);
  }

  /// Loads every `<lang>.arpa` in a directory.
  void load_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".arpa") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      models_[p.stem().string()] = load_arpa(p.string());
    }
  }

  const LanguageModel* find(std::string_view lang) const {
    auto it = models_.find(std::string(lang));
    return it == models_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return models_.size(); }

 private:
  std::map<std::string, LanguageModel> models_;
};

}  // namespace dcad

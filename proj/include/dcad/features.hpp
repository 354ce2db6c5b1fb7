#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dcad/corpus_io.hpp"
#include "dcad/lang_id.hpp"
#include "dcad/lexicons.hpp"
#include "dcad/ngram_lm.hpp"
#include "dcad/tokenize.hpp"

namespace dcad {

constexpr std::size_t kFeatureCount = 8;

inline const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "n_words", "r_char_rep", "r_word_rep", "r_special",
      "r_stop",  "r_flag",     "s_lid",      "s_ppl"};
  return names;
}

struct FeatureVector {
  double n_words = 0.0;
  double r_char_rep = 0.0;
  double r_word_rep = 0.0;
  double r_special = 0.0;
  double r_stop = 0.0;
  double r_flag = 0.0;
  double s_lid = 1.0;
  double s_ppl = default_perplexity();

  std::array<double, kFeatureCount> as_array() const {
    return {n_words, r_char_rep, r_word_rep, r_special, r_stop, r_flag, s_lid, s_ppl};
  }

  static FeatureVector from_array(const std::array<double, kFeatureCount>& a) {
    FeatureVector f;
    f.n_words = a[0];
    f.r_char_rep = a[1];
    f.r_word_rep = a[2];
    f.r_special = a[3];
    f.r_stop = a[4];
    f.r_flag = a[5];
    f.s_lid = a[6];
    f.s_ppl = a[7];
    return f;
  }
};

inline double word_count(const std::vector<std::u32string>& tokens) {
  return static_cast<double>(tokens.size());
}

namespace detail {

/// Fraction of k-gram occurrences whose gram occurs more than once, over
/// length-prefixed keys so distinct gram sequences never collide.
template <typename Unit>
inline double repetition_ratio(const std::vector<Unit>& units, std::size_t k) {
  if (k == 0) throw std::invalid_argument("gram length must be >= 1");
  if (units.size() < k) return 0.0;
  std::unordered_map<std::u32string, std::uint32_t> counts;
  const std::size_t total = units.size() - k + 1;
  counts.reserve(total * 2);
  for (std::size_t i = 0; i < total; ++i) {
    std::u32string key;
    for (std::size_t j = 0; j < k; ++j) {
      if constexpr (std::is_same_v<Unit, char32_t>) {
        key.push_back(units[i + j]);
      } else {
        key.push_back(static_cast<char32_t>(units[i + j].size()));
        key.append(units[i + j]);
      }
    }
    ++counts[std::move(key)];
  }
  std::uint64_t repeated = 0;
  for (const auto& [key, c] : counts) {
    if (c > 1) repeated += c;
  }
  return static_cast<double>(repeated) / static_cast<double>(total);
}

}  // namespace detail

inline double char_repetition_ratio(std::u32string_view text, std::size_t k = 10) {
  std::vector<char32_t> chars(text.begin(), text.end());
  return detail::repetition_ratio(chars, k);
}

inline double char_repetition_ratio(std::string_view text, std::size_t k = 10) {
  return char_repetition_ratio(std::u32string_view(to_u32(text)), k);
}

inline double word_repetition_ratio(const std::vector<std::u32string>& tokens,
                                    std::size_t k = 2) {
  return detail::repetition_ratio(tokens, k);
}

inline double special_char_ratio(std::u32string_view text, const CharSet& specials) {
  if (text.empty()) return 0.0;
  std::size_t special = 0;
  for (char32_t cp : text) {
    if (specials.contains(cp)) ++special;
  }
  return static_cast<double>(special) / static_cast<double>(text.size());
}

inline double special_char_ratio(std::string_view text, const CharSet& specials) {
  return special_char_ratio(std::u32string_view(to_u32(text)), specials);
}

inline double lexicon_ratio(const std::vector<std::u32string>& tokens,
                            const TokenSet& lexicon) {
  if (tokens.empty()) return 0.0;
  if (lexicon.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& t : tokens) {
    if (lexicon.count(t)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

struct FeatureConfig {
  std::size_t char_gram_k = 10;
  std::size_t word_gram_k = 2;
  // Per-language tokenizer overrides; absent languages follow their script.
  std::unordered_map<std::string, TokenizerMode> tokenizer_overrides;

  TokenizerMode mode_for(std::string_view lang) const {
    if (auto it = tokenizer_overrides.find(std::string(lang));
        it != tokenizer_overrides.end()) {
      return it->second;
    }
    return tokenizer_mode(lang);
  }
};

struct FeatureResources {
  const Lexicons* lexicons = nullptr;
  const LidModel* lid = nullptr;
  const LmStore* lms = nullptr;
};

inline FeatureVector extract_features(const Document& doc, const FeatureResources& res,
                                      const FeatureConfig& config = {}) {
  FeatureVector f;
  auto text = to_u32(doc.text);
  auto tokens = tokenize(std::u32string_view(text), config.mode_for(doc.lang));

  f.n_words = word_count(tokens);
  f.r_char_rep = char_repetition_ratio(std::u32string_view(text), config.char_gram_k);
  f.r_word_rep = word_repetition_ratio(tokens, config.word_gram_k);
  if (res.lexicons) {
    f.r_special = special_char_ratio(std::u32string_view(text), res.lexicons->special_chars());
    f.r_stop = lexicon_ratio(tokens, res.lexicons->stopwords(doc.lang));
    f.r_flag = lexicon_ratio(tokens, res.lexicons->flagged(doc.lang));
  } else {
    f.r_special = special_char_ratio(std::u32string_view(text), default_special_chars());
  }

  if (res.lid) {
    f.s_lid = confidence_for(doc.text, *res.lid, doc.lang);
  } else {
    f.s_lid = 1.0;
  }

  const LanguageModel* lm = res.lms ? res.lms->find(doc.lang) : nullptr;
  if (lm) {
    try {
      f.s_ppl = perplexity(doc.text, *lm, config.mode_for(doc.lang));
    } catch (const PerplexityUndefined&) {
      f.s_ppl = default_perplexity();
    }
  } else {
    f.s_ppl = default_perplexity();
  }
  return f;
}

}  // namespace dcad

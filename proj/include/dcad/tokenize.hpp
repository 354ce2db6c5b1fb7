#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dcad/unicode.hpp"

namespace dcad {

enum class TokenizerMode {
  kSeparator,   // case-folded maximal runs of letters/marks/digits
  kCharacters,  // each non-whitespace character is a token
};

/// Scripts written without word separators tokenize per character.
inline TokenizerMode tokenizer_mode(std::string_view lang) {
  static constexpr std::array<std::string_view, 7> kCharScripts = {
      "Hani", "Hira", "Kana", "Khmr", "Laoo", "Mymr", "Thai"};
  auto pos = lang.find('_');
  if (pos == std::string_view::npos) return TokenizerMode::kSeparator;
  auto script = lang.substr(pos + 1);
  for (auto s : kCharScripts) {
    if (script == s) return TokenizerMode::kCharacters;
  }
  return TokenizerMode::kSeparator;
}

inline std::vector<std::u32string> tokenize(std::u32string_view text, TokenizerMode mode) {
  std::vector<std::u32string> tokens;
  if (mode == TokenizerMode::kCharacters) {
    for (char32_t cp : text) {
      if (!is_whitespace(cp)) tokens.emplace_back(1, fold_char(cp));
    }
    return tokens;
  }
  std::u32string current;
  for (char32_t cp : text) {
    if (is_word_char(cp)) {
      current.push_back(fold_char(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline std::vector<std::u32string> tokenize(std::string_view text, std::string_view lang) {
  return tokenize(to_u32(text), tokenizer_mode(lang));
}

}  // namespace dcad

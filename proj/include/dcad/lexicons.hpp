#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dcad/unicode.hpp"

namespace dcad {

using TokenSet = std::unordered_set<std::u32string>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace detail

/// One entry per line, `#` comments, entries trimmed and case-folded.
inline TokenSet load_wordlist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open word list: " + path);
  TokenSet set;
  std::string line;
  while (std::getline(in, line)) {
    auto entry = detail::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    set.insert(fold(to_u32(entry)));
  }
  if (set.empty()) {
    std::cerr << "warning: word list is empty: " << path << "\n";
  }
  return set;
}

/// A set of Unicode scalar values with binary-search membership.
class CharSet {
 public:
  CharSet() = default;
  explicit CharSet(std::vector<char32_t> chars) : chars_(std::move(chars)) {
    std::sort(chars_.begin(), chars_.end());
    chars_.erase(std::unique(chars_.begin(), chars_.end()), chars_.end());
  }

  bool contains(char32_t cp) const {
    return std::binary_search(chars_.begin(), chars_.end(), cp);
  }
  std::size_t size() const { return chars_.size(); }
  const std::vector<char32_t>& values() const { return chars_; }

 private:
  std::vector<char32_t> chars_;
};

/// Punctuation, symbols (emoji included), numbers, and separator/control
/// whitespace variants. U+0020 is excluded so that ordinary word separators
/// do not count as special.
inline const CharSet& default_special_chars() {
  static const CharSet set = [] {
    std::vector<char32_t> chars;
    for (char32_t cp = 0; cp <= 0x10FFFF; ++cp) {
      if (cp >= 0xD800 && cp <= 0xDFFF) continue;
      if (cp == U' ') continue;
      if (is_punct(cp) || is_symbol(cp) || is_number(cp) || is_whitespace(cp)) {
        chars.push_back(cp);
      }
    }
    return CharSet(std::move(chars));
  }();
  return set;
}

/// Override file: one character per line, or a U+XXXX escape. `#` comments.
inline CharSet load_special_chars(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open special-character file: " + path);
  std::vector<char32_t> chars;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto entry = detail::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    if (entry.size() > 2 && (entry.substr(0, 2) == "U+" || entry.substr(0, 2) == "u+")) {
      char32_t cp = 0;
      std::stringstream ss;
      ss << std::hex << std::string(entry.substr(2));
      std::uint32_t v = 0;
      if (!(ss >> v) || v > 0x10FFFF) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": bad codepoint escape: " + std::string(entry));
      }
      cp = static_cast<char32_t>(v);
      chars.push_back(cp);
    } else {
      auto cps = to_u32(entry);
      if (cps.size() != 1) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": expected one character or U+XXXX escape");
      }
      chars.push_back(cps[0]);
    }
  }
  return CharSet(std::move(chars));
}

/// Per-language stopword and flagged-word sets plus the special-character
/// set. Immutable after load; missing languages fall back to empty sets so
/// the corresponding ratio features read 0.
class Lexicons {
 public:
  Lexicons() : specials_(&default_special_chars()) {}

  void set_stopwords(const std::string& lang, TokenSet words) {
    stopwords_[lang] = std::move(words);
  }
  void set_flagged(const std::string& lang, TokenSet words) {
    flagged_[lang] = std::move(words);
  }
  void set_special_chars(CharSet set) {
    owned_specials_ = std::move(set);
    specials_ = &owned_specials_;
  }

  /// Loads every `<lang>.txt` in a directory as that language's list.
  void load_stopword_dir(const std::string& dir) { load_dir(dir, stopwords_); }
  void load_flagged_dir(const std::string& dir) { load_dir(dir, flagged_); }

  const TokenSet& stopwords(std::string_view lang) const {
    return lookup(stopwords_, lang);
  }
  const TokenSet& flagged(std::string_view lang) const {
    return lookup(flagged_, lang);
  }
  const CharSet& special_chars() const { return *specials_; }

 private:
  using LangMap = std::unordered_map<std::string, TokenSet>;

  static void load_dir(const std::string& dir, LangMap& target) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
      throw std::runtime_error("not a directory: " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      target[p.stem().string()] = load_wordlist(p.string());
    }
  }

  // Exact language code first, then the bare ISO 639-3 code, then empty.
  const TokenSet& lookup(const LangMap& map, std::string_view lang) const {
    if (auto it = map.find(std::string(lang)); it != map.end()) return it->second;
    if (auto pos = lang.find('_'); pos != std::string_view::npos) {
      if (auto it = map.find(std::string(lang.substr(0, pos))); it != map.end()) {
        return it->second;
      }
    }
    static const TokenSet empty;
    return empty;
  }

  LangMap stopwords_;
  LangMap flagged_;
  CharSet owned_specials_;
  const CharSet* specials_;
};

}  // namespace dcad

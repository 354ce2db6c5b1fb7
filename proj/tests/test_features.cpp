#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dcad/features.hpp"
#include "helpers.hpp"

using namespace dcad;
using testutil::TempDir;

TEST_CASE("separator tokenization folds case and strips punctuation", "[tokenize]") {
  auto t = tokenize("Hello, WORLD!", "eng_Latn");
  REQUIRE(t.size() == 2);
  CHECK(t[0] == U"hello");
  CHECK(t[1] == U"world");

  CHECK(tokenize("", "eng_Latn").empty());
  CHECK(tokenize("!!! ... $$$", "eng_Latn").empty());

  auto nums = tokenize("room 42b", "eng_Latn");
  REQUIRE(nums.size() == 2);
  CHECK(nums[0] == U"room");
  CHECK(nums[1] == U"42b");
}

TEST_CASE("separator-free scripts tokenize per character", "[tokenize]") {
  CHECK(tokenizer_mode("zho_Hani") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("jpn_Hira") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("tha_Thai") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("mya_Mymr") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("khm_Khmr") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("lao_Laoo") == TokenizerMode::kCharacters);
  CHECK(tokenizer_mode("eng_Latn") == TokenizerMode::kSeparator);
  CHECK(tokenizer_mode("rus_Cyrl") == TokenizerMode::kSeparator);
  CHECK(tokenizer_mode("und_Zzzz") == TokenizerMode::kSeparator);

  auto t = tokenize("中文 文本。", "zho_Hani");
  REQUIRE(t.size() == 5);  // four han chars + the ideographic period
  CHECK(t[0] == U"中");
  CHECK(t[4] == U"。");
}

TEST_CASE("tokenizer overrides take precedence over script inference", "[tokenize][features]") {
  FeatureConfig config;
  config.tokenizer_overrides["eng_Latn"] = TokenizerMode::kCharacters;
  CHECK(config.mode_for("eng_Latn") == TokenizerMode::kCharacters);
  CHECK(config.mode_for("fra_Latn") == TokenizerMode::kSeparator);
  CHECK(config.mode_for("zho_Hani") == TokenizerMode::kCharacters);
}

TEST_CASE("repetition ratio frozen examples", "[features]") {
  // "abcabcabc" 3-grams: abc×3 bca×2 cab×2, all 7 occurrences duplicated.
  CHECK(char_repetition_ratio("abcabcabc", 3) == 1.0);
  // [x y x y z] bigrams: xy×2 yx×1 yz×1 → 2 of 4 duplicated.
  const std::vector<std::u32string> words = {U"x", U"y", U"x", U"y", U"z"};
  CHECK(word_repetition_ratio(words, 2) == 0.5);
  // Shorter than k.
  CHECK(char_repetition_ratio("abc", 10) == 0.0);
  CHECK(word_repetition_ratio({U"one"}, 2) == 0.0);
  // All-distinct text has no duplicated grams.
  CHECK(char_repetition_ratio("abcdefghijkl", 3) == 0.0);
  CHECK_THROWS_AS(char_repetition_ratio("abc", 0), std::invalid_argument);
}

TEST_CASE("repetition ratio matches the naive oracle on random data", "[features]") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> alpha(0, 3);  // small alphabet forces collisions
  std::uniform_int_distribution<std::size_t> length(0, 60);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = length(rng);
    std::u32string text;
    std::vector<char32_t> chars;
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<char32_t>(U'a' + alpha(rng));
      text.push_back(c);
      chars.push_back(c);
    }
    for (std::size_t k : {1, 2, 3, 5}) {
      CHECK(char_repetition_ratio(std::u32string_view(text), k) ==
            testutil::oracle_rep_ratio(chars, k));
    }
  }
  // Word grams against the oracle, including repeated multi-char tokens.
  std::uniform_int_distribution<int> wpick(0, 2);
  for (int iter = 0; iter < 100; ++iter) {
    const std::vector<std::u32string> vocab = {U"aa", U"ab", U"b"};
    std::vector<std::u32string> tokens;
    const std::size_t n = length(rng) / 2;
    for (std::size_t i = 0; i < n; ++i) tokens.push_back(vocab[static_cast<std::size_t>(wpick(rng))]);
    CHECK(word_repetition_ratio(tokens, 2) == testutil::oracle_rep_ratio(tokens, 2));
  }
}

TEST_CASE("word gram keys cannot collide across token boundaries", "[features]") {
  // (ab, c) vs (a, bc): same concatenation, different grams.
  const std::vector<std::u32string> a = {U"ab", U"c", U"a", U"bc"};
  CHECK(word_repetition_ratio(a, 2) == 0.0);
}

TEST_CASE("special char ratio counts set members over all chars", "[features]") {
  const CharSet& s = default_special_chars();
  CHECK(special_char_ratio("ab!!", s) == 0.5);
  CHECK(special_char_ratio("", s) == 0.0);
  CHECK(special_char_ratio("word", s) == 0.0);
  CHECK(special_char_ratio("!?.,", s) == 1.0);
  // Spaces are not special by default; "a b" has zero specials.
  CHECK(special_char_ratio("a b", s) == 0.0);
}

TEST_CASE("lexicon ratio is hit fraction with empty-set guard", "[features]") {
  TokenSet stop = {U"the", U"of"};
  const std::vector<std::u32string> tokens = {U"the", U"house", U"of", U"stone"};
  CHECK(lexicon_ratio(tokens, stop) == 0.5);
  CHECK(lexicon_ratio({}, stop) == 0.0);
  CHECK(lexicon_ratio(tokens, TokenSet{}) == 0.0);
}

TEST_CASE("extract_features fills all eight slots with model-free defaults", "[features]") {
  Lexicons lex;
  lex.set_stopwords("eng_Latn", {U"the", U"of"});
  lex.set_flagged("eng_Latn", {U"junk"});
  FeatureResources res;
  res.lexicons = &lex;
  Document doc;
  doc.id = "d1";
  doc.lang = "eng_Latn";
  doc.text = "the house of junk stands!";
  auto f = extract_features(doc, res);
  CHECK(f.n_words == 5.0);
  CHECK(f.r_char_rep == 0.0);
  CHECK(f.r_word_rep == 0.0);
  CHECK(f.r_special == 1.0 / 25.0);
  CHECK(f.r_stop == 0.4);
  CHECK(f.r_flag == 0.2);
  CHECK(f.s_lid == 1.0);                   // no LID model loaded
  CHECK(f.s_ppl == default_perplexity());  // no LM loaded

  auto arr = f.as_array();
  const auto& names = feature_names();
  REQUIRE(arr.size() == names.size());
  CHECK(names[0] == "n_words");
  CHECK(names[7] == "s_ppl");
  CHECK(FeatureVector::from_array(arr).as_array() == arr);
}

TEST_CASE("feature ratios stay in [0,1] on arbitrary input", "[features]") {
  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> cp(1, 0x2FFF);
  std::uniform_int_distribution<std::size_t> length(0, 200);
  for (int iter = 0; iter < 100; ++iter) {
    std::u32string text;
    const std::size_t n = length(rng);
    for (std::size_t i = 0; i < n; ++i) {
      char32_t c = static_cast<char32_t>(cp(rng));
      if (c >= 0xD800 && c <= 0xDFFF) c = U'x';
      text.push_back(c);
    }
    Document doc;
    doc.id = "r";
    doc.lang = iter % 2 ? "eng_Latn" : "zho_Hani";
    doc.text = encode_utf8(text);
    auto f = extract_features(doc, res);
    CHECK(f.n_words >= 0.0);
    for (double r : {f.r_char_rep, f.r_word_rep, f.r_special, f.r_stop, f.r_flag}) {
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
    }
    CHECK(std::isfinite(f.s_ppl));
  }
}

TEST_CASE("empty text yields the all-zero ratio profile", "[features]") {
  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  Document doc;
  doc.id = "e";
  doc.lang = "eng_Latn";
  doc.text = "";
  auto f = extract_features(doc, res);
  CHECK(f.n_words == 0.0);
  CHECK(f.r_char_rep == 0.0);
  CHECK(f.r_word_rep == 0.0);
  CHECK(f.r_special == 0.0);
  CHECK(f.r_stop == 0.0);
  CHECK(f.r_flag == 0.0);
}

#include <catch2/catch_amalgamated.hpp>

#include "dcad/unicode.hpp"

using namespace dcad;

TEST_CASE("char classes cover the major categories", "[unicode]") {
  CHECK(is_letter(U'a'));
  CHECK(is_letter(U'Z'));
  CHECK(is_letter(U'é'));
  CHECK(is_letter(U'中'));
  CHECK(is_letter(U'я'));
  CHECK_FALSE(is_letter(U'3'));
  CHECK(is_number(U'0'));
  CHECK(is_number(U'9'));
  CHECK(is_number(U'Ⅷ'));  // Roman numeral, category Nl
  CHECK(is_punct(U'!'));
  CHECK(is_punct(U','));
  CHECK(is_punct(U'。'));
  CHECK(is_symbol(U'$'));
  CHECK(is_symbol(U'+'));
  CHECK(is_separator(U' '));
  CHECK(is_separator(U'　'));
  CHECK(is_mark(U'́'));  // combining acute
}

TEST_CASE("word chars are letters, marks, and numbers", "[unicode]") {
  CHECK(is_word_char(U'a'));
  CHECK(is_word_char(U'7'));
  CHECK(is_word_char(U'́'));
  CHECK_FALSE(is_word_char(U' '));
  CHECK_FALSE(is_word_char(U'!'));
  CHECK_FALSE(is_word_char(U'$'));
}

TEST_CASE("whitespace includes controls, NEL, and separators", "[unicode]") {
  for (char32_t cp : {U' ', U'\t', U'\n', U'\r', U'\v', U'\f'}) CHECK(is_whitespace(cp));
  CHECK(is_whitespace(static_cast<char32_t>(0x85)));    // NEL
  CHECK(is_whitespace(static_cast<char32_t>(0x3000)));  // ideographic space
  CHECK(is_whitespace(static_cast<char32_t>(0x2028)));  // line separator
  CHECK_FALSE(is_whitespace(U'a'));
  CHECK_FALSE(is_whitespace(U'_'));
}

TEST_CASE("case folding maps upper to lower", "[unicode]") {
  CHECK(fold_char(U'A') == U'a');
  CHECK(fold_char(U'Z') == U'z');
  CHECK(fold_char(U'À') == U'à');
  CHECK(fold_char(U'Σ') == U'σ');
  CHECK(fold_char(U'Я') == U'я');
  CHECK(fold_char(U'a') == U'a');   // already lower
  CHECK(fold_char(U'中') == U'中');  // no case
  CHECK(fold(U"HeLLo") == U"hello");
}

TEST_CASE("utf8 round trips", "[unicode]") {
  const std::string samples[] = {"hello", "héllo wörld", "中文文本", "мир", "🙂 ok",
                                 "mixed 中 я é 9"};
  for (const auto& s : samples) {
    auto dec = decode_utf8(s);
    CHECK(dec.invalid_sequences == 0);
    std::u32string u(dec.codepoints.begin(), dec.codepoints.end());
    CHECK(encode_utf8(u) == s);
  }
}

TEST_CASE("invalid utf8 is repaired with replacement chars", "[unicode]") {
  std::string bad = "ab";
  bad.push_back(static_cast<char>(0xFF));
  bad += "cd";
  auto dec = decode_utf8(bad);
  CHECK(dec.invalid_sequences > 0);
  REQUIRE(dec.codepoints.size() == 5);
  CHECK(dec.codepoints[2] == kReplacementChar);

  // Truncated multi-byte sequence at end of input.
  std::string trunc = "x";
  trunc.push_back(static_cast<char>(0xE4));  // expects two continuation bytes
  auto dec2 = decode_utf8(trunc);
  CHECK(dec2.invalid_sequences > 0);
  REQUIRE(!dec2.codepoints.empty());
  CHECK(dec2.codepoints.back() == kReplacementChar);

  // Overlong encoding of '/' must not decode to '/'.
  std::string overlong;
  overlong.push_back(static_cast<char>(0xC0));
  overlong.push_back(static_cast<char>(0xAF));
  auto dec3 = decode_utf8(overlong);
  CHECK(dec3.invalid_sequences > 0);
  for (char32_t cp : dec3.codepoints) CHECK(cp != U'/');
}

TEST_CASE("decode handles all planes", "[unicode]") {
  std::u32string s = {0x24, 0xA2, 0x20AC, 0x10348, 0x1F600};
  const std::string bytes = encode_utf8(s);
  CHECK(bytes.size() == 1 + 2 + 3 + 4 + 4);
  CHECK(to_u32(bytes) == s);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dcad/ngram_lm.hpp"
#include "helpers.hpp"

using namespace dcad;
using testutil::TempDir;

namespace {
LanguageModel train(std::vector<std::string> corpus, int order, const char* lang = "eng_Latn") {
  return train_lm(corpus, order, lang, 1);
}
}  // namespace

TEST_CASE("unigram model on 'a b c d' has perplexity exactly 6", "[ngram_lm]") {
  // T = 4 tokens + </s> = 5; every scored symbol has p = 1/(T+1) = 1/6;
  // five scored positions → ppl = 6.
  auto model = train({"a b c d"}, 1);
  CHECK(perplexity("a b c d", model) == Catch::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("unigram probabilities follow c/(T+1) with unk mass", "[ngram_lm]") {
  // Corpus "a b": T = 3, p(a) = p(b) = p(</s>) = p(<unk>) = 1/4.
  auto model = train({"a b"}, 1);
  const double quarter = std::log10(0.25);
  REQUIRE(model.find({U"a"}));
  CHECK(model.find({U"a"})->logprob == Catch::Approx(quarter).epsilon(1e-12));
  CHECK(model.find({U"b"})->logprob == Catch::Approx(quarter).epsilon(1e-12));
  CHECK(model.find({kSentEnd})->logprob == Catch::Approx(quarter).epsilon(1e-12));
  CHECK(model.find({kUnkToken})->logprob == Catch::Approx(quarter).epsilon(1e-12));
  // Order-1 models never pad with <s>, so it has no unigram entry at all.
  CHECK(model.find({kSentStart}) == nullptr);

  // With higher orders the <s> padding enters the table at the -99 floor.
  auto bigram = train({"a b"}, 2);
  REQUIRE(bigram.find({kSentStart}) != nullptr);
  CHECK(bigram.find({kSentStart})->logprob == -99.0);

  // Non-<s> unigram probabilities sum to 1.
  double sum = 0.0;
  for (const auto& [gram, entry] : model.tables[0]) {
    if (gram[0] == kSentStart) continue;
    sum += std::pow(10.0, entry.logprob);
  }
  CHECK(sum == Catch::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("uniform 100-symbol fixture scores perplexity 100", "[ngram_lm]") {
  // 98 distinct tokens in one sentence: T = 99, each scored symbol 1/100.
  std::string sentence;
  for (int i = 0; i < 98; ++i) {
    if (i) sentence += ' ';
    sentence += "w" + std::to_string(i);
  }
  auto model = train({sentence}, 1);
  CHECK(perplexity(sentence, model) == Catch::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("bigram MLE with hand-computed conditionals", "[ngram_lm]") {
  // Corpus {"a b", "a c"}: p(a|<s>)=1, p(b|a)=1/2, p(</s>|b)=1.
  auto model = train({"a b", "a c"}, 2);
  CHECK(perplexity("a b", model) ==
        Catch::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-12));

  // OOV tokens back off to 0.4 * unigram: p(<unk>) = 1/7, p(</s>) = 2/7.
  const double expected_log =
      0.0 + std::log10(0.4 / 7.0) + std::log10(0.4 * 2.0 / 7.0);
  const double expected = std::pow(10.0, -expected_log / 3.0);
  CHECK(perplexity("a d", model) == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("longer contexts fall back one order at a time", "[ngram_lm]") {
  // Two sentences of 3 tokens each: T = (3+1)*2 = 8, p(b) = count(b)/(T+1) = 3/9.
  auto model = train({"a b a", "b a b"}, 3);
  REQUIRE(model.order == 3);
  REQUIRE(model.find({U"b"}));
  CHECK(model.find({U"b"})->logprob == Catch::Approx(std::log10(3.0 / 9.0)).epsilon(1e-12));

  // Scoring the single OOV text "c": both positions miss their trigram and
  // bigram lookups, so each pays two 0.4 penalties on top of the unigram.
  // p1 = 0.4^2 * p(<unk>) = 0.16/9, p2 = 0.4^2 * p(</s>) = 0.16*2/9.
  const double log_sum = std::log10(0.16 / 9.0) + std::log10(0.16 * 2.0 / 9.0);
  CHECK(perplexity("c", model) ==
        Catch::Approx(std::pow(10.0, -log_sum / 2.0)).epsilon(1e-12));
}

TEST_CASE("training rejects degenerate inputs", "[ngram_lm]") {
  CHECK_THROWS(train({}, 1));
  CHECK_THROWS(train({"", "   "}, 1));  // no tokens anywhere
  CHECK_THROWS(train_lm(std::vector<std::string>{"a"}, 0, "eng_Latn", 1));
}

TEST_CASE("empty text has undefined perplexity", "[ngram_lm]") {
  auto model = train({"a b c"}, 1);
  CHECK_THROWS_AS(perplexity("", model), PerplexityUndefined);
  CHECK_THROWS_AS(perplexity("!!!", model), PerplexityUndefined);
  CHECK(default_perplexity() == 500.0);
}

TEST_CASE("arpa save then load then save is byte-identical", "[ngram_lm]") {
  TempDir tmp;
  std::mt19937_64 rng(17);
  std::vector<std::string> corpus;
  for (int i = 0; i < 50; ++i) corpus.push_back(testutil::word_soup(rng, 12));
  for (int order : {1, 2, 3}) {
    auto model = train(corpus, order);
    const auto p1 = tmp.file("m" + std::to_string(order) + "_a.arpa");
    const auto p2 = tmp.file("m" + std::to_string(order) + "_b.arpa");
    save_arpa(model, p1);
    auto loaded = load_arpa(p1);
    save_arpa(loaded, p2);
    const auto bytes1 = testutil::read_file(p1);
    CHECK(bytes1 == testutil::read_file(p2));
    CHECK(!bytes1.empty());

    // Loaded model scores identically.
    for (const auto& text : {"the water", "stone bird stone", "zzz unseen"}) {
      CHECK(perplexity(text, model) == perplexity(text, loaded));
    }
  }
}

TEST_CASE("arpa structure has headers, sections, and terminator", "[ngram_lm]") {
  TempDir tmp;
  auto model = train({"a b", "b a"}, 2);
  const auto path = tmp.file("m.arpa");
  save_arpa(model, path);
  auto lines = testutil::read_lines(path);
  REQUIRE(lines.size() > 6);
  CHECK(lines[0] == "\\data\\");
  CHECK(lines[1].rfind("ngram 1=", 0) == 0);
  CHECK(lines[2].rfind("ngram 2=", 0) == 0);
  CHECK(lines[3].empty());
  CHECK(lines[4] == "\\1-grams:");
  CHECK(lines.back() == "\\end\\");
  // Unigram lines in a model with higher orders carry a backoff column.
  const auto tabs = static_cast<std::size_t>(
      std::count(lines[5].begin(), lines[5].end(), '\t'));
  CHECK(tabs == 2);
}

TEST_CASE("arpa load reports positioned errors", "[ngram_lm]") {
  TempDir tmp;
  const auto path = tmp.file("bad.arpa");
  testutil::write_lines(path, {"\\data\\", "ngram 1=2", "", "\\1-grams:",
                               "-0.5\ta", "-0.5\tb", ""});  // no end marker
  try {
    load_arpa(path);
    FAIL("expected error");
  } catch (const std::exception& e) {
    const std::string what = e.what();
    CHECK(what.find("bad.arpa") != std::string::npos);
    CHECK(what.find("\\end\\") != std::string::npos);
  }

  const auto path2 = tmp.file("bad2.arpa");
  testutil::write_lines(path2, {"nonsense"});
  CHECK_THROWS(load_arpa(path2));
}

TEST_CASE("lm store loads per-language models from a directory", "[ngram_lm]") {
  TempDir tmp;
  auto dir = tmp.path() / "lms";
  std::filesystem::create_directories(dir);
  save_arpa(train({"a b c"}, 1), (dir / "eng_Latn.arpa").string());
  save_arpa(train({"x y z"}, 1), (dir / "fra_Latn.arpa").string());
  LmStore store;
  store.load_dir(dir.string());
  CHECK(store.size() == 2);
  CHECK(store.find("eng_Latn") != nullptr);
  CHECK(store.find("fra_Latn") != nullptr);
  CHECK(store.find("deu_Latn") == nullptr);  // exact-match only
  CHECK(store.find("eng") == nullptr);
}

TEST_CASE("perplexity is finite and positive on arbitrary text", "[ngram_lm]") {
  std::mt19937_64 rng(23);
  std::vector<std::string> corpus;
  for (int i = 0; i < 30; ++i) corpus.push_back(testutil::word_soup(rng, 10));
  for (int order : {1, 2, 3}) {
    auto model = train(corpus, order);
    for (int i = 0; i < 30; ++i) {
      const double p = perplexity(testutil::word_soup(rng, 8) + " qqqq zz", model);
      CHECK(std::isfinite(p));
      CHECK(p > 0.0);
    }
  }
}

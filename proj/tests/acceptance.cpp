#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcad/cli.hpp"
#include "helpers.hpp"

using namespace dcad;
using testutil::TempDir;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

std::vector<std::string> fluent_lines(std::size_t n, std::uint64_t seed,
                                      const std::string& lang = "eng_Latn") {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(30, 80);
  std::vector<std::string> lines;
  lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lines.push_back(testutil::json_doc("doc" + std::to_string(i), lang,
                                       testutil::word_soup(rng, len(rng))));
  }
  return lines;
}

std::size_t count_noise(const std::vector<std::string>& lines) {
  std::size_t n = 0;
  for (const auto& line : lines) {
    if (line.find("\"id\":\"noise") != std::string::npos) ++n;
  }
  return n;
}

/// Runs the CLI entry point with stdout/stderr swallowed.
int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dcad");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream sink;
  auto* old_out = std::cout.rdbuf(sink.rdbuf());
  auto* old_err = std::cerr.rdbuf(sink.rdbuf());
  const int code = cli::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return code;
}

// 1. Removal-rate reproduction: 10,000 homogeneous documents at
//    contamination 0.0769 lose 7.69% ± 0.1%, single-threaded, <= 60 s.
Outcome criterion_removal_rate() {
  TempDir tmp;
  const auto input = tmp.file("in.jsonl");
  testutil::write_lines(input, fluent_lines(10000, 1001));

  RunConfig run;
  run.inputs = {input};
  run.out_dir = tmp.file("out");
  run.threads = 1;
  run.config_hash = "acceptance";
  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  DetectorConfig detector;
  detector.contamination = 0.0769;

  const auto t0 = std::chrono::steady_clock::now();
  const CleanReport report = clean_corpus(run, res, detector);
  const double elapsed = seconds_since(t0);

  const double pct = 100.0 * report.removal_fraction();
  Outcome o;
  o.ok = report.docs_total() == 10000 && std::abs(pct - 7.69) <= 0.1 &&
         elapsed <= 60.0 && !report.has_failures();
  o.detail = "removed " + fmt(pct, 3) + "% of " + std::to_string(report.docs_total()) +
             " docs in " + fmt(elapsed, 1) + "s (target 7.69% +/- 0.1, limit 60s)";
  return o;
}

// 2. c_factor matches the explicit harmonic sum to 1e-12 for n <= 10,000 and
//    the Eq. 4 identity phi = 0.5 at mean path c(psi) holds exactly, < 1 s.
Outcome criterion_eq45() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  long double harmonic = 0.0L;  // running H(n-1)
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    long double expected = 0.0L;
    if (n == 2) {
      expected = 1.0L;
    } else if (n > 2) {
      const long double nn = static_cast<long double>(n);
      expected = 2.0L * harmonic - 2.0L * (nn - 1.0L) / nn;
    }
    worst = std::max(worst,
                     std::abs(static_cast<double>(c_factor(n) - expected)));
    if (n >= 1) harmonic += 1.0L / static_cast<long double>(n);
  }

  DetectorModel model;
  model.algorithm = Algorithm::kIForest;
  model.c_psi = c_factor(256);
  IsolationTree root_only;
  root_only.nodes.push_back({-1, 0.0, 0, 0, 256, c_factor(256)});
  model.trees.push_back(root_only);
  const double x[1] = {0.0};
  const double phi = anomaly_score(std::span<const double>(x, 1), model);
  const double elapsed = seconds_since(t0);

  Outcome o;
  o.ok = worst <= 1e-12 && phi == 0.5 && elapsed < 1.0;
  o.detail = "max |c(n) - harmonic oracle| = " + fmt(worst * 1e12, 3) +
             "e-12, phi(c(psi)) = " + fmt(phi, 6) + ", " + fmt(elapsed, 2) +
             "s (limit 1s)";
  return o;
}

// 3. Standardizing a 50,000 x 8 random matrix with its own finalized stats
//    yields per-feature mean 0 +/- 1e-9 and population std 1 +/- 1e-9, < 5 s.
Outcome criterion_moments() {
  std::mt19937_64 rng(33);
  std::normal_distribution<double> normal(3.0, 2.5);
  std::uniform_real_distribution<double> uniform(-10.0, 250.0);
  const std::size_t n = 50000;
  std::vector<std::array<double, kFeatureCount>> rows(n);
  for (auto& row : rows) {
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      row[j] = (j % 2 == 0) ? normal(rng) : uniform(rng);
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  MomentAccumulator acc;
  for (const auto& row : rows) accumulate(acc, row);
  const StandardizationStats stats = finalize(acc);

  std::array<long double, kFeatureCount> sum{};
  std::array<long double, kFeatureCount> sumsq{};
  for (const auto& row : rows) {
    const auto z = standardize(row, stats);
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      sum[j] += z[j];
      sumsq[j] += static_cast<long double>(z[j]) * z[j];
    }
  }
  double worst_mean = 0.0;
  double worst_std = 0.0;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    const double mean = static_cast<double>(sum[j] / n);
    const double var = static_cast<double>(sumsq[j] / n) - mean * mean;
    worst_mean = std::max(worst_mean, std::abs(mean));
    worst_std = std::max(worst_std, std::abs(std::sqrt(var) - 1.0));
  }
  const double elapsed = seconds_since(t0);

  Outcome o;
  o.ok = worst_mean <= 1e-9 && worst_std <= 1e-9 && elapsed < 5.0;
  o.detail = "max |mean| = " + fmt(worst_mean * 1e12, 3) + "e-12, max |std - 1| = " +
             fmt(worst_std * 1e12, 3) + "e-12, " + fmt(elapsed, 2) + "s (limit 5s)";
  return o;
}

// 4. Isolation forest with defaults recovers >= 90% of 8-sigma outliers
//    planted at a 5% rate in N=2000, for each of 5 seeds, < 10 s.
Outcome criterion_planted_outliers() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t worst_recovered = 100;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix X(2000, kFeatureCount);
    for (std::size_t i = 0; i < X.rows; ++i) {
      for (std::size_t j = 0; j < X.cols; ++j) X.at(i, j) = normal(rng);
    }
    std::vector<std::size_t> order(X.rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> planted(X.rows, false);
    std::uniform_int_distribution<int> sign(0, 1);
    for (std::size_t p = 0; p < 100; ++p) {
      const std::size_t i = order[p];
      planted[i] = true;
      for (std::size_t j = 0; j < X.cols; ++j) {
        X.at(i, j) = sign(rng) ? 8.0 : -8.0;
      }
    }

    DetectorConfig config;
    config.contamination = 0.05;
    config.seed = seed;
    const auto verdicts = detect(X, config, 2);
    std::size_t recovered = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (planted[i] && verdicts[i].label < 0) ++recovered;
    }
    worst_recovered = std::min(worst_recovered, recovered);
  }
  const double elapsed = seconds_since(t0);

  Outcome o;
  o.ok = worst_recovered >= 90 && elapsed < 10.0;
  o.detail = "worst seed recovered " + std::to_string(worst_recovered) +
             "/100 planted outliers, " + fmt(elapsed, 2) + "s (limit 10s)";
  return o;
}

// 5. LOF matches a brute-force oracle within 1e-9 on <= 100 points, and
//    path_length matches an independent recursive traversal on 200 trees.
Outcome criterion_detector_oracles() {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  Matrix P(90, 4);
  for (std::size_t i = 0; i < P.rows; ++i) {
    for (std::size_t j = 0; j < P.cols; ++j) P.at(i, j) = uniform(rng);
  }
  const int k = 15;
  const DetectorModel lof = fit_lof(P, k);
  const std::vector<double> got = score_matrix(P, lof);
  const std::vector<double> want = testutil::oracle_lof(P, k);
  double worst_lof = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    worst_lof = std::max(worst_lof, std::abs(got[i] - want[i]));
  }

  Matrix F(300, 5);
  for (std::size_t i = 0; i < F.rows; ++i) {
    for (std::size_t j = 0; j < F.cols; ++j) F.at(i, j) = uniform(rng);
  }
  const DetectorModel forest = fit_iforest(F, 200, 64, 77);
  double worst_path = 0.0;
  for (int q = 0; q < 40; ++q) {
    std::array<double, 5> x;
    for (auto& v : x) v = uniform(rng) * 2.0 - 0.5;
    for (const auto& tree : forest.trees) {
      const double a = path_length(std::span<const double>(x), tree);
      const double b = testutil::oracle_path_length(std::span<const double>(x), tree);
      worst_path = std::max(worst_path, std::abs(a - b));
    }
  }

  Outcome o;
  o.ok = worst_lof <= 1e-9 && worst_path <= 1e-9;
  o.detail = "max |LOF - oracle| = " + fmt(worst_lof * 1e12, 3) +
             "e-12 (90 pts), max |path - oracle| = " + fmt(worst_path * 1e12, 3) +
             "e-12 (200 trees x 40 queries)";
  return o;
}

// 6. Noise separation: 1000 fluent + 100 noise docs at contamination 0.09;
//    anomaly recall >= 0.8 on the planted noise and above the loose
//    threshold baseline's recall, < 30 s.
Outcome criterion_noise_separation() {
  TempDir tmp;
  auto corpus = testutil::make_mixed_corpus(1000, 100, 3003);
  const auto input = tmp.file("in.jsonl");
  testutil::write_lines(input, corpus.lines);

  std::filesystem::create_directories(tmp.file("stop"));
  testutil::write_lines(tmp.file("stop/eng_Latn.txt"),
                        {"the", "of", "and", "to", "in", "that", "was", "his"});
  Lexicons lex;
  lex.load_stopword_dir(tmp.file("stop"));

  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<std::size_t> len(30, 80);
  std::vector<std::string> lm_corpus;
  for (int i = 0; i < 3000; ++i) lm_corpus.push_back(testutil::word_soup(rng, len(rng)));
  LmStore lms;
  lms.add("eng_Latn", train_lm(lm_corpus, 3, "eng_Latn", 1));

  std::map<std::string, std::vector<std::string>> lid_samples;
  for (int i = 0; i < 200; ++i) {
    lid_samples["eng_Latn"].push_back(testutil::word_soup(rng, 20));
    lid_samples["rus_Cyrl"].push_back(
        "и не на что вода земля огонь ветер птица дорога");
  }
  const LidModel lid = train_lid(lid_samples, 3, 1.0);

  FeatureResources res;
  res.lexicons = &lex;
  res.lid = &lid;
  res.lms = &lms;

  const auto t0 = std::chrono::steady_clock::now();
  RunConfig run;
  run.inputs = {input};
  run.out_dir = tmp.file("anomaly_out");
  run.threads = 2;
  run.config_hash = "acceptance";
  DetectorConfig detector;
  detector.contamination = 0.09;
  const CleanReport report = clean_corpus(run, res, detector);
  const double anomaly_recall =
      static_cast<double>(count_noise(testutil::read_lines(
          tmp.file("anomaly_out/eng_Latn.remove.jsonl")))) /
      100.0;

  RunConfig base_run = run;
  base_run.out_dir = tmp.file("baseline_out");
  ThresholdRuleSet loose;
  loose.bounds[0].min = 1.0;   // n_words >= 1
  loose.bounds[1].max = 0.99;  // r_char_rep <= 0.99
  loose.bounds[2].max = 0.99;  // r_word_rep <= 0.99
  loose.bounds[3].max = 0.95;  // r_special <= 0.95
  threshold_clean(base_run, res, loose);
  std::error_code ec;
  std::vector<std::string> base_removed;
  if (std::filesystem::exists(tmp.file("baseline_out/eng_Latn.remove.jsonl"), ec)) {
    base_removed = testutil::read_lines(tmp.file("baseline_out/eng_Latn.remove.jsonl"));
  }
  const double baseline_recall = static_cast<double>(count_noise(base_removed)) / 100.0;
  const double elapsed = seconds_since(t0);

  Outcome o;
  o.ok = anomaly_recall >= 0.8 && anomaly_recall > baseline_recall &&
         elapsed < 30.0 && !report.has_failures();
  o.detail = "anomaly recall " + fmt(anomaly_recall, 2) + " vs loose-baseline recall " +
             fmt(baseline_recall, 2) + ", " + fmt(elapsed, 1) + "s (limit 30s)";
  return o;
}

// 7. Ablation equivalence: --ablate-feature i labels equal detection over
//    pre-projected 7-column vectors with the same seed, for every i in 1..8.
Outcome criterion_ablation() {
  TempDir tmp;
  auto corpus = testutil::make_mixed_corpus(360, 40, 4004);
  const auto input = tmp.file("in.jsonl");
  testutil::write_lines(input, corpus.lines);

  // Reference features exactly as the pipeline computes them.
  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  std::vector<std::array<double, kFeatureCount>> raw;
  {
    DocumentReader reader(input, OnError::kAbort);
    while (auto doc = reader.next()) {
      raw.push_back(extract_features(*doc, res).as_array());
    }
  }
  MomentAccumulator acc;
  for (const auto& row : raw) accumulate(acc, row);
  const StandardizationStats stats = finalize(acc);

  int equal_count = 0;
  for (int i = 1; i <= static_cast<int>(kFeatureCount); ++i) {
    const auto out_dir = tmp.file("out" + std::to_string(i));
    const int code =
        run_cli({"scatter", "--input", input, "--out", out_dir, "--ablate-feature",
                 std::to_string(i), "--seed", "42", "--threads", "1"});
    if (code != 0) continue;
    auto lines = testutil::read_lines(out_dir + "/scatter.csv");
    if (lines.size() != raw.size() + 1) continue;
    std::vector<int> cli_labels;
    for (std::size_t r = 1; r < lines.size(); ++r) {
      cli_labels.push_back(std::stoi(lines[r].substr(lines[r].rfind(',') + 1)));
    }

    Matrix projected(raw.size(), kFeatureCount - 1);
    for (std::size_t r = 0; r < raw.size(); ++r) {
      const auto z = standardize(raw[r], stats);
      std::size_t c = 0;
      for (std::size_t j = 0; j < kFeatureCount; ++j) {
        if (j != static_cast<std::size_t>(i - 1)) projected.at(r, c++) = z[j];
      }
    }
    DetectorConfig config;
    config.seed = 42;
    const auto verdicts = detect(projected, config, 1);
    bool same = true;
    for (std::size_t r = 0; r < verdicts.size(); ++r) {
      same = same && verdicts[r].label == cli_labels[r];
    }
    if (same) ++equal_count;
  }

  Outcome o;
  o.ok = equal_count == static_cast<int>(kFeatureCount);
  o.detail = std::to_string(equal_count) + "/8 ablations match pre-projected labels";
  return o;
}

// 8. Cost overhead: full anomaly pipeline <= 2.0x the feature+threshold
//    baseline on a 100,000-document corpus, same worker count.
Outcome criterion_cost_overhead() {
  TempDir tmp;
  const auto input = tmp.file("in.jsonl");
  {
    std::mt19937_64 rng(8008);
    std::uniform_int_distribution<std::size_t> len(20, 50);
    std::ofstream out(input, std::ios::binary);
    for (std::size_t i = 0; i < 100000; ++i) {
      out << testutil::json_doc("doc" + std::to_string(i), "eng_Latn",
                                testutil::word_soup(rng, len(rng)))
          << '\n';
    }
  }
  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  RunConfig run;
  run.inputs = {input};
  run.out_dir = tmp.file("out");
  run.threads = 2;
  run.config_hash = "acceptance";
  DetectorConfig detector;
  ThresholdRuleSet loose;
  loose.bounds[0].min = 1.0;

  const BenchResult r = benchmark(run, res, detector, loose);
  const double ratio =
      r.baseline_seconds > 0.0 ? r.anomaly_seconds / r.baseline_seconds : 999.0;

  Outcome o;
  o.ok = r.docs == 100000 && ratio <= 2.0;
  o.detail = "anomaly " + fmt(r.anomaly_seconds, 2) + "s vs baseline " +
             fmt(r.baseline_seconds, 2) + "s on " + std::to_string(r.docs) +
             " docs = " + fmt(ratio, 3) + "x (limit 2.0x)";
  return o;
}

// 9. Format round trips: ARPA save/load/save byte-identical; partition with
//    annotate off is a byte-identical pass-through; TOTAL row adds up.
Outcome criterion_round_trips() {
  TempDir tmp;
  std::mt19937_64 rng(9009);
  std::vector<std::string> sentences;
  for (int i = 0; i < 200; ++i) sentences.push_back(testutil::word_soup(rng, 12));
  const LanguageModel model = train_lm(sentences, 3, "eng_Latn", 1);
  const auto arpa1 = tmp.file("m1.arpa");
  const auto arpa2 = tmp.file("m2.arpa");
  save_arpa(model, arpa1);
  save_arpa(load_arpa(arpa1), arpa2);
  const bool arpa_ok = testutil::read_file(arpa1) == testutil::read_file(arpa2);

  std::vector<std::string> lines;
  auto eng = testutil::make_mixed_corpus(180, 18, 91, "eng_Latn");
  auto deu = testutil::make_mixed_corpus(140, 14, 92, "deu_Latn");
  auto fra = testutil::make_mixed_corpus(110, 11, 93, "fra_Latn");
  for (auto* part : {&eng, &deu, &fra}) {
    lines.insert(lines.end(), part->lines.begin(), part->lines.end());
  }
  const auto input = tmp.file("in.jsonl");
  testutil::write_lines(input, lines);

  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  RunConfig run;
  run.inputs = {input};
  run.out_dir = tmp.file("out");
  run.threads = 2;
  run.annotate = false;
  run.config_hash = "acceptance";
  DetectorConfig detector;
  clean_corpus(run, res, detector);

  std::vector<std::string> emitted;
  for (const auto& lang : {"eng_Latn", "deu_Latn", "fra_Latn"}) {
    for (const auto& kind : {".keep.jsonl", ".remove.jsonl"}) {
      const auto path = tmp.file(std::string("out/") + lang + kind);
      if (std::filesystem::exists(path)) {
        auto part = testutil::read_lines(path);
        emitted.insert(emitted.end(), part.begin(), part.end());
      }
    }
  }
  auto sorted_in = lines;
  auto sorted_out = emitted;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(sorted_out.begin(), sorted_out.end());
  const bool passthrough_ok = sorted_in == sorted_out;

  bool total_ok = false;
  {
    auto report_lines = testutil::read_lines(tmp.file("out/report.tsv"));
    std::vector<std::vector<std::string>> rows;
    for (const auto& line : report_lines) {
      if (line.empty() || line[0] == '#' || line.rfind("lang\t", 0) == 0) continue;
      std::vector<std::string> cells;
      std::size_t start = 0;
      while (true) {
        auto tab = line.find('\t', start);
        cells.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      rows.push_back(std::move(cells));
    }
    if (rows.size() == 4 && rows.back()[0] == "TOTAL") {
      total_ok = true;
      for (std::size_t col = 1; col <= 9; ++col) {
        std::uint64_t sum = 0;
        for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
          sum += std::stoull(rows[r][col]);
        }
        total_ok = total_ok && sum == std::stoull(rows.back()[col]);
      }
    }
  }

  Outcome o;
  o.ok = arpa_ok && passthrough_ok && total_ok;
  o.detail = std::string("arpa round-trip ") + (arpa_ok ? "identical" : "DIFFERS") +
             ", partition pass-through " + (passthrough_ok ? "identical" : "DIFFERS") +
             ", TOTAL additivity " + (total_ok ? "exact" : "BROKEN");
  return o;
}

// 10. Determinism: identical inputs and seeds give byte-identical keep,
//     remove, and report files across two full runs.
Outcome criterion_determinism() {
  TempDir tmp;
  std::vector<std::string> lines;
  auto eng = testutil::make_mixed_corpus(150, 15, 111, "eng_Latn");
  auto deu = testutil::make_mixed_corpus(120, 12, 222, "deu_Latn");
  auto fra = testutil::make_mixed_corpus(100, 10, 333, "fra_Latn");
  for (auto* part : {&eng, &deu, &fra}) {
    lines.insert(lines.end(), part->lines.begin(), part->lines.end());
  }
  const auto input = tmp.file("in.jsonl");
  testutil::write_lines(input, lines);

  Lexicons lex;
  FeatureResources res;
  res.lexicons = &lex;
  auto run_once = [&](const std::string& dir) {
    RunConfig run;
    run.inputs = {input};
    run.out_dir = tmp.file(dir);
    run.threads = 4;
    run.annotate = true;
    run.config_hash = "acceptance";
    DetectorConfig detector;
    detector.seed = 7;
    clean_corpus(run, res, detector);
  };
  run_once("a");
  run_once("b");

  bool identical = true;
  std::size_t compared = 0;
  for (const auto& lang : {"eng_Latn", "deu_Latn", "fra_Latn"}) {
    for (const auto& kind : {".keep.jsonl", ".remove.jsonl"}) {
      const auto pa = tmp.file(std::string("a/") + lang + kind);
      const auto pb = tmp.file(std::string("b/") + lang + kind);
      if (std::filesystem::exists(pa) != std::filesystem::exists(pb)) {
        identical = false;
        continue;
      }
      if (!std::filesystem::exists(pa)) continue;
      ++compared;
      identical = identical && testutil::read_file(pa) == testutil::read_file(pb);
    }
  }
  identical = identical &&
              testutil::read_file(tmp.file("a/report.tsv")) ==
                  testutil::read_file(tmp.file("b/report.tsv"));

  Outcome o;
  o.ok = identical && compared >= 6;
  o.detail = "two threaded runs compared over " + std::to_string(compared) +
             " partition files + report: " + (identical ? "byte-identical" : "DIFFER");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"removal-rate reproduction", criterion_removal_rate},
      {"Eq. 4/5 arithmetic", criterion_eq45},
      {"Eq. 2 standardization moments", criterion_moments},
      {"planted-outlier recovery", criterion_planted_outliers},
      {"detector oracles (LOF, path length)", criterion_detector_oracles},
      {"noise separation vs loose baseline", criterion_noise_separation},
      {"ablation equivalence", criterion_ablation},
      {"cost-overhead bound", criterion_cost_overhead},
      {"format round trips", criterion_round_trips},
      {"determinism", criterion_determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::printf("[%2d] %s  %s — %s\n", index, o.ok ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of 10 acceptance criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 acceptance criteria passed\n");
  return 0;
}

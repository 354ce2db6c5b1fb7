#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcad/corpus_io.hpp"
#include "dcad/features.hpp"
#include "dcad/lang_id.hpp"
#include "dcad/lexicons.hpp"
#include "dcad/ngram_lm.hpp"
#include "dcad/pipeline.hpp"

namespace dcad::cli {

inline constexpr const char* kVersion = "1.0.0";

struct ResourcePaths {
  std::string stopwords_dir;
  std::string flagged_dir;
  std::string specials_path;
  std::string lid_path;
  std::string lm_dir;
};

struct LoadedResources {
  Lexicons lexicons;
  std::optional<LidModel> lid;
  LmStore lms;

  FeatureResources view() const {
    FeatureResources res;
    res.lexicons = &lexicons;
    res.lid = lid ? &*lid : nullptr;
    res.lms = lms.size() > 0 ? &lms : nullptr;
    return res;
  }
};

inline LoadedResources load_resources(const ResourcePaths& paths) {
  LoadedResources res;
  if (!paths.stopwords_dir.empty()) res.lexicons.load_stopword_dir(paths.stopwords_dir);
  if (!paths.flagged_dir.empty()) res.lexicons.load_flagged_dir(paths.flagged_dir);
  if (!paths.specials_path.empty()) {
    res.lexicons.set_special_chars(load_special_chars(paths.specials_path));
  }
  if (!paths.lid_path.empty()) res.lid = load_lid(paths.lid_path);
  if (!paths.lm_dir.empty()) res.lms.load_dir(paths.lm_dir);
  return res;
}

struct Invocation {
  std::string cmd;
  RunConfig run;
  DetectorConfig detector;
  ThresholdRuleSet rules;
  ResourcePaths paths;
  // Subcommand extras
  std::string output;  // features CSV / train model path / report TSV
  int lm_order = 3;
  std::string lm_lang = "und_Zzzz";
  std::uint64_t lm_min_sentences = 10000;
  bool lm_jsonl = false;
  std::string lid_samples_dir;
  int lid_ngram = 3;
  double lid_alpha = 1.0;
};

inline std::string canonical_config(const Invocation& in) {
  std::ostringstream s;
  s << "v1|cmd=" << in.cmd;
  s << "|inputs=";
  for (std::size_t i = 0; i < in.run.inputs.size(); ++i) {
    if (i) s << ';';
    s << in.run.inputs[i];
  }
  s << "|annotate=" << in.run.annotate << "|global_stats=" << in.run.global_stats
    << "|min_docs=" << in.run.min_docs << "|fit_cap=" << in.run.fit_cap
    << "|on_error=" << (in.run.on_error == OnError::kAbort ? "abort" : "skip");
  s << "|char_k=" << in.run.features.char_gram_k << "|word_k=" << in.run.features.word_gram_k;
  s << "|tok=";
  {
    std::map<std::string, TokenizerMode> sorted(in.run.features.tokenizer_overrides.begin(),
                                                in.run.features.tokenizer_overrides.end());
    bool first = true;
    for (const auto& [lang, mode] : sorted) {
      if (!first) s << ';';
      first = false;
      s << lang << ':' << (mode == TokenizerMode::kCharacters ? 'c' : 's');
    }
  }
  s << "|algorithm=";
  switch (in.detector.algorithm) {
    case Algorithm::kIForest: s << "iforest"; break;
    case Algorithm::kLof: s << "lof"; break;
    case Algorithm::kKMeans: s << "kmeans"; break;
  }
  s << "|contamination=" << format_double(in.detector.contamination);
  s << "|tau=" << (in.detector.tau_override ? format_double(*in.detector.tau_override) : "");
  s << "|trees=" << in.detector.trees << "|psi=" << in.detector.psi
    << "|lof_k=" << in.detector.lof_k << "|clusters=" << in.detector.kmeans_clusters
    << "|kmeans_iters=" << in.detector.kmeans_iters << "|seed=" << in.detector.seed;
  s << "|mask=";
  for (bool b : in.detector.feature_mask) s << (b ? '1' : '0');
  s << "|rules=";
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    const auto& b = in.rules.bounds[j];
    if (!b.min && !b.max) continue;
    s << feature_names()[j] << ':' << (b.min ? format_double(*b.min) : "") << ':'
      << (b.max ? format_double(*b.max) : "") << ';';
  }
  s << "|stopwords=" << in.paths.stopwords_dir << "|flagged=" << in.paths.flagged_dir
    << "|specials=" << in.paths.specials_path << "|lid=" << in.paths.lid_path
    << "|lms=" << in.paths.lm_dir;
  if (in.cmd == "train-lm") {
    s << "|lm_order=" << in.lm_order << "|lm_lang=" << in.lm_lang
      << "|lm_jsonl=" << in.lm_jsonl;
  }
  if (in.cmd == "train-lid") {
    s << "|lid_samples=" << in.lid_samples_dir << "|lid_n=" << in.lid_ngram
      << "|lid_alpha=" << format_double(in.lid_alpha);
  }
  return s.str();
}

inline std::string config_hash(const Invocation& in) {
  return to_hex(fnv1a64(canonical_config(in)));
}

namespace detail {

inline int feature_index(std::string_view name) {
  const auto& names = feature_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j] == name) return static_cast<int>(j);
  }
  return -1;
}

/// Rule syntax: `<feature><op><value>` with op `>=` (min bound) or `<=`
/// (max bound), e.g. `n_words>=5` or `s_ppl<=1000`.
inline void apply_rule(ThresholdRuleSet& rules, const std::string& spec) {
  auto ge = spec.find(">=");
  auto le = spec.find("<=");
  std::size_t op_pos;
  bool is_min;
  if (ge != std::string::npos && (le == std::string::npos || ge < le)) {
    op_pos = ge;
    is_min = true;
  } else if (le != std::string::npos) {
    op_pos = le;
    is_min = false;
  } else {
    throw std::invalid_argument("bad rule (expected <feature>>=<value> or <feature><=<value>): " +
                                spec);
  }
  const std::string name = spec.substr(0, op_pos);
  const int j = feature_index(name);
  if (j < 0) throw std::invalid_argument("unknown feature in rule: " + name);
  const double value = parse_double(spec.substr(op_pos + 2));
  if (is_min) {
    rules.bounds[j].min = value;
  } else {
    rules.bounds[j].max = value;
  }
}

inline void validate(const Invocation& in) {
  if (!(in.detector.contamination > 0.0 && in.detector.contamination < 1.0)) {
    throw std::invalid_argument("contamination must lie in (0,1)");
  }
  if (in.detector.trees < 1) throw std::invalid_argument("trees must be >= 1");
  if (in.detector.psi < 2) throw std::invalid_argument("psi must be >= 2");
  if (in.detector.lof_k < 1) throw std::invalid_argument("lof-k must be >= 1");
  if (in.detector.kmeans_clusters < 1) throw std::invalid_argument("clusters must be >= 1");
  if (in.detector.kmeans_iters < 1) throw std::invalid_argument("kmeans-iters must be >= 1");
  if (in.run.features.char_gram_k < 1) throw std::invalid_argument("char-gram-k must be >= 1");
  if (in.run.features.word_gram_k < 1) throw std::invalid_argument("word-gram-k must be >= 1");
  bool any = false;
  for (bool b : in.detector.feature_mask) any = any || b;
  if (!any) throw std::invalid_argument("every feature is ablated");
  in.rules.validate();
}

inline int run_features_cmd(const Invocation& in) {
  const LoadedResources resources = load_resources(in.paths);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!in.output.empty()) {
    file.open(in.output, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open for writing: " + in.output);
    out = &file;
  }
  const auto& names = feature_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j) *out << ',';
    *out << names[j];
  }
  *out << '\n';
  dcad::detail::for_each_document(
      in.run.inputs, in.run.on_error, resources.view(), in.run.features, in.run.threads,
      [&](const Document&, const FeatureVector& fv) {
        const auto row = fv.as_array();
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) *out << ',';
          *out << format_double(row[j]);
        }
        *out << '\n';
      },
      nullptr, nullptr);
  out->flush();
  if (!*out) throw std::runtime_error("write failed");
  return 0;
}

inline int run_train_lm(const Invocation& in) {
  std::vector<std::string> corpus;
  for (const auto& path : in.run.inputs) {
    if (in.lm_jsonl) {
      DocumentReader reader(path, in.run.on_error);
      while (auto doc = reader.next()) corpus.push_back(std::move(doc->text));
    } else {
      std::ifstream input(path, std::ios::binary);
      if (!input) throw std::runtime_error("cannot open: " + path);
      std::string line;
      while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        corpus.push_back(line);
      }
    }
  }
  const LanguageModel model =
      train_lm(corpus, in.lm_order, in.lm_lang, in.lm_min_sentences);
  save_arpa(model, in.output);
  std::cout << "wrote " << in.output << " (order " << model.order << ", "
            << model.tables[0].size() << " unigrams)\n";
  return 0;
}

inline int run_train_lid(const Invocation& in) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(in.lid_samples_dir)) {
    throw std::runtime_error("not a directory: " + in.lid_samples_dir);
  }
  std::map<std::string, std::vector<std::string>> samples;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in.lid_samples_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream input(p, std::ios::binary);
    if (!input) throw std::runtime_error("cannot open: " + p.string());
    std::string line;
    auto& texts = samples[p.stem().string()];
    while (std::getline(input, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) texts.push_back(line);
    }
  }
  const LidModel model = train_lid(samples, in.lid_ngram, in.lid_alpha);
  save_lid(model, in.output);
  std::cout << "wrote " << in.output << " (" << model.languages.size() << " languages, "
            << model.gram_logprobs.size() << " grams)\n";
  return 0;
}

inline int run_report_cmd(const Invocation& in) {
  CleanReport report;
  report.config_hash = config_hash(in);
  std::map<std::string, LanguageReport> lang_reports;
  for (const auto& path : in.run.inputs) {
    DocumentReader reader(path, in.run.on_error);
    while (auto doc = reader.next()) {
      nlohmann::json j = nlohmann::json::parse(doc->raw, nullptr, false);
      if (!j.is_object() || !j.contains("dcad_label") || !j.contains("dcad_features") ||
          !j["dcad_features"].is_array() || j["dcad_features"].size() != kFeatureCount) {
        if (in.run.on_error == OnError::kAbort) {
          throw ParseError(path, doc->line, "missing dcad annotations");
        }
        report.malformed += 1;
        continue;
      }
      const int label = j["dcad_label"].get<int>();
      LanguageReport& lr = lang_reports[doc->lang];
      const std::uint64_t bytes = doc->raw.size() + 1;
      const auto tokens = static_cast<std::uint64_t>(j["dcad_features"][0].get<double>());
      if (label > 0) {
        lr.docs_keep += 1;
        lr.tokens_keep += tokens;
        lr.bytes_keep += bytes;
      } else {
        lr.docs_remove += 1;
        lr.tokens_remove += tokens;
        lr.bytes_remove += bytes;
      }
    }
    report.malformed += reader.malformed_count();
  }
  for (auto& [lang, lr] : lang_reports) {
    lr.lang = lang;
    report.languages.push_back(std::move(lr));
  }
  emit_report(report, in.output);
  std::cout << "wrote " << in.output << "\n";
  return 0;
}

inline int run_bench_cmd(Invocation& in) {
  const LoadedResources resources = load_resources(in.paths);
  const BenchResult r = benchmark(in.run, resources.view(), in.detector, in.rules);
  std::cout << "docs\t" << r.docs << "\n";
  std::cout << "baseline_seconds\t" << format_fixed(r.baseline_seconds, 3) << "\n";
  std::cout << "anomaly_seconds\t" << format_fixed(r.anomaly_seconds, 3) << "\n";
  const double ratio =
      r.baseline_seconds > 0.0 ? r.anomaly_seconds / r.baseline_seconds : 0.0;
  std::cout << "anomaly_over_baseline\t" << format_fixed(ratio, 3) << "\n";
  std::cout << "baseline_retained_pct\t" << format_fixed(r.baseline_retained_pct, 2) << "\n";
  std::cout << "anomaly_retained_pct\t" << format_fixed(r.anomaly_retained_pct, 2) << "\n";
  std::cout << "peak_rss_kb\t" << r.peak_rss_kb << "\n";
  return 0;
}

}  // namespace detail

/// Entry point behind the `dcad` binary; returns the process exit code.
/// 0 success, 1 validation/fatal errors, 2 partial per-language failures,
/// 64 usage errors.
inline int run(int argc, const char* const* argv) {
  CLI::App app{"Multilingual corpus cleaning via anomaly detection"};
  app.require_subcommand(0, 1);
  app.set_config("--config", "", "Read options from an INI config file");
  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and config hash");

  Invocation in;
  std::vector<int> ablate;
  std::string algorithm = "iforest";
  double tau = 0.0;
  bool tau_set = false;
  std::string on_error = "skip";
  std::vector<std::string> rule_specs;
  std::vector<std::string> char_tok_langs;
  std::vector<std::string> sep_tok_langs;
  std::size_t memory_budget_mb = 256;
  in.run.threads = hardware_threads();

  auto add_resource_flags = [&](CLI::App* cmd) {
    cmd->add_option("--stopwords", in.paths.stopwords_dir,
                    "Directory of <lang>.txt stopword lists")
        ->envname("DCAD_STOPWORDS");
    cmd->add_option("--flagged", in.paths.flagged_dir,
                    "Directory of <lang>.txt flagged-word lists")
        ->envname("DCAD_FLAGGED");
    cmd->add_option("--special-chars", in.paths.specials_path,
                    "Special-character override file (one char or U+XXXX per line)")
        ->envname("DCAD_SPECIAL_CHARS");
    cmd->add_option("--lid-model", in.paths.lid_path, "Language-identification model file")
        ->envname("DCAD_LID_MODEL");
    cmd->add_option("--lm-dir", in.paths.lm_dir, "Directory of <lang>.arpa language models")
        ->envname("DCAD_LM_DIR");
  };
  auto add_feature_flags = [&](CLI::App* cmd) {
    cmd->add_option("--char-gram-k", in.run.features.char_gram_k,
                    "Character k-gram length for r_char_rep (default 10)")
        ->envname("DCAD_CHAR_GRAM_K");
    cmd->add_option("--word-gram-k", in.run.features.word_gram_k,
                    "Word k-gram length for r_word_rep (default 2)")
        ->envname("DCAD_WORD_GRAM_K");
    cmd->add_option("--char-tokenizer", char_tok_langs,
                    "Force per-character tokenization for a language (repeatable)");
    cmd->add_option("--separator-tokenizer", sep_tok_langs,
                    "Force separator tokenization for a language (repeatable)");
  };
  auto add_io_flags = [&](CLI::App* cmd, bool need_out) {
    cmd->add_option("--input", in.run.inputs, "Input JSON Lines file (repeatable)")
        ->required()
        ->envname("DCAD_INPUT");
    auto* out = cmd->add_option("--out", in.run.out_dir, "Output directory")
                    ->envname("DCAD_OUT");
    if (need_out) out->required();
    cmd->add_option("--on-error", on_error, "Malformed-line policy: skip or abort")
        ->envname("DCAD_ON_ERROR");
    cmd->add_option("--threads", in.run.threads, "Worker count (default: hardware)")
        ->envname("DCAD_THREADS");
  };
  auto add_detector_flags = [&](CLI::App* cmd) {
    cmd->add_option("--algorithm", algorithm, "Detector: iforest, lof, or kmeans")
        ->envname("DCAD_ALGORITHM");
    cmd->add_option("--contamination", in.detector.contamination,
                    "Assumed anomalous fraction in (0,1) (default 0.0769)")
        ->envname("DCAD_CONTAMINATION");
    cmd->add_option("--tau", tau, "Fixed score threshold overriding the quantile rule")
        ->envname("DCAD_TAU")
        ->each([&](const std::string&) { tau_set = true; });
    cmd->add_option("--trees", in.detector.trees, "Isolation forest tree count (default 100)")
        ->envname("DCAD_TREES");
    cmd->add_option("--psi", in.detector.psi, "Isolation forest subsample size (default 256)")
        ->envname("DCAD_PSI");
    cmd->add_option("--lof-k", in.detector.lof_k, "LOF neighbor count (default 20)")
        ->envname("DCAD_LOF_K");
    cmd->add_option("--clusters", in.detector.kmeans_clusters,
                    "K-means cluster count (default 8)")
        ->envname("DCAD_CLUSTERS");
    cmd->add_option("--kmeans-iters", in.detector.kmeans_iters,
                    "K-means iteration limit (default 100)")
        ->envname("DCAD_KMEANS_ITERS");
    cmd->add_option("--seed", in.detector.seed, "Seed for all randomized behavior")
        ->envname("DCAD_SEED");
    cmd->add_option("--ablate-feature", ablate,
                    "Drop feature i (1-based: 1=n_words .. 8=s_ppl; repeatable). "
                    "Internally maps to the 0-based mask index i-1.")
        ->envname("DCAD_ABLATE_FEATURE");
  };
  auto add_pipeline_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--annotate", in.run.annotate,
                  "Append dcad_features/dcad_score/dcad_label to output lines");
    cmd->add_flag("--global-stats", in.run.global_stats,
                  "Standardize and fit across all languages as one unit");
    cmd->add_option("--min-docs", in.run.min_docs,
                    "Pass a language through unfiltered below this count (default 32)")
        ->envname("DCAD_MIN_DOCS");
    cmd->add_option("--fit-cap", in.run.fit_cap,
                    "Fit the detector on at most this many sampled vectors (default 100000)")
        ->envname("DCAD_FIT_CAP");
    cmd->add_option("--memory-budget-mb", memory_budget_mb,
                    "Feature buffer budget before spilling to disk (default 256)")
        ->envname("DCAD_MEMORY_BUDGET_MB");
    cmd->add_option("--report", in.run.report_path,
                    "Report TSV path (default <out>/report.tsv)")
        ->envname("DCAD_REPORT");
  };

  CLI::App* clean = app.add_subcommand("clean", "Run the full anomaly-cleaning pipeline");
  add_io_flags(clean, true);
  add_resource_flags(clean);
  add_feature_flags(clean);
  add_detector_flags(clean);
  add_pipeline_flags(clean);

  CLI::App* features_cmd =
      app.add_subcommand("features", "Emit per-document feature rows as CSV");
  add_io_flags(features_cmd, false);
  add_resource_flags(features_cmd);
  add_feature_flags(features_cmd);
  features_cmd->add_option("--output", in.output, "CSV path (default: stdout)");

  CLI::App* threshold =
      app.add_subcommand("threshold-clean", "Fixed-rule baseline partition");
  add_io_flags(threshold, true);
  add_resource_flags(threshold);
  add_feature_flags(threshold);
  threshold->add_option("--rule", rule_specs,
                        "Bound like n_words>=5 or s_ppl<=1000 (repeatable)");
  threshold->add_flag("--annotate", in.run.annotate,
                      "Append dcad_features/dcad_score/dcad_label to output lines");
  threshold->add_option("--report", in.run.report_path,
                        "Report TSV path (default <out>/report.tsv)");

  CLI::App* train_lm_cmd = app.add_subcommand("train-lm", "Train an n-gram language model");
  train_lm_cmd->add_option("--input", in.run.inputs, "Training text, one sentence per line")
      ->required();
  train_lm_cmd->add_option("--out", in.output, "Output ARPA path")->required();
  train_lm_cmd->add_option("--order", in.lm_order, "N-gram order (default 3)");
  train_lm_cmd->add_option("--lang", in.lm_lang, "Language code controlling tokenization");
  train_lm_cmd->add_option("--min-sentences", in.lm_min_sentences,
                           "Warn when training on fewer sentences (default 10000)");
  train_lm_cmd->add_flag("--jsonl", in.lm_jsonl,
                         "Inputs are JSON Lines documents; train on their text fields");

  CLI::App* train_lid_cmd =
      app.add_subcommand("train-lid", "Train the character n-gram language identifier");
  train_lid_cmd
      ->add_option("--samples", in.lid_samples_dir,
                   "Directory of <lang>.txt sample files, one text per line")
      ->required();
  train_lid_cmd->add_option("--out", in.output, "Output model path")->required();
  train_lid_cmd->add_option("--ngram", in.lid_ngram, "Gram length (default 3)");
  train_lid_cmd->add_option("--alpha", in.lid_alpha, "Add-alpha smoothing (default 1.0)");

  CLI::App* scatter = app.add_subcommand(
      "scatter", "Run the pipeline and export per-document feature/score/label rows");
  add_io_flags(scatter, true);
  add_resource_flags(scatter);
  add_feature_flags(scatter);
  add_detector_flags(scatter);
  add_pipeline_flags(scatter);
  scatter->add_option("--scatter-out", in.run.scatter_path,
                      "CSV path (default <out>/scatter.csv)");

  CLI::App* report_cmd =
      app.add_subcommand("report", "Re-emit a report TSV from an annotated corpus");
  report_cmd->add_option("--input", in.run.inputs, "Annotated JSON Lines file (repeatable)")
      ->required();
  report_cmd->add_option("--out", in.output, "Report TSV path")->required();
  report_cmd->add_option("--on-error", on_error, "Malformed-line policy: skip or abort");

  CLI::App* bench = app.add_subcommand(
      "bench", "Time the threshold baseline against the anomaly pipeline");
  add_io_flags(bench, true);
  add_resource_flags(bench);
  add_feature_flags(bench);
  add_detector_flags(bench);
  add_pipeline_flags(bench);
  bench->add_option("--rule", rule_specs,
                    "Baseline bound like n_words>=5 (repeatable)");

  for (auto* sub : {clean, features_cmd, threshold, train_lm_cmd, train_lid_cmd, scatter,
                    report_cmd, bench}) {
    sub->configurable();
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    for (const auto& spec : rule_specs) detail::apply_rule(in.rules, spec);
    for (const auto& lang : char_tok_langs) {
      in.run.features.tokenizer_overrides[lang] = TokenizerMode::kCharacters;
    }
    for (const auto& lang : sep_tok_langs) {
      in.run.features.tokenizer_overrides[lang] = TokenizerMode::kSeparator;
    }
    if (tau_set) in.detector.tau_override = tau;
    for (int i : ablate) {
      if (i < 1 || i > static_cast<int>(kFeatureCount)) {
        throw std::invalid_argument("--ablate-feature expects 1.." +
                                    std::to_string(kFeatureCount));
      }
      in.detector.feature_mask[i - 1] = false;
    }
    if (algorithm == "iforest") {
      in.detector.algorithm = Algorithm::kIForest;
    } else if (algorithm == "lof") {
      in.detector.algorithm = Algorithm::kLof;
    } else if (algorithm == "kmeans") {
      in.detector.algorithm = Algorithm::kKMeans;
    } else {
      throw std::invalid_argument("unknown algorithm: " + algorithm);
    }
    if (on_error == "skip") {
      in.run.on_error = OnError::kSkip;
    } else if (on_error == "abort") {
      in.run.on_error = OnError::kAbort;
    } else {
      throw std::invalid_argument("unknown on-error policy: " + on_error);
    }
    in.run.memory_budget_bytes = memory_budget_mb << 20;
    if (in.run.threads == 0) in.run.threads = 1;

    CLI::App* active = nullptr;
    for (auto* sub : {clean, features_cmd, threshold, train_lm_cmd, train_lid_cmd, scatter,
                      report_cmd, bench}) {
      if (sub->parsed()) active = sub;
    }
    in.cmd = active ? active->get_name() : "";
    in.run.config_hash = config_hash(in);

    if (show_version) {
      std::cout << "dcad " << kVersion << "\n";
      std::cout << "config_hash " << in.run.config_hash << "\n";
      return 0;
    }
    if (!active) {
      std::cerr << app.help();
      return 64;
    }
    if (active == clean || active == scatter || active == bench) detail::validate(in);

    if (active == clean || active == scatter) {
      if (active == scatter && in.run.scatter_path.empty()) {
        in.run.scatter_path =
            (std::filesystem::path(in.run.out_dir) / "scatter.csv").string();
      }
      const LoadedResources resources = load_resources(in.paths);
      const CleanReport report = clean_corpus(in.run, resources.view(), in.detector);
      std::cout << "documents " << report.docs_total() << ", removed "
                << report.docs_removed() << " ("
                << format_fixed(100.0 * report.removal_fraction(), 2) << "%), malformed "
                << report.malformed << "\n";
      return report.has_failures() ? 2 : 0;
    }
    if (active == threshold) {
      in.rules.validate();
      const LoadedResources resources = load_resources(in.paths);
      const CleanReport report = threshold_clean(in.run, resources.view(), in.rules);
      std::cout << "documents " << report.docs_total() << ", removed "
                << report.docs_removed() << " ("
                << format_fixed(100.0 * report.removal_fraction(), 2) << "%), malformed "
                << report.malformed << "\n";
      return report.has_failures() ? 2 : 0;
    }
    if (active == features_cmd) return detail::run_features_cmd(in);
    if (active == train_lm_cmd) return detail::run_train_lm(in);
    if (active == train_lid_cmd) return detail::run_train_lid(in);
    if (active == report_cmd) return detail::run_report_cmd(in);
    if (active == bench) return detail::run_bench_cmd(in);
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dcad::cli

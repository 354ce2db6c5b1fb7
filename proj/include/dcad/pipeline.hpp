#pragma once

#include <sys/resource.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dcad/anomaly.hpp"
#include "dcad/corpus_io.hpp"
#include "dcad/features.hpp"
#include "dcad/numfmt.hpp"
#include "dcad/parallel.hpp"
#include "dcad/stats.hpp"

namespace dcad {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

/// Fixed per-feature bounds; violating any bound removes the document.
struct ThresholdRuleSet {
  struct Bound {
    std::optional<double> min;
    std::optional<double> max;
  };
  std::array<Bound, kFeatureCount> bounds{};

  bool empty() const {
    for (const auto& b : bounds) {
      if (b.min || b.max) return false;
    }
    return true;
  }

  void validate() const {
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      const auto& b = bounds[j];
      if (b.min && b.max && *b.min > *b.max) {
        throw std::invalid_argument("threshold rule for " +
                                    std::string(feature_names()[j]) +
                                    " has min above max");
      }
    }
  }

  int label(const std::array<double, kFeatureCount>& x) const {
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      const auto& b = bounds[j];
      if (b.min && x[j] < *b.min) return -1;
      if (b.max && x[j] > *b.max) return -1;
    }
    return 1;
  }
};

inline std::vector<int> threshold_filter(const std::vector<FeatureVector>& features,
                                         const ThresholdRuleSet& rules) {
  rules.validate();
  std::vector<int> labels(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    labels[i] = rules.label(features[i].as_array());
  }
  return labels;
}

struct LanguageReport {
  std::string lang;
  std::uint64_t docs_keep = 0;
  std::uint64_t docs_remove = 0;
  std::uint64_t tokens_keep = 0;
  std::uint64_t tokens_remove = 0;
  std::uint64_t bytes_keep = 0;
  std::uint64_t bytes_remove = 0;
  std::vector<std::string> flags;

  std::uint64_t docs_total() const { return docs_keep + docs_remove; }
  std::uint64_t tokens_total() const { return tokens_keep + tokens_remove; }
  std::uint64_t bytes_total() const { return bytes_keep + bytes_remove; }
};

struct CleanReport {
  std::vector<LanguageReport> languages;  // sorted by language code
  std::uint64_t malformed = 0;
  std::uint64_t repaired = 0;
  double pass1_seconds = 0.0;
  double pass2_seconds = 0.0;
  std::string config_hash;

  bool has_failures() const {
    for (const auto& lr : languages) {
      for (const auto& f : lr.flags) {
        if (f.rfind("failed:", 0) == 0) return true;
      }
    }
    return false;
  }

  std::uint64_t docs_total() const {
    std::uint64_t t = 0;
    for (const auto& lr : languages) t += lr.docs_total();
    return t;
  }
  std::uint64_t docs_removed() const {
    std::uint64_t t = 0;
    for (const auto& lr : languages) t += lr.docs_remove;
    return t;
  }
  double removal_fraction() const {
    const std::uint64_t total = docs_total();
    return total == 0 ? 0.0
                      : static_cast<double>(docs_removed()) / static_cast<double>(total);
  }
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string out_dir;
  std::string report_path;   // defaults to <out_dir>/report.tsv
  std::string scatter_path;  // when set, per-document rows are exported
  bool annotate = false;
  bool global_stats = false;
  std::uint64_t min_docs = 32;
  std::uint64_t fit_cap = 100000;
  std::size_t memory_budget_bytes = std::size_t(256) << 20;
  unsigned threads = 1;
  OnError on_error = OnError::kSkip;
  FeatureConfig features;
  std::string config_hash;
};

/// Holds per-unit feature rows in arrival order, spilling chunk-columnar
/// binary files once the in-memory budget is exceeded.
class FeatureStore {
 public:
  FeatureStore(std::size_t budget_bytes, std::filesystem::path spill_dir)
      : budget_bytes_(budget_bytes), spill_dir_(std::move(spill_dir)) {}

  ~FeatureStore() {
    std::error_code ec;
    if (spill_created_) std::filesystem::remove_all(spill_dir_, ec);
  }

  FeatureStore(const FeatureStore&) = delete;
  FeatureStore& operator=(const FeatureStore&) = delete;

  std::uint32_t unit_id(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(units_.size());
    ids_.emplace(name, id);
    units_.emplace_back();
    units_.back().name = name;
    return id;
  }

  const std::string& unit_name(std::uint32_t id) const { return units_[id].name; }
  std::size_t unit_count() const { return units_.size(); }
  std::uint64_t rows(std::uint32_t id) const { return units_[id].total_rows; }

  void append(std::uint32_t id, const std::array<double, kFeatureCount>& row) {
    Unit& u = units_[id];
    u.buffer.insert(u.buffer.end(), row.begin(), row.end());
    u.total_rows += 1;
    buffered_bytes_ += kFeatureCount * sizeof(double);
    while (buffered_bytes_ > budget_bytes_) {
      flush_largest();
    }
  }

  Matrix load(std::uint32_t id) const {
    const Unit& u = units_[id];
    Matrix X(u.total_rows, kFeatureCount);
    std::size_t next_row = 0;
    if (u.spilled) {
      std::ifstream in(spill_path(id), std::ios::binary);
      if (!in) throw std::runtime_error("cannot reopen spill file for " + u.name);
      while (true) {
        std::uint64_t chunk_rows = 0;
        in.read(reinterpret_cast<char*>(&chunk_rows), sizeof(chunk_rows));
        if (!in) break;
        std::vector<double> column(chunk_rows);
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
          in.read(reinterpret_cast<char*>(column.data()),
                  static_cast<std::streamsize>(chunk_rows * sizeof(double)));
          if (!in) throw std::runtime_error("truncated spill file for " + u.name);
          for (std::uint64_t r = 0; r < chunk_rows; ++r) {
            X.at(next_row + r, j) = column[r];
          }
        }
        next_row += chunk_rows;
      }
    }
    const std::size_t buffer_rows = u.buffer.size() / kFeatureCount;
    for (std::size_t r = 0; r < buffer_rows; ++r) {
      for (std::size_t j = 0; j < kFeatureCount; ++j) {
        X.at(next_row + r, j) = u.buffer[r * kFeatureCount + j];
      }
    }
    next_row += buffer_rows;
    if (next_row != u.total_rows) {
      throw std::runtime_error("feature store row count mismatch for " + u.name);
    }
    return X;
  }

 private:
  struct Unit {
    std::string name;
    std::vector<double> buffer;  // row-major pending rows
    std::uint64_t total_rows = 0;
    bool spilled = false;
  };

  std::filesystem::path spill_path(std::uint32_t id) const {
    return spill_dir_ / ("unit" + std::to_string(id) + ".bin");
  }

  void flush_largest() {
    std::size_t best = units_.size();
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      if (units_[i].buffer.size() > best_size) {
        best_size = units_[i].buffer.size();
        best = i;
      }
    }
    if (best == units_.size()) return;
    Unit& u = units_[best];
    if (!spill_created_) {
      std::filesystem::create_directories(spill_dir_);
      spill_created_ = true;
    }
    std::ofstream out(spill_path(static_cast<std::uint32_t>(best)),
                      std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open spill file for " + u.name);
    const std::uint64_t chunk_rows = u.buffer.size() / kFeatureCount;
    out.write(reinterpret_cast<const char*>(&chunk_rows), sizeof(chunk_rows));
    std::vector<double> column(chunk_rows);
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      for (std::uint64_t r = 0; r < chunk_rows; ++r) {
        column[r] = u.buffer[r * kFeatureCount + j];
      }
      out.write(reinterpret_cast<const char*>(column.data()),
                static_cast<std::streamsize>(chunk_rows * sizeof(double)));
    }
    if (!out) throw std::runtime_error("spill write failed for " + u.name);
    buffered_bytes_ -= u.buffer.size() * sizeof(double);
    u.buffer.clear();
    u.buffer.shrink_to_fit();
    u.spilled = true;
  }

  std::size_t budget_bytes_;
  std::filesystem::path spill_dir_;
  bool spill_created_ = false;
  std::size_t buffered_bytes_ = 0;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<Unit> units_;
};

namespace detail {

/// Streams documents from the inputs in order, computing features in
/// parallel chunks but invoking emit strictly in input order.
template <typename Emit>
inline void for_each_document(const std::vector<std::string>& inputs, OnError on_error,
                              const FeatureResources& resources,
                              const FeatureConfig& config, unsigned threads, Emit&& emit,
                              std::uint64_t* malformed, std::uint64_t* repaired) {
  const std::size_t batch_size = std::max<std::size_t>(512, 256 * threads);
  std::vector<Document> batch;
  std::vector<FeatureVector> feats;
  for (const auto& path : inputs) {
    DocumentReader reader(path, on_error);
    bool done = false;
    while (!done) {
      batch.clear();
      while (batch.size() < batch_size) {
        auto doc = reader.next();
        if (!doc) {
          done = true;
          break;
        }
        batch.push_back(std::move(*doc));
      }
      feats.resize(batch.size());
      parallel_for(batch.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          feats[i] = extract_features(batch[i], resources, config);
        }
      });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        emit(batch[i], feats[i]);
      }
    }
    if (malformed) *malformed += reader.malformed_count();
    if (repaired) *repaired += reader.repaired_count();
  }
}

struct UnitResult {
  std::vector<double> scores;
  std::vector<std::uint64_t> tokens;
  std::vector<int> labels;
  std::vector<std::string> flags;
  Matrix raw;  // retained only when annotation or scatter export needs it
};

inline bool row_all_finite(const std::array<double, kFeatureCount>& row, std::size_t* bad) {
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    if (!std::isfinite(row[j])) {
      if (bad) *bad = j;
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::size_t export_scatter(const std::vector<std::array<double, kFeatureCount>>& features,
                                  const std::vector<double>& scores,
                                  const std::vector<int>& labels, const std::string& path) {
  if (features.size() != scores.size() || scores.size() != labels.size()) {
    throw std::invalid_argument("scatter export requires aligned inputs");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "n_words,r_char_rep,r_word_rep,r_special,r_stop,r_flag,s_lid,s_ppl,score,label\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    for (double v : features[i]) out << format_double(v) << ',';
    out << format_double(scores[i]) << ',' << labels[i] << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
  return features.size();
}

inline void emit_report(const CleanReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "# config_hash=" << report.config_hash << "\n";
  out << "lang\tdocs_keep\tdocs_remove\tdocs_total\ttokens_keep\ttokens_remove\t"
         "tokens_total\tbytes_keep\tbytes_remove\tbytes_total\tflags\n";
  LanguageReport total;
  auto write_row = [&](const LanguageReport& lr, const std::string& name) {
    out << name << '\t' << lr.docs_keep << '\t' << lr.docs_remove << '\t' << lr.docs_total()
        << '\t' << lr.tokens_keep << '\t' << lr.tokens_remove << '\t' << lr.tokens_total()
        << '\t' << lr.bytes_keep << '\t' << lr.bytes_remove << '\t' << lr.bytes_total()
        << '\t';
    for (std::size_t i = 0; i < lr.flags.size(); ++i) {
      if (i) out << "; ";
      out << lr.flags[i];
    }
    out << '\n';
  };
  for (const auto& lr : report.languages) {
    write_row(lr, lr.lang);
    total.docs_keep += lr.docs_keep;
    total.docs_remove += lr.docs_remove;
    total.tokens_keep += lr.tokens_keep;
    total.tokens_remove += lr.tokens_remove;
    total.bytes_keep += lr.bytes_keep;
    total.bytes_remove += lr.bytes_remove;
  }
  write_row(total, "TOTAL");
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Full clean: pass 1 extracts features and accumulates moments per unit;
/// pass 2 standardizes, fits the detector per unit (sampled above the fit
/// cap), scores, then re-reads the inputs to partition documents.
inline CleanReport clean_corpus(const RunConfig& run, const FeatureResources& resources,
                                const DetectorConfig& detector) {
  namespace fs = std::filesystem;
  using clock = std::chrono::steady_clock;
  if (run.inputs.empty()) throw std::invalid_argument("no input files");
  fs::create_directories(run.out_dir);

  const bool keep_raw = run.annotate || !run.scatter_path.empty();
  FeatureStore store(run.memory_budget_bytes, fs::path(run.out_dir) / ".dcad-spill");
  std::vector<MomentAccumulator> accs;
  std::vector<std::string> unit_failures;  // first failure per unit, if any

  CleanReport report;
  report.config_hash = run.config_hash;

  const auto t1 = clock::now();
  detail::for_each_document(
      run.inputs, run.on_error, resources, run.features, run.threads,
      [&](const Document& doc, const FeatureVector& fv) {
        const std::string& unit_name = run.global_stats ? std::string("GLOBAL") : doc.lang;
        const std::uint32_t u = store.unit_id(unit_name);
        if (u >= accs.size()) {
          accs.resize(u + 1);
          unit_failures.resize(u + 1);
        }
        auto row = fv.as_array();
        std::size_t bad = 0;
        if (!detail::row_all_finite(row, &bad)) {
          if (unit_failures[u].empty()) {
            unit_failures[u] = "failed: non-finite value for feature " +
                               std::string(feature_names()[bad]) + " in document " + doc.id;
          }
          for (auto& v : row) {
            if (!std::isfinite(v)) v = 0.0;
          }
        } else if (unit_failures[u].empty()) {
          accumulate(accs[u], row, doc.id);
        }
        store.append(u, row);
      },
      &report.malformed, &report.repaired);
  report.pass1_seconds = std::chrono::duration<double>(clock::now() - t1).count();

  const auto t2 = clock::now();
  std::vector<detail::UnitResult> results(store.unit_count());
  for (std::uint32_t u = 0; u < store.unit_count(); ++u) {
    detail::UnitResult& res = results[u];
    const std::uint64_t n = store.rows(u);
    Matrix raw = store.load(u);
    res.tokens.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      res.tokens[i] = static_cast<std::uint64_t>(raw.at(i, 0));
    }
    res.scores.assign(n, 0.0);
    res.labels.assign(n, 1);

    if (!unit_failures[u].empty()) {
      res.flags.push_back(unit_failures[u]);
    } else if (n < run.min_docs) {
      res.flags.push_back("unfiltered: insufficient data");
    } else {
      try {
        const StandardizationStats stats = finalize(accs[u]);
        Matrix std_rows(raw.rows, raw.cols);
        for (std::size_t i = 0; i < raw.rows; ++i) {
          std::array<double, kFeatureCount> row;
          std::copy(raw.row(i), raw.row(i) + kFeatureCount, row.begin());
          const auto z = standardize(row, stats);
          std::copy(z.begin(), z.end(), std_rows.row(i));
        }
        const Matrix Xp = apply_feature_mask(std_rows, detector.feature_mask);

        DetectorModel model;
        if (Xp.rows > run.fit_cap) {
          std::uint64_t state = detector.seed ^ 0xA24BAED4963EE407ULL;
          Rng sample_rng(splitmix64(state));
          auto sample = sample_without_replacement(Xp.rows, run.fit_cap, sample_rng);
          std::sort(sample.begin(), sample.end());
          Matrix fit_rows(sample.size(), Xp.cols);
          for (std::size_t i = 0; i < sample.size(); ++i) {
            std::copy(Xp.row(sample[i]), Xp.row(sample[i]) + Xp.cols, fit_rows.row(i));
          }
          model = fit_detector(fit_rows, detector, run.threads);
        } else {
          model = fit_detector(Xp, detector, run.threads);
        }
        res.scores = score_matrix(Xp, model, run.threads);
        res.labels = quantile_labels(res.scores, detector.contamination,
                                     detector.tau_override);
      } catch (const std::exception& e) {
        res.flags.assign({std::string("failed: ") + e.what()});
        res.scores.assign(n, 0.0);
        res.labels.assign(n, 1);
      }
    }
    if (keep_raw) res.raw = std::move(raw);
  }

  // Output pass: re-read inputs in order and route every document.
  std::map<std::string, LanguageReport> lang_reports;
  std::map<std::string, std::unique_ptr<PartitionWriter>> writers;
  std::vector<std::uint64_t> cursors(store.unit_count(), 0);
  std::vector<std::array<double, kFeatureCount>> scatter_features;
  std::vector<double> scatter_scores;
  std::vector<int> scatter_labels;

  auto writer_for = [&](const std::string& lang) -> PartitionWriter& {
    auto it = writers.find(lang);
    if (it == writers.end()) {
      const auto keep_path = (fs::path(run.out_dir) / (lang + ".keep.jsonl")).string();
      const auto remove_path = (fs::path(run.out_dir) / (lang + ".remove.jsonl")).string();
      it = writers
               .emplace(lang, std::make_unique<PartitionWriter>(keep_path, remove_path,
                                                                run.annotate))
               .first;
    }
    return *it->second;
  };

  static const std::array<double, kFeatureCount> kNoFeatures{};
  for (const auto& path : run.inputs) {
    DocumentReader reader(path, run.on_error);
    while (auto doc = reader.next()) {
      const std::string& unit_name = run.global_stats ? std::string("GLOBAL") : doc->lang;
      const std::uint32_t u = store.unit_id(unit_name);
      const std::uint64_t idx = cursors[u]++;
      const detail::UnitResult& res = results[u];
      const int label = res.labels[idx];
      const double score = res.scores[idx];

      std::array<double, kFeatureCount> row = kNoFeatures;
      if (keep_raw) {
        std::copy(res.raw.row(idx), res.raw.row(idx) + kFeatureCount, row.begin());
      }
      writer_for(doc->lang).write(*doc, label, row, score);

      LanguageReport& lr = lang_reports[doc->lang];
      const std::uint64_t bytes = doc->raw.size() + 1;
      const std::uint64_t tokens = res.tokens[idx];
      if (label > 0) {
        lr.docs_keep += 1;
        lr.tokens_keep += tokens;
        lr.bytes_keep += bytes;
      } else {
        lr.docs_remove += 1;
        lr.tokens_remove += tokens;
        lr.bytes_remove += bytes;
      }
      if (!run.scatter_path.empty()) {
        scatter_features.push_back(row);
        scatter_scores.push_back(score);
        scatter_labels.push_back(label);
      }
    }
  }
  for (auto& [lang, writer] : writers) writer->close();

  for (auto& [lang, lr] : lang_reports) {
    lr.lang = lang;
    const std::string& unit_name = run.global_stats ? std::string("GLOBAL") : lang;
    lr.flags = results[store.unit_id(unit_name)].flags;
    report.languages.push_back(std::move(lr));
  }
  report.pass2_seconds = std::chrono::duration<double>(clock::now() - t2).count();

  if (!run.scatter_path.empty()) {
    export_scatter(scatter_features, scatter_scores, scatter_labels, run.scatter_path);
  }
  const std::string report_path = run.report_path.empty()
                                      ? (fs::path(run.out_dir) / "report.tsv").string()
                                      : run.report_path;
  emit_report(report, report_path);
  return report;
}

/// Single-pass fixed-rule baseline over the same I/O surface.
inline CleanReport threshold_clean(const RunConfig& run, const FeatureResources& resources,
                                   const ThresholdRuleSet& rules) {
  namespace fs = std::filesystem;
  using clock = std::chrono::steady_clock;
  if (run.inputs.empty()) throw std::invalid_argument("no input files");
  rules.validate();
  fs::create_directories(run.out_dir);

  CleanReport report;
  report.config_hash = run.config_hash;
  std::map<std::string, LanguageReport> lang_reports;
  std::map<std::string, std::unique_ptr<PartitionWriter>> writers;
  auto writer_for = [&](const std::string& lang) -> PartitionWriter& {
    auto it = writers.find(lang);
    if (it == writers.end()) {
      const auto keep_path = (fs::path(run.out_dir) / (lang + ".keep.jsonl")).string();
      const auto remove_path = (fs::path(run.out_dir) / (lang + ".remove.jsonl")).string();
      it = writers
               .emplace(lang, std::make_unique<PartitionWriter>(keep_path, remove_path,
                                                                run.annotate))
               .first;
    }
    return *it->second;
  };

  const auto t1 = clock::now();
  detail::for_each_document(
      run.inputs, run.on_error, resources, run.features, run.threads,
      [&](const Document& doc, const FeatureVector& fv) {
        const auto row = fv.as_array();
        const int label = rules.label(row);
        writer_for(doc.lang).write(doc, label, row, 0.0);
        LanguageReport& lr = lang_reports[doc.lang];
        const std::uint64_t bytes = doc.raw.size() + 1;
        const auto tokens = static_cast<std::uint64_t>(row[0]);
        if (label > 0) {
          lr.docs_keep += 1;
          lr.tokens_keep += tokens;
          lr.bytes_keep += bytes;
        } else {
          lr.docs_remove += 1;
          lr.tokens_remove += tokens;
          lr.bytes_remove += bytes;
        }
      },
      &report.malformed, &report.repaired);
  for (auto& [lang, writer] : writers) writer->close();
  report.pass1_seconds = std::chrono::duration<double>(clock::now() - t1).count();

  for (auto& [lang, lr] : lang_reports) {
    lr.lang = lang;
    report.languages.push_back(std::move(lr));
  }
  const std::string report_path = run.report_path.empty()
                                      ? (fs::path(run.out_dir) / "report.tsv").string()
                                      : run.report_path;
  emit_report(report, report_path);
  return report;
}

struct BenchResult {
  std::uint64_t docs = 0;
  double baseline_seconds = 0.0;
  double anomaly_seconds = 0.0;
  double baseline_retained_pct = 0.0;
  double anomaly_retained_pct = 0.0;
  long peak_rss_kb = 0;
};

/// Times the fixed-rule baseline (features + rules, no output files)
/// against the full anomaly pipeline on the same corpus.
inline BenchResult benchmark(const RunConfig& run, const FeatureResources& resources,
                             const DetectorConfig& detector, const ThresholdRuleSet& rules) {
  using clock = std::chrono::steady_clock;
  rules.validate();
  BenchResult result;

  const auto t1 = clock::now();
  std::uint64_t kept = 0;
  std::uint64_t total = 0;
  detail::for_each_document(
      run.inputs, run.on_error, resources, run.features, run.threads,
      [&](const Document&, const FeatureVector& fv) {
        total += 1;
        if (rules.label(fv.as_array()) > 0) kept += 1;
      },
      nullptr, nullptr);
  result.baseline_seconds = std::chrono::duration<double>(clock::now() - t1).count();
  result.docs = total;
  result.baseline_retained_pct =
      total == 0 ? 100.0 : 100.0 * static_cast<double>(kept) / static_cast<double>(total);

  const auto t2 = clock::now();
  const CleanReport report = clean_corpus(run, resources, detector);
  result.anomaly_seconds = std::chrono::duration<double>(clock::now() - t2).count();
  const std::uint64_t atotal = report.docs_total();
  result.anomaly_retained_pct =
      atotal == 0 ? 100.0
                  : 100.0 * static_cast<double>(atotal - report.docs_removed()) /
                        static_cast<double>(atotal);

  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0) {
    result.peak_rss_kb = usage.ru_maxrss;
  }
  return result;
}

}  // namespace dcad

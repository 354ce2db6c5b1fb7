#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcad/unicode.hpp"

namespace dcad {

struct Document {
  std::string id;
  std::string lang;  // ISO 639-3 plus script suffix, e.g. "eng_Latn"
  std::string text;
  std::optional<std::string> source;
  std::string raw;  // the input line (UTF-8 repaired), for pass-through output
  std::uint64_t line = 0;
};

inline bool valid_lang_code(std::string_view lang) {
  if (lang.size() != 8 || lang[3] != '_') return false;
  for (int i = 0; i < 3; ++i) {
    if (lang[i] < 'a' || lang[i] > 'z') return false;
  }
  for (int i = 4; i < 8; ++i) {
    if (!std::isalpha(static_cast<unsigned char>(lang[i]))) return false;
  }
  return true;
}

enum class OnError { kSkip, kAbort };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::uint64_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

/// Streams Documents out of a line-delimited JSON file. Single consumer.
class DocumentReader {
 public:
  DocumentReader(const std::string& path, OnError on_error = OnError::kSkip)
      : path_(path), on_error_(on_error), in_(path, std::ios::binary) {
    if (!in_) throw std::runtime_error("cannot open input file: " + path);
    filename_ = std::filesystem::path(path).filename().string();
  }

  /// Next well-formed document, or nullopt at end of file.
  std::optional<Document> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      auto doc = parse_line(line);
      if (doc) return doc;
      if (on_error_ == OnError::kAbort) {
        throw ParseError(path_, line_no_, "malformed record");
      }
      ++malformed_;
    }
    return std::nullopt;
  }

  std::uint64_t lines_read() const { return line_no_; }
  std::uint64_t malformed_count() const { return malformed_; }
  std::uint64_t repaired_count() const { return repaired_; }
  const std::string& path() const { return path_; }

 private:
  std::optional<Document> parse_line(std::string& line) {
    auto dec = decode_utf8(line);
    if (dec.invalid_sequences > 0) {
      std::u32string repaired(dec.codepoints.begin(), dec.codepoints.end());
      line = encode_utf8(repaired);
      ++repaired_;
    }
    auto j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    auto text_it = j.find("text");
    if (text_it == j.end() || !text_it->is_string()) return std::nullopt;

    Document doc;
    doc.text = text_it->get<std::string>();
    doc.line = line_no_;
    doc.raw = std::move(line);
    if (auto it = j.find("id"); it != j.end() && it->is_string()) {
      doc.id = it->get<std::string>();
    } else {
      doc.id = filename_ + ":" + std::to_string(line_no_);
    }
    if (auto it = j.find("lang"); it != j.end() && it->is_string() &&
                                  valid_lang_code(it->get<std::string>())) {
      doc.lang = it->get<std::string>();
    } else {
      doc.lang = "und_Zzzz";
    }
    if (auto it = j.find("source"); it != j.end() && it->is_string()) {
      doc.source = it->get<std::string>();
    }
    return doc;
  }

  std::string path_;
  std::string filename_;
  OnError on_error_;
  std::ifstream in_;
  std::uint64_t line_no_ = 0;
  std::uint64_t malformed_ = 0;
  std::uint64_t repaired_ = 0;
};

inline std::vector<Document> read_documents(const std::string& path,
                                            OnError on_error = OnError::kSkip,
                                            std::uint64_t* malformed = nullptr,
                                            std::uint64_t* repaired = nullptr) {
  DocumentReader reader(path, on_error);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  if (malformed) *malformed = reader.malformed_count();
  if (repaired) *repaired = reader.repaired_count();
  return docs;
}

struct PartitionCounts {
  std::uint64_t kept = 0;
  std::uint64_t removed = 0;
};

/// Routes documents to the keep or remove file by label. Lines are assembled
/// in memory and written in one call each, so a failed write never leaves a
/// partial line behind.
class PartitionWriter {
 public:
  PartitionWriter(const std::string& keep_path, const std::string& remove_path,
                  bool annotate)
      : annotate_(annotate),
        keep_path_(keep_path),
        remove_path_(remove_path),
        keep_(keep_path, std::ios::binary),
        remove_(remove_path, std::ios::binary) {
    if (!keep_) throw std::runtime_error("cannot open output file: " + keep_path);
    if (!remove_) throw std::runtime_error("cannot open output file: " + remove_path);
  }

  void write(const Document& doc, int label,
             const std::array<double, 8>& features, double score) {
    std::string line = annotate_ ? annotated_line(doc, label, features, score)
                                 : passthrough_line(doc);
    line.push_back('\n');
    const bool keep = label > 0;
    std::ofstream& out = keep ? keep_ : remove_;
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!out) {
      throw std::runtime_error("write failure: " +
                               (keep ? keep_path_ : remove_path_) + " record " +
                               std::to_string(kept_ + removed_ + 1));
    }
    if (keep) {
      ++kept_;
    } else {
      ++removed_;
    }
  }

  PartitionCounts counts() const { return {kept_, removed_}; }

  void close() {
    keep_.close();
    remove_.close();
    if (!keep_ || !remove_) throw std::runtime_error("failed to finalize partition files");
  }

 private:
  static std::string passthrough_line(const Document& doc) {
    if (!doc.raw.empty()) return doc.raw;
    return serialize(doc).dump();
  }

  static nlohmann::ordered_json serialize(const Document& doc) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    j["lang"] = doc.lang;
    j["text"] = doc.text;
    if (doc.source) j["source"] = *doc.source;
    return j;
  }

  std::string annotated_line(const Document& doc, int label,
                             const std::array<double, 8>& features,
                             double score) const {
    nlohmann::ordered_json j;
    if (!doc.raw.empty()) {
      j = nlohmann::ordered_json::parse(doc.raw, nullptr, false);
      if (j.is_discarded() || !j.is_object()) j = serialize(doc);
    } else {
      j = serialize(doc);
    }
    j["dcad_features"] = features;
    j["dcad_score"] = score;
    j["dcad_label"] = label;
    return j.dump();
  }

  bool annotate_;
  std::string keep_path_;
  std::string remove_path_;
  std::ofstream keep_;
  std::ofstream remove_;
  std::uint64_t kept_ = 0;
  std::uint64_t removed_ = 0;
};

struct PartitionEntry {
  Document doc;
  int label = 1;  // +1 keep, -1 remove
  std::array<double, 8> features{};
  double score = 0.0;
};

inline PartitionCounts write_partition(std::span<const PartitionEntry> entries,
                                       const std::string& keep_path,
                                       const std::string& remove_path,
                                       bool annotate) {
  PartitionWriter writer(keep_path, remove_path, annotate);
  for (const auto& e : entries) writer.write(e.doc, e.label, e.features, e.score);
  writer.close();
  return writer.counts();
}

struct ShardManifest {
  std::vector<std::string> inputs;
  std::size_t shard_count = 0;
  std::vector<std::uint64_t> records_per_shard;
  std::uint64_t total_records = 0;
};

/// Plans a split of the inputs' records into n shards. Shards cover
/// consecutive runs of the global record order, sized as evenly as possible
/// (the first total%n shards hold one extra record), so concatenating the
/// shards in manifest order reproduces the input order.
inline ShardManifest shard(const std::vector<std::string>& inputs, std::size_t n) {
  if (n == 0) throw std::invalid_argument("shard count must be >= 1");
  ShardManifest manifest;
  manifest.inputs = inputs;
  manifest.shard_count = n;
  std::uint64_t total = 0;
  for (const auto& path : inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    while (std::getline(in, line)) ++total;
  }
  manifest.total_records = total;
  manifest.records_per_shard.resize(n);
  const std::uint64_t base = total / n;
  const std::uint64_t extra = total % n;
  for (std::size_t i = 0; i < n; ++i) {
    manifest.records_per_shard[i] = base + (i < extra ? 1 : 0);
  }
  return manifest;
}

}  // namespace dcad

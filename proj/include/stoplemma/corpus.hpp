// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stoplemma/error.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

enum class Gender { male, female, unknown };
enum class Era { pre_independence, post_independence, unknown };

constexpr std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::male: return "male";
    case Gender::female: return "female";
    case Gender::unknown: return "unknown";
  }
  return "unknown";
}

constexpr std::string_view to_string(Era e) {
  switch (e) {
    case Era::pre_independence: return "pre_independence";
    case Era::post_independence: return "post_independence";
    case Era::unknown: return "unknown";
  }
  return "unknown";
}

inline constexpr int kIndependenceYear = 1947;

struct DocumentMeta {
  std::string title;
  std::string author;
  Gender gender = Gender::unknown;
  std::optional<std::string> native_state;
  std::optional<int> year;

  Era era() const {
    if (!year) return Era::unknown;
    return *year < kIndependenceYear ? Era::pre_independence : Era::post_independence;
  }
  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

struct Document {
  std::string path;  // relative to the corpus root, '/' separated
  std::string raw_text;
  std::optional<DocumentMeta> meta;

  friend bool operator==(const Document&, const Document&) = default;
};

struct CorpusSource {
  std::string id;
  std::string name;
  std::string domain_label;
  std::vector<Document> documents;

  friend bool operator==(const CorpusSource&, const CorpusSource&) = default;
};

struct MetadataSummary {
  std::size_t total_docs = 0;
  std::map<Gender, std::size_t> gender_counts;
  double female_fraction = 0.0;
  std::map<std::string, std::size_t> state_counts;  // "unknown" for missing
  std::map<Era, std::size_t> era_counts;
};

inline constexpr std::string_view kMetadataFile = "metadata.tsv";

inline Gender parse_gender(std::string_view cell) {
  std::string lower(trim(cell));
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower.empty() || lower == "unknown") return Gender::unknown;
  if (lower == "male" || lower == "m") return Gender::male;
  if (lower == "female" || lower == "f") return Gender::female;
  throw InputError("unrecognized gender value '" + lower + "'");
}

/// Parses a metadata sidecar: header `file title author gender state year`,
/// tab separated, one row per document, empty cell = unknown.
inline std::map<std::string, DocumentMeta> parse_metadata(std::string_view text,
                                                          const std::string& origin) {
  static constexpr std::string_view kHeader[] = {"file",   "title", "author",
                                                  "gender", "state", "year"};
  std::map<std::string, DocumentMeta> rows;
  const auto lines = split_lines(text);
  bool seen_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = origin + ":" + std::to_string(i + 1);
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != std::size(kHeader)) {
      throw InputError(where + ": expected 6 tab-separated columns, got " +
                       std::to_string(fields.size()));
    }
    if (!seen_header) {
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (trim(fields[c]) != kHeader[c]) {
          throw InputError(where + ": header must be file, title, author, gender, state, year");
        }
      }
      seen_header = true;
      continue;
    }
    const std::string file(trim(fields[0]));
    if (file.empty()) throw InputError(where + ": empty file name");
    DocumentMeta meta;
    meta.title = std::string(trim(fields[1]));
    meta.author = std::string(trim(fields[2]));
    try {
      meta.gender = parse_gender(fields[3]);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (auto state = trim(fields[4]); !state.empty()) meta.native_state = std::string(state);
    if (auto year = trim(fields[5]); !year.empty()) {
      int value = 0;
      auto [end, ec] = std::from_chars(year.data(), year.data() + year.size(), value);
      if (ec != std::errc{} || end != year.data() + year.size()) {
        throw InputError(where + ": year is not an integer: '" + std::string(year) + "'");
      }
      meta.year = value;
    }
    if (!rows.emplace(file, std::move(meta)).second) {
      throw InputError(where + ": duplicate metadata row for " + file);
    }
  }
  if (!seen_header) throw InputError(origin + ": missing header row");
  return rows;
}

/// Loads every `extension` file below `root` (recursively) in lexicographic
/// path order, attaching rows from `root/metadata.tsv` when it exists.
inline CorpusSource load_corpus(const std::filesystem::path& root, std::string id,
                                std::string domain_label, std::string_view extension = ".txt") {
  namespace fs = std::filesystem;
  if (id.empty()) throw InputError("corpus id must be non-empty");
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw InputError("corpus directory not found: " + root.string());
  }

  std::vector<std::string> files;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == extension) {
      files.push_back(fs::relative(it->path(), root).generic_string());
    }
  }
  if (ec) throw InputError("cannot list corpus directory " + root.string() + ": " + ec.message());
  if (files.empty()) {
    throw InputError("corpus " + id + " has no " + std::string(extension) + " files under " +
                     root.string());
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, DocumentMeta> meta;
  const fs::path meta_path = root / kMetadataFile;
  if (fs::is_regular_file(meta_path)) {
    meta = parse_metadata(read_text_file(meta_path), meta_path.string());
    for (const auto& [file, _] : meta) {
      if (!std::binary_search(files.begin(), files.end(), file)) {
        throw InputError(meta_path.string() + ": row for unknown document " + file);
      }
    }
  }

  CorpusSource corpus;
  corpus.id = std::move(id);
  corpus.name = root.filename().empty() ? root.parent_path().filename().string()
                                        : root.filename().string();
  corpus.domain_label = std::move(domain_label);
  corpus.documents.reserve(files.size());
  for (const auto& file : files) {
    Document doc;
    doc.path = file;
    doc.raw_text = read_text_file(root / file);
    if (auto it = meta.find(file); it != meta.end()) doc.meta = it->second;
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

inline MetadataSummary metadata_summary(const CorpusSource& corpus) {
  MetadataSummary summary;
  summary.total_docs = corpus.documents.size();
  for (const Document& doc : corpus.documents) {
    if (doc.meta) {
      ++summary.gender_counts[doc.meta->gender];
      ++summary.state_counts[doc.meta->native_state.value_or("unknown")];
      ++summary.era_counts[doc.meta->era()];
    } else {
      ++summary.gender_counts[Gender::unknown];
      ++summary.state_counts["unknown"];
      ++summary.era_counts[Era::unknown];
    }
  }
  if (summary.total_docs > 0) {
    auto it = summary.gender_counts.find(Gender::female);
    const std::size_t female = it == summary.gender_counts.end() ? 0 : it->second;
    summary.female_fraction =
        static_cast<double>(female) / static_cast<double>(summary.total_docs);
  }
  return summary;
}

}  // namespace stoplemma

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Command implementations behind the `stoplemma` CLI. Each command validates
// every input path first, computes all artifacts in memory, and only then
// writes them, so a failing run leaves no partial output behind.

#pragma once

#include <openssl/evp.h>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stoplemma/assess.hpp"
#include "stoplemma/corpus.hpp"
#include "stoplemma/error.hpp"
#include "stoplemma/freq.hpp"
#include "stoplemma/induce.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/report.hpp"
#include "stoplemma/stats.hpp"

namespace stoplemma::cli {

namespace fs = std::filesystem;
using report::Json;

struct CorpusSpec {
  std::string id;
  std::string path;
  std::string domain_label;
  std::string lexicon_path;  // empty: use RunConfig::lexicon_path
};

struct RankedSpec {
  std::string id;
  std::string path;
};

struct RunConfig {
  std::vector<CorpusSpec> corpora;
  std::vector<RankedSpec> ranked;        // precomputed rankings (overlap, posstats)
  std::vector<std::string> stoplists;    // public stop word lists (induce)
  std::string lexicon_path;              // empty: identity lemmatization
  std::string pos_lexicon_path;
  std::string mapping_path;
  std::string stop_lemmas_path;          // list assessed by `assess`
  std::size_t k_a = kDefaultTopK;
  std::size_t k_b = kDefaultTopK;
  std::size_t k_overlap = 10;
  std::size_t depth = kAllItems;
  ItemKind item_kind = ItemKind::lemma;  // ranking unit for overlap/posstats
  RankVariable rank_variable = RankVariable::rank;
  double threshold = 0.5;
  FilterPolicy policy;
  bool warn_oov = false;
  bool write_tsv = true;
  bool write_json = true;
  unsigned threads = 1;
  fs::path output_dir;
};

/// Artifacts keyed by path relative to the output directory, plus
/// human-readable notes for the terminal.
struct Outputs {
  std::map<std::string, std::string> files;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Provenance

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

/// Content hash of a file, or of a directory's .txt/.tsv files (relative
/// path and content hash of each, in path order).
inline std::string content_hash(const fs::path& path) {
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(path)) {
      const auto ext = e.path().extension();
      if (e.is_regular_file() && (ext == ".txt" || ext == ".tsv")) {
        files.push_back(fs::relative(e.path(), path).generic_string());
      }
    }
    std::sort(files.begin(), files.end());
    std::string manifest;
    for (const auto& f : files) {
      manifest += f + '\t' + content_hash(path / f) + '\n';
    }
    return sha256_hex(manifest);
  }
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

class ProvenanceBuilder {
 public:
  explicit ProvenanceBuilder(std::string command) { json_["command"] = std::move(command); }

  void input(std::string role, const std::string& path) {
    inputs_.push_back({{"role", std::move(role)}, {"path", path}, {"sha256", content_hash(path)}});
  }
  template <typename T>
  void param(const std::string& name, T&& value) {
    params_[name] = std::forward<T>(value);
  }
  Json build() const {
    Json j = json_;
    j["parameters"] = params_;
    j["inputs"] = inputs_;
    return j;
  }

 private:
  Json json_;
  Json params_ = Json::object();
  Json inputs_ = Json::array();
};

inline void policy_params(ProvenanceBuilder& p, const FilterPolicy& policy) {
  p.param("drop_symbols", policy.drop_symbols);
  p.param("drop_latin_words", policy.drop_latin_words);
  p.param("drop_latin_numbers", policy.drop_latin_numbers);
  p.param("drop_devanagari_digits", policy.drop_devanagari_digits);
}

// ---------------------------------------------------------------------------
// Validation and loading

inline void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw InputError(what + " is required");
  if (!fs::is_regular_file(path)) throw InputError(what + " not found: " + path);
}

inline void require_dir(const std::string& path, const std::string& what) {
  if (!fs::is_directory(path)) throw InputError(what + " not found: " + path);
}

inline void require_positive(std::size_t k, const std::string& what) {
  if (k == 0) throw InputError(what + " must be >= 1");
}

inline void validate_corpora(const RunConfig& cfg) {
  std::set<std::string> ids;
  for (const auto& c : cfg.corpora) {
    if (c.id.empty()) throw InputError("corpus id must be non-empty");
    if (!ids.insert(c.id).second) throw InputError("duplicate corpus id: " + c.id);
    require_dir(c.path, "corpus directory for " + c.id);
    if (!c.lexicon_path.empty()) require_file(c.lexicon_path, "lexicon for " + c.id);
  }
  if (!cfg.lexicon_path.empty()) require_file(cfg.lexicon_path, "lexicon");
}

inline void validate_ranked(const RunConfig& cfg) {
  std::set<std::string> ids;
  for (const auto& c : cfg.corpora) ids.insert(c.id);
  for (const auto& r : cfg.ranked) {
    if (r.id.empty()) throw InputError("ranking id must be non-empty");
    if (!ids.insert(r.id).second) throw InputError("duplicate source id: " + r.id);
    require_file(r.path, "ranking for " + r.id);
  }
}

/// Lexicons are cached by path so corpora sharing one load it once.
class LexiconCache {
 public:
  const LemmaLexicon& get(const std::string& path) {
    auto it = cache_.find(path);
    if (it == cache_.end()) {
      it = cache_.emplace(path, path.empty() ? LemmaLexicon("identity") : load_lexicon(path)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, LemmaLexicon> cache_;
};

inline const std::string& lexicon_for(const RunConfig& cfg, const CorpusSpec& c) {
  return c.lexicon_path.empty() ? cfg.lexicon_path : c.lexicon_path;
}

struct CountedCorpus {
  CorpusSource corpus;
  FrequencyTable words;
  FrequencyTable lemmas;
};

inline CountedCorpus count_corpus(const RunConfig& cfg, const CorpusSpec& spec,
                                  LexiconCache& lexicons) {
  CountedCorpus out;
  out.corpus = load_corpus(spec.path, spec.id, spec.domain_label);
  out.words = count_words(out.corpus, cfg.policy, cfg.threads);
  out.lemmas = lemmatize_table(out.words, lexicons.get(lexicon_for(cfg, spec)));
  return out;
}

inline void corpus_inputs(ProvenanceBuilder& p, const RunConfig& cfg) {
  for (const auto& c : cfg.corpora) {
    p.input("corpus:" + c.id, c.path);
    if (!c.lexicon_path.empty()) p.input("lexicon:" + c.id, c.lexicon_path);
  }
  if (!cfg.lexicon_path.empty()) p.input("lexicon", cfg.lexicon_path);
}

/// Rankings for overlap/posstats: corpora first (in configured order), then
/// precomputed ranking files.
inline std::vector<RankedList> collect_rankings(const RunConfig& cfg) {
  LexiconCache lexicons;
  std::vector<RankedList> rankings;
  for (const auto& spec : cfg.corpora) {
    CountedCorpus counted = count_corpus(cfg, spec, lexicons);
    rankings.push_back(
        rank_items(cfg.item_kind == ItemKind::lemma ? counted.lemmas : counted.words));
  }
  for (const auto& r : cfg.ranked) rankings.push_back(load_ranked_list(r.path, r.id));
  return rankings;
}

inline std::string stoplist_id(const std::string& path) { return fs::path(path).stem().string(); }

// ---------------------------------------------------------------------------
// Commands

inline Outputs cmd_freq(const RunConfig& cfg) {
  if (cfg.corpora.empty()) throw InputError("freq: at least one --corpus is required");
  validate_corpora(cfg);

  Outputs out;
  LexiconCache lexicons;
  Json corpora = Json::array();
  std::string table1 = "Source\tUnique Word Count\tUnique Lemma Count\tTotal Tokens\tDomain\n";
  for (const auto& spec : cfg.corpora) {
    CountedCorpus c = count_corpus(cfg, spec, lexicons);
    const RankedList words = rank_items(c.words);
    const RankedList lemmas = rank_items(c.lemmas);
    if (cfg.write_tsv) {
      out.files[spec.id + ".words.tsv"] = report::ranked_tsv(words);
      out.files[spec.id + ".lemmas.tsv"] = report::ranked_tsv(lemmas);
    }
    table1 += spec.id + '\t' + std::to_string(c.words.unique_count()) + '\t' +
              std::to_string(c.lemmas.unique_count()) + '\t' +
              std::to_string(c.words.total_tokens()) + '\t' + spec.domain_label + '\n';

    Json j;
    j["source_id"] = spec.id;
    j["domain"] = spec.domain_label;
    j["documents"] = c.corpus.documents.size();
    j["total_tokens"] = c.words.total_tokens();
    j["unique_word_count"] = c.words.unique_count();
    j["unique_lemma_count"] = c.lemmas.unique_count();
    j["metadata"] = report::metadata_json(metadata_summary(c.corpus));
    if (cfg.warn_oov) {
      const OovStats oov = oov_stats(c.words, lexicons.get(lexicon_for(cfg, spec)));
      j["oov"] = report::oov_json(oov);
      out.notes.push_back(spec.id + ": " + std::to_string(oov.oov_types) + " of " +
                          std::to_string(oov.types) + " word types not in lexicon (" +
                          report::fixed(oov.token_rate()) + " of tokens)");
    }
    corpora.push_back(j);
    out.notes.push_back(spec.id + ": " + std::to_string(c.words.total_tokens()) + " tokens, " +
                        std::to_string(c.words.unique_count()) + " unique words, " +
                        std::to_string(c.lemmas.unique_count()) + " unique lemmas");
  }
  if (cfg.write_tsv) out.files["table1.tsv"] = table1;
  if (cfg.write_json) {
    ProvenanceBuilder prov("freq");
    corpus_inputs(prov, cfg);
    policy_params(prov, cfg.policy);
    Json j;
    j["corpora"] = corpora;
    j["provenance"] = prov.build();
    out.files["freq_report.json"] = report::dump(j);
  }
  return out;
}

inline Outputs cmd_induce(const RunConfig& cfg) {
  if (cfg.corpora.empty()) throw InputError("induce: at least one --corpus is required");
  if (cfg.stoplists.empty()) throw InputError("induce: at least one --stoplist is required");
  validate_corpora(cfg);
  for (const auto& s : cfg.stoplists) require_file(s, "stop word list");
  require_positive(cfg.k_a, "--k-a");
  require_positive(cfg.k_b, "--k-b");

  LexiconCache lexicons;
  std::vector<StopWordList> lists;
  for (const auto& s : cfg.stoplists) lists.push_back(load_stopword_list(s, stoplist_id(s)));
  std::vector<FrequencyTable> tables;
  for (const auto& spec : cfg.corpora) tables.push_back(count_corpus(cfg, spec, lexicons).lemmas);

  const LemmaLexicon& lex = lexicons.get(cfg.lexicon_path);
  const Induction ind = induce(lists, lex, tables, cfg.k_a, cfg.k_b);

  Outputs out;
  out.files["stop_lemmas.txt"] = report::stop_lemma_lines(ind.list);
  if (cfg.write_tsv) {
    out.files["stop_lemmas.tsv"] = report::stop_lemma_tsv(ind.list);
    out.files["set_a.txt"] = report::set_lines(ind.set_a);
    out.files["set_b.txt"] = report::set_lines(ind.set_b);
  }
  if (cfg.write_json) {
    ProvenanceBuilder prov("induce");
    corpus_inputs(prov, cfg);
    for (const auto& s : cfg.stoplists) prov.input("stoplist", s);
    prov.param("k_a", report::k_json(cfg.k_a));
    prov.param("k_b", report::k_json(cfg.k_b));
    policy_params(prov, cfg.policy);
    Json j = report::induction_json(ind);
    Json dups = Json::object();
    for (const auto& l : lists) dups[l.source_id] = l.duplicates_removed;
    j["in_file_duplicates_removed"] = dups;
    j["provenance"] = prov.build();
    out.files["induction_report.json"] = report::dump(j);
  }
  const auto& r = ind.report;
  out.notes.push_back("stop word entries: " + std::to_string(r.raw_word_total) + " -> " +
                      std::to_string(r.deduped_word_total) + " unique; Set A " +
                      std::to_string(r.set_a_size) + ", Set B " + std::to_string(r.set_b_size) +
                      ", final list " + std::to_string(r.final_size));
  return out;
}

inline Outputs cmd_overlap(const RunConfig& cfg) {
  validate_corpora(cfg);
  validate_ranked(cfg);
  require_positive(cfg.k_overlap, "--k");
  if (cfg.corpora.size() + cfg.ranked.size() < 2) {
    throw InputError("overlap: needs at least two sources (--corpus or --ranked)");
  }
  const OverlapReport r = top_k_overlap(collect_rankings(cfg), cfg.k_overlap);

  Outputs out;
  if (cfg.write_tsv) out.files["overlap.tsv"] = report::overlap_tsv(r);
  if (cfg.write_json) {
    ProvenanceBuilder prov("overlap");
    corpus_inputs(prov, cfg);
    for (const auto& s : cfg.ranked) prov.input("ranking:" + s.id, s.path);
    prov.param("k", report::k_json(cfg.k_overlap));
    prov.param("item_kind", std::string(to_string(cfg.item_kind)));
    policy_params(prov, cfg.policy);
    Json j = report::overlap_json(r);
    j["provenance"] = prov.build();
    out.files["overlap_report.json"] = report::dump(j);
  }
  out.notes.push_back(std::to_string(r.source_count) + " sources, " +
                      std::to_string(r.unique_items) + " unique items in top " +
                      report::k_label(r.k) + ", max count " + std::to_string(r.max_count));
  return out;
}

inline Outputs cmd_posstats(const RunConfig& cfg) {
  validate_corpora(cfg);
  validate_ranked(cfg);
  require_file(cfg.pos_lexicon_path, "--pos-lexicon");
  require_positive(cfg.depth, "--depth");
  if (cfg.corpora.empty() && cfg.ranked.empty()) {
    throw InputError("posstats: needs at least one source (--corpus or --ranked)");
  }
  const PosLexicon pos = load_pos_lexicon(cfg.pos_lexicon_path);
  const auto rankings = collect_rankings(cfg);
  const auto groups = default_tag_groups();
  const CorrelationReport r =
      pos_rank_analysis(rankings, pos, groups, cfg.depth, cfg.rank_variable);
  if (r.all_undefined()) {
    throw ComputationError("posstats: correlation undefined for every group and source");
  }

  Outputs out;
  const std::string label = cfg.item_kind == ItemKind::lemma ? "Lemmas" : "Words";
  if (cfg.write_tsv) out.files["table4.tsv"] = report::correlation_tsv(r, label);
  if (cfg.write_json) {
    ProvenanceBuilder prov("posstats");
    corpus_inputs(prov, cfg);
    for (const auto& s : cfg.ranked) prov.input("ranking:" + s.id, s.path);
    prov.input("pos_lexicon", cfg.pos_lexicon_path);
    prov.param("depth", report::k_json(cfg.depth));
    prov.param("rank_variable", std::string(to_string(cfg.rank_variable)));
    prov.param("item_kind", std::string(to_string(cfg.item_kind)));
    policy_params(prov, cfg.policy);
    Json j = report::correlation_json(r, cfg.threshold);
    j["provenance"] = prov.build();
    out.files["correlation_report.json"] = report::dump(j);
  }
  out.notes.push_back(std::string("no POS group has |mean r| above ") +
                      report::fixed(cfg.threshold, 2) + ": " +
                      (reject_pos_hypothesis(r, cfg.threshold) ? "yes" : "no"));
  return out;
}

inline Outputs cmd_assess(const RunConfig& cfg) {
  require_file(cfg.mapping_path, "--mapping");
  require_file(cfg.stop_lemmas_path, "--stop-lemmas");
  if (!cfg.lexicon_path.empty()) require_file(cfg.lexicon_path, "lexicon");

  const TranslationMapping mapping = load_mapping(cfg.mapping_path);
  const LemmaLexicon lex =
      cfg.lexicon_path.empty() ? LemmaLexicon("identity") : load_lexicon(cfg.lexicon_path);
  const StopWordList list = load_stopword_list(cfg.stop_lemmas_path, "stop_lemmas");
  const std::set<std::string, std::less<>> members(list.entries.begin(), list.entries.end());
  const CoverageReport c = assess_coverage(mapping, lex, members);

  Outputs out;
  out.files["coverage.txt"] = report::coverage_summary(c);
  if (cfg.write_json) {
    ProvenanceBuilder prov("assess");
    prov.input("mapping", cfg.mapping_path);
    prov.input("stop_lemmas", cfg.stop_lemmas_path);
    if (!cfg.lexicon_path.empty()) prov.input("lexicon", cfg.lexicon_path);
    Json j = report::coverage_json(c);
    j["provenance"] = prov.build();
    out.files["coverage.json"] = report::dump(j);
  }
  out.notes.push_back(std::to_string(c.hits.size()) + " of " +
                      std::to_string(c.mapped_lemma_set.size()) +
                      " mapped lemmas present in the list");
  return out;
}

/// Writes every artifact under `dir`, creating it if needed.
inline void write_outputs(const fs::path& dir, const Outputs& out) {
  if (dir.empty()) throw InputError("--out is required");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());
  for (const auto& [name, content] : out.files) {
    const fs::path path = dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error("failed writing " + path.string());
  }
}

}  // namespace stoplemma::cli

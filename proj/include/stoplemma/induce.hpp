// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Stop-lemma induction by set algebra:
//   Set A = union over public stop word lists of the lemmatized top-k entries
//   Set B = union over corpora of the top-k most frequent lemmas
//   Set C = A intersect B, ordered by aggregate corpus frequency.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stoplemma/error.hpp"
#include "stoplemma/freq.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/normalize.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

inline constexpr std::size_t kDefaultTopK = 100;

struct StopWordList {
  std::string source_id;
  std::vector<std::string> entries;  // published rank order, no duplicates
  std::size_t duplicates_removed = 0;
};

/// One entry per line; '#' comments and blank lines skipped. Entries are
/// normalized (NFC, single spaces, trimmed) and in-file duplicates dropped,
/// keeping the first occurrence.
inline StopWordList parse_stopword_list(std::string_view text, std::string source_id,
                                        const std::string& origin) {
  StopWordList list;
  list.source_id = std::move(source_id);
  std::set<std::string> seen;
  for (std::string_view line : split_lines(text)) {
    if (is_skippable_line(line)) continue;
    std::string entry(trim(normalize_text(line)));
    if (entry.empty()) continue;
    if (!seen.insert(entry).second) {
      ++list.duplicates_removed;
      continue;
    }
    list.entries.push_back(std::move(entry));
  }
  if (list.entries.empty()) throw InputError(origin + ": stop word list has no entries");
  return list;
}

inline StopWordList load_stopword_list(const std::filesystem::path& path, std::string source_id) {
  return parse_stopword_list(read_text_file(path), std::move(source_id), path.string());
}

namespace detail {

template <typename T>
std::span<const T> head(const std::vector<T>& v, std::size_t k) {
  return std::span<const T>(v.data(), std::min(k, v.size()));
}

}  // namespace detail

/// Word totals over the top-k prefixes of all lists, before and after
/// removing entries repeated across lists.
struct ListTotals {
  std::size_t raw = 0;
  std::size_t deduped = 0;
};

inline ListTotals combined_totals(std::span<const StopWordList> lists, std::size_t k) {
  ListTotals totals;
  std::set<std::string> distinct;
  for (const auto& list : lists) {
    for (const auto& e : detail::head(list.entries, k)) {
      ++totals.raw;
      distinct.insert(e);
    }
  }
  totals.deduped = distinct.size();
  return totals;
}

inline std::set<std::string> build_set_a(std::span<const StopWordList> lists,
                                         const LemmaLexicon& lex, std::size_t k = kDefaultTopK) {
  if (lists.empty()) throw std::invalid_argument("build_set_a: no stop word lists");
  if (k == 0) throw std::invalid_argument("build_set_a: k must be >= 1");
  std::set<std::string> set_a;
  for (const auto& list : lists) {
    const auto prefix = detail::head(list.entries, k);
    const std::set<std::string> words(prefix.begin(), prefix.end());
    set_a.merge(gen_lemma(words, lex));
  }
  return set_a;
}

inline std::set<std::string> build_set_b(std::span<const RankedList> rankings,
                                         std::size_t k = kDefaultTopK) {
  if (rankings.empty()) throw std::invalid_argument("build_set_b: no ranked lemma lists");
  std::set<std::string> set_b;
  for (const auto& ranked : rankings) {
    for (auto& item : top_k(ranked, k)) set_b.insert(std::move(item));
  }
  return set_b;
}

/// Sum of raw lemma counts across the Set B corpora. The final ordering
/// uses this; swap in another reduction here to change the policy.
inline std::map<std::string, std::uint64_t> aggregate_counts(
    std::span<const FrequencyTable> lemma_tables) {
  std::map<std::string, std::uint64_t> total;
  for (const auto& table : lemma_tables) {
    for (const auto& [item, n] : table.counts()) total[item] += n;
  }
  return total;
}

struct Provenance {
  std::vector<std::string> list_ids;
  std::vector<std::string> corpus_ids;
  std::size_t k_a = kDefaultTopK;
  std::size_t k_b = kDefaultTopK;
  std::string lexicon_id;
};

struct StopLemma {
  std::string lemma;
  std::uint64_t aggregate_count = 0;

  friend bool operator==(const StopLemma&, const StopLemma&) = default;
};

struct StopLemmaList {
  std::vector<StopLemma> lemmas;
  Provenance provenance;

  std::size_t size() const { return lemmas.size(); }
  bool contains(std::string_view lemma) const {
    return std::any_of(lemmas.begin(), lemmas.end(),
                       [&](const StopLemma& s) { return s.lemma == lemma; });
  }
};

struct InductionReport {
  std::size_t raw_word_total = 0;
  std::size_t deduped_word_total = 0;
  std::size_t set_a_size = 0;
  std::size_t set_b_size = 0;
  std::size_t final_size = 0;
};

/// Set C = A intersect B, ordered by aggregate count descending with code
/// point tie-break. Every member of the intersection needs a count.
inline StopLemmaList build_final_list(const std::set<std::string>& set_a,
                                      const std::set<std::string>& set_b,
                                      const std::map<std::string, std::uint64_t>& counts) {
  StopLemmaList list;
  std::vector<std::string> common;
  std::set_intersection(set_a.begin(), set_a.end(), set_b.begin(), set_b.end(),
                        std::back_inserter(common));
  for (auto& lemma : common) {
    auto it = counts.find(lemma);
    if (it == counts.end()) {
      throw ComputationError("no aggregate count for stop lemma '" + lemma + "'");
    }
    list.lemmas.push_back({std::move(lemma), it->second});
  }
  std::sort(list.lemmas.begin(), list.lemmas.end(), [](const StopLemma& a, const StopLemma& b) {
    return ranks_before(a.lemma, a.aggregate_count, b.lemma, b.aggregate_count);
  });
  return list;
}

struct Induction {
  std::set<std::string> set_a;
  std::set<std::string> set_b;
  StopLemmaList list;
  InductionReport report;
};

/// The whole pipeline over loaded inputs. `lemma_tables` are the per-corpus
/// lemma frequency tables; they feed both Set B and the final ordering.
inline Induction induce(std::span<const StopWordList> lists, const LemmaLexicon& lex,
                        std::span<const FrequencyTable> lemma_tables, std::size_t k_a,
                        std::size_t k_b) {
  if (lemma_tables.empty()) throw std::invalid_argument("induce: no corpora");
  Induction out;
  std::vector<RankedList> rankings;
  rankings.reserve(lemma_tables.size());
  for (const auto& t : lemma_tables) rankings.push_back(rank_items(t));

  out.set_a = build_set_a(lists, lex, k_a);
  out.set_b = build_set_b(rankings, k_b);
  out.list = build_final_list(out.set_a, out.set_b, aggregate_counts(lemma_tables));

  Provenance& p = out.list.provenance;
  for (const auto& l : lists) p.list_ids.push_back(l.source_id);
  for (const auto& t : lemma_tables) p.corpus_ids.push_back(t.source_id());
  p.k_a = k_a;
  p.k_b = k_b;
  p.lexicon_id = lex.id();

  const ListTotals totals = combined_totals(lists, k_a);
  out.report = {totals.raw, totals.deduped, out.set_a.size(), out.set_b.size(),
                out.list.size()};
  return out;
}

}  // namespace stoplemma

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Raw-frequency tables over words and lemmas, deterministic ranking and
// top-k extraction.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "stoplemma/corpus.hpp"
#include "stoplemma/error.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/normalize.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

enum class ItemKind { word, lemma };

constexpr std::string_view to_string(ItemKind kind) {
  return kind == ItemKind::word ? "word" : "lemma";
}

/// Passing kAllItems as k means "no truncation".
inline constexpr std::size_t kAllItems = std::numeric_limits<std::size_t>::max();

class FrequencyTable {
 public:
  FrequencyTable() = default;
  FrequencyTable(ItemKind kind, std::string source_id)
      : item_kind_(kind), source_id_(std::move(source_id)) {}

  void add(std::string_view item, std::uint64_t n = 1) {
    if (n == 0) return;
    auto it = counts_.find(item);
    if (it == counts_.end()) {
      counts_.emplace(std::string(item), n);
    } else {
      it->second += n;
    }
    total_tokens_ += n;
  }

  /// Key-wise sum. Commutative and associative, so any merge order over
  /// partial tables gives the same result.
  void merge(const FrequencyTable& other) {
    for (const auto& [item, n] : other.counts_) add(item, n);
  }

  std::uint64_t count(std::string_view item) const {
    auto it = counts_.find(item);
    return it == counts_.end() ? 0 : it->second;
  }

  ItemKind item_kind() const { return item_kind_; }
  const std::string& source_id() const { return source_id_; }
  const StringMap<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::size_t unique_count() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.item_kind_ == b.item_kind_ && a.total_tokens_ == b.total_tokens_ &&
           a.counts_ == b.counts_;
  }

 private:
  ItemKind item_kind_ = ItemKind::word;
  std::string source_id_;
  StringMap<std::uint64_t> counts_;
  std::uint64_t total_tokens_ = 0;
};

/// Word counts for one document's raw text.
inline FrequencyTable count_document(std::string_view raw, const FilterPolicy& policy,
                                     std::string source_id = {}) {
  FrequencyTable table(ItemKind::word, std::move(source_id));
  for_each_kept_token(raw, policy, [&](std::string_view surface) { table.add(surface); });
  return table;
}

inline std::vector<FrequencyTable> count_words_per_document(const CorpusSource& corpus,
                                                            const FilterPolicy& policy) {
  std::vector<FrequencyTable> tables;
  tables.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    tables.push_back(count_document(doc.raw_text, policy, corpus.id));
  }
  return tables;
}

/// Word frequencies over every document of `corpus`. With threads > 1 the
/// documents are split into contiguous chunks counted privately and merged.
/// threads == 0 picks the hardware concurrency.
inline FrequencyTable count_words(const CorpusSource& corpus, const FilterPolicy& policy = {},
                                  unsigned threads = 1) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_docs = corpus.documents.size();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n_docs, 1)));

  FrequencyTable total(ItemKind::word, corpus.id);
  if (threads <= 1) {
    for (const auto& doc : corpus.documents) {
      for_each_kept_token(doc.raw_text, policy, [&](std::string_view s) { total.add(s); });
    }
    return total;
  }

  std::vector<FrequencyTable> partial(threads, FrequencyTable(ItemKind::word, corpus.id));
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n_docs + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n_docs, begin + chunk);
        for (std::size_t d = begin; d < end; ++d) {
          for_each_kept_token(corpus.documents[d].raw_text, policy,
                              [&](std::string_view s) { partial[t].add(s); });
        }
      });
    }
  }
  for (const auto& p : partial) total.merge(p);
  return total;
}

/// Re-keys a word table by lemma. Lemmatization is type level, so this is
/// the same as lemmatizing every token before counting.
inline FrequencyTable lemmatize_table(const FrequencyTable& words, const LemmaLexicon& lex) {
  FrequencyTable lemmas(ItemKind::lemma, words.source_id());
  for (const auto& [word, n] : words.counts()) lemmas.add(lex.lookup(word), n);
  return lemmas;
}

inline FrequencyTable count_lemmas(const CorpusSource& corpus, const FilterPolicy& policy,
                                   const LemmaLexicon& lex, unsigned threads = 1) {
  return lemmatize_table(count_words(corpus, policy, threads), lex);
}

/// Out-of-vocabulary rates of a word table against a lexicon.
struct OovStats {
  std::size_t types = 0;
  std::size_t oov_types = 0;
  std::uint64_t tokens = 0;
  std::uint64_t oov_tokens = 0;

  double type_rate() const { return types ? double(oov_types) / double(types) : 0.0; }
  double token_rate() const { return tokens ? double(oov_tokens) / double(tokens) : 0.0; }
};

inline OovStats oov_stats(const FrequencyTable& words, const LemmaLexicon& lex) {
  OovStats s;
  for (const auto& [word, n] : words.counts()) {
    ++s.types;
    s.tokens += n;
    if (!lex.contains(word)) {
      ++s.oov_types;
      s.oov_tokens += n;
    }
  }
  return s;
}

struct RankedEntry {
  std::size_t rank = 0;  // 1-based
  std::string item;
  std::uint64_t count = 0;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

/// Items ordered by count descending; equal counts by ascending code point
/// order (byte order of UTF-8 strings).
struct RankedList {
  std::string source_id;
  std::vector<RankedEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// The ranking order: higher count first, then code point order.
inline bool ranks_before(std::string_view a_item, std::uint64_t a_count, std::string_view b_item,
                         std::uint64_t b_count) {
  if (a_count != b_count) return a_count > b_count;
  return a_item < b_item;
}

inline RankedList rank_items(const FrequencyTable& table) {
  RankedList ranked;
  ranked.source_id = table.source_id();
  ranked.entries.reserve(table.unique_count());
  for (const auto& [item, n] : table.counts()) ranked.entries.push_back({0, item, n});
  std::sort(ranked.entries.begin(), ranked.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              return ranks_before(a.item, a.count, b.item, b.count);
            });
  for (std::size_t i = 0; i < ranked.entries.size(); ++i) ranked.entries[i].rank = i + 1;
  return ranked;
}

/// First min(k, n) items of a ranking. k == kAllItems returns everything.
inline std::vector<std::string> top_k(const RankedList& ranked, std::size_t k) {
  if (k == 0) throw std::invalid_argument("top_k: k must be >= 1");
  const std::size_t n = std::min(k, ranked.size());
  std::vector<std::string> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) items.push_back(ranked.entries[i].item);
  return items;
}

/// Builds a ranking from items already in rank order (e.g. a published
/// top-ten row). Such lists carry no counts, so entry i of n gets the
/// synthetic count n - i, which keeps the ranking invariants intact.
inline RankedList ranked_from_order(std::string source_id, const std::vector<std::string>& items) {
  RankedList ranked;
  ranked.source_id = std::move(source_id);
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < n; ++i) {
    ranked.entries.push_back({i + 1, items[i], static_cast<std::uint64_t>(n - i)});
  }
  return ranked;
}

/// Reads a ranking file: one `item` or `item<TAB>count` per line in rank
/// order. Rows must either all carry counts or none; counts must not
/// increase and equal counts must follow code point order.
inline RankedList parse_ranked_list(std::string_view text, std::string source_id,
                                    const std::string& origin) {
  std::vector<std::string> items;
  std::vector<std::uint64_t> counts;
  std::set<std::string, std::less<>> seen;
  const auto lines = split_lines(text);
  std::optional<bool> with_counts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_skippable_line(lines[i])) continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    const auto fields = split_fields(lines[i]);
    if (fields.size() > 2 || trim(fields[0]).empty()) {
      throw InputError(where + ": expected 'item' or 'item<TAB>count'");
    }
    const bool has_count = fields.size() == 2;
    if (with_counts && *with_counts != has_count) {
      throw InputError(where + ": mixed rows with and without counts");
    }
    with_counts = has_count;
    std::string item = normalize_text(trim(fields[0]));
    if (!seen.insert(item).second) {
      throw InputError(where + ": duplicate item '" + item + "'");
    }
    items.push_back(std::move(item));
    if (has_count) {
      const auto c = trim(fields[1]);
      std::uint64_t value = 0;
      auto [end, ec] = std::from_chars(c.data(), c.data() + c.size(), value);
      if (ec != std::errc{} || end != c.data() + c.size() || value == 0) {
        throw InputError(where + ": count must be a positive integer");
      }
      if (!counts.empty() &&
          !ranks_before(items[items.size() - 2], counts.back(), items.back(), value)) {
        throw InputError(where + ": rows are not in rank order");
      }
      counts.push_back(value);
    }
  }
  if (items.empty()) throw InputError(origin + ": ranking is empty");
  if (!with_counts.value_or(false)) return ranked_from_order(std::move(source_id), items);

  RankedList ranked;
  ranked.source_id = std::move(source_id);
  for (std::size_t i = 0; i < items.size(); ++i) {
    ranked.entries.push_back({i + 1, std::move(items[i]), counts[i]});
  }
  return ranked;
}

inline RankedList load_ranked_list(const std::filesystem::path& path, std::string source_id) {
  return parse_ranked_list(read_text_file(path), std::move(source_id), path.string());
}

}  // namespace stoplemma

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "stoplemma/error.hpp"
#include "stoplemma/normalize.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

/// Transparent hash so string-keyed maps can be probed with string_view.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

/// Surface form -> lemma table with identity fallback. Immutable after
/// load, so concurrent lookups need no synchronization.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;
  explicit LemmaLexicon(std::string id) : id_(std::move(id)) {}

  /// Adds an entry; both sides are NFC-normalized. Re-adding the same pair is
  /// a no-op and returns false; a conflicting lemma throws InputError.
  bool add(std::string_view surface, std::string_view lemma) {
    std::string s = unicode::to_nfc(surface);
    std::string l = unicode::to_nfc(lemma);
    if (s.empty() || l.empty()) throw InputError("lexicon entries must be non-empty");
    auto [it, inserted] = entries_.try_emplace(std::move(s), l);
    if (!inserted && it->second != l) {
      throw InputError("conflicting lemma for '" + it->first + "': '" + it->second + "' vs '" +
                       l + "'");
    }
    return inserted;
  }

  /// The entry for `word`, or `word` itself when absent.
  std::string_view lookup(std::string_view word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? word : std::string_view(it->second);
  }

  bool contains(std::string_view word) const { return entries_.find(word) != entries_.end(); }
  std::size_t entry_count() const { return entries_.size(); }
  const StringMap<std::string>& entries() const { return entries_; }
  const std::string& id() const { return id_; }

 private:
  std::string id_;
  StringMap<std::string> entries_;
};

/// Parses `surface<TAB>lemma` lines; '#' comments and blank lines skipped.
inline LemmaLexicon parse_lexicon(std::string_view text, const std::string& origin) {
  LemmaLexicon lex(origin);
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_skippable_line(lines[i])) continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
      throw InputError(where + ": expected 'surface<TAB>lemma'");
    }
    try {
      lex.add(trim(fields[0]), trim(fields[1]));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return lex;
}

inline LemmaLexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_text_file(path), path.string());
}

inline std::string lemmatize(std::string_view word, const LemmaLexicon& lex) {
  if (word.empty()) throw std::invalid_argument("lemmatize: empty word");
  return std::string(lex.lookup(word));
}

/// Lemmatizes a whitespace-separated phrase token by token and rejoins the
/// lemmas with single spaces.
inline std::string lemmatize_phrase(std::string_view phrase, const LemmaLexicon& lex) {
  std::string out;
  std::size_t pos = 0;
  while (pos < phrase.size()) {
    const auto start = phrase.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    auto end = phrase.find(' ', start);
    if (end == std::string_view::npos) end = phrase.size();
    if (!out.empty()) out.push_back(' ');
    out.append(lex.lookup(phrase.substr(start, end - start)));
    pos = end;
  }
  if (out.empty()) throw std::invalid_argument("lemmatize_phrase: empty phrase");
  return out;
}

/// Image of a word set under lemmatization. Multi-word entries are handled
/// by lemmatize_phrase.
inline std::set<std::string> gen_lemma(const std::set<std::string>& words,
                                       const LemmaLexicon& lex) {
  std::set<std::string> lemmas;
  for (const auto& w : words) lemmas.insert(lemmatize_phrase(w, lex));
  return lemmas;
}

}  // namespace stoplemma

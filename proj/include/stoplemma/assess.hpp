// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stoplemma/error.hpp"
#include "stoplemma/induce.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/normalize.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

/// External (e.g. English) stop words mapped to Hindi surface forms. A word
/// is either mapped or explicitly untranslatable, never both.
struct TranslationMapping {
  std::map<std::string, std::vector<std::string>> pairs;
  std::set<std::string> untranslatable;

  std::size_t external_total() const { return pairs.size() + untranslatable.size(); }
};

inline constexpr std::string_view kUntranslatable = "!";

/// Lines are `external<TAB>form[,form...]` or `external<TAB>!`.
inline TranslationMapping parse_mapping(std::string_view text, const std::string& origin) {
  TranslationMapping mapping;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_skippable_line(lines[i])) continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
      throw InputError(where + ": expected 'external<TAB>form[,form...]' or 'external<TAB>!'");
    }
    std::string external(trim(fields[0]));
    const std::string_view target = trim(fields[1]);

    if (target == kUntranslatable) {
      if (mapping.pairs.contains(external)) {
        throw InputError(where + ": '" + external + "' is both mapped and untranslatable");
      }
      mapping.untranslatable.insert(std::move(external));
      continue;
    }

    std::vector<std::string> forms;
    for (std::string_view f : split_fields(target, ',')) {
      std::string form(trim(normalize_text(f)));
      if (form.empty()) throw InputError(where + ": empty Hindi form");
      if (std::find(forms.begin(), forms.end(), form) == forms.end()) forms.push_back(form);
    }
    if (mapping.untranslatable.contains(external)) {
      throw InputError(where + ": '" + external + "' is both mapped and untranslatable");
    }
    auto [it, inserted] = mapping.pairs.try_emplace(external, forms);
    if (!inserted && it->second != forms) {
      throw InputError(where + ": conflicting translations for '" + external + "'");
    }
  }
  return mapping;
}

inline TranslationMapping load_mapping(const std::filesystem::path& path) {
  return parse_mapping(read_text_file(path), path.string());
}

struct CoverageReport {
  std::size_t external_total = 0;
  std::size_t untranslatable_count = 0;
  std::set<std::string> mapped_lemma_set;
  std::set<std::string> hits;
  std::set<std::string> misses;
  std::optional<double> coverage_ratio;  // absent when nothing was mapped
};

/// Lemmatizes every Hindi form of the mapping and checks each resulting
/// lemma against `stop_lemmas`. Untranslatable words only count towards
/// external_total.
inline CoverageReport assess_coverage(const TranslationMapping& mapping, const LemmaLexicon& lex,
                                      const std::set<std::string, std::less<>>& stop_lemmas) {
  CoverageReport report;
  report.external_total = mapping.external_total();
  report.untranslatable_count = mapping.untranslatable.size();
  for (const auto& [_, forms] : mapping.pairs) {
    for (const auto& form : forms) report.mapped_lemma_set.insert(lemmatize_phrase(form, lex));
  }
  for (const auto& lemma : report.mapped_lemma_set) {
    (stop_lemmas.contains(lemma) ? report.hits : report.misses).insert(lemma);
  }
  if (!report.mapped_lemma_set.empty()) {
    report.coverage_ratio = static_cast<double>(report.hits.size()) /
                            static_cast<double>(report.mapped_lemma_set.size());
  }
  return report;
}

inline CoverageReport assess_coverage(const TranslationMapping& mapping, const LemmaLexicon& lex,
                                      const StopLemmaList& list) {
  std::set<std::string, std::less<>> members;
  for (const auto& s : list.lemmas) members.insert(s.lemma);
  return assess_coverage(mapping, lex, members);
}

}  // namespace stoplemma

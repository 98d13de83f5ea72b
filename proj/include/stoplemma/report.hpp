// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// TSV and JSON renderings of the analysis results. Every renderer is a pure
// function of its input, so identical inputs give byte-identical output.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "stoplemma/assess.hpp"
#include "stoplemma/corpus.hpp"
#include "stoplemma/freq.hpp"
#include "stoplemma/induce.hpp"
#include "stoplemma/stats.hpp"

namespace stoplemma::report {

using Json = nlohmann::ordered_json;

inline Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

/// Fixed-precision decimal, or "NA" when absent.
inline std::string fixed(const std::optional<double>& v, int digits = 4) {
  if (!v) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, *v);
  std::string s = buf;
  // Avoid "-0.0000".
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

inline std::string k_label(std::size_t k) {
  return k == kAllItems ? std::string("all") : std::to_string(k);
}

inline Json k_json(std::size_t k) { return k == kAllItems ? Json("all") : Json(k); }

/// `item<TAB>count` lines in rank order.
inline std::string ranked_tsv(const RankedList& ranked) {
  std::string out;
  for (const auto& e : ranked.entries) {
    out += e.item;
    out += '\t';
    out += std::to_string(e.count);
    out += '\n';
  }
  return out;
}

inline Json table_json(const FrequencyTable& t) {
  Json j;
  j["source_id"] = t.source_id();
  j["item_kind"] = std::string(to_string(t.item_kind()));
  j["total_tokens"] = t.total_tokens();
  j["unique_count"] = t.unique_count();
  return j;
}

inline Json metadata_json(const MetadataSummary& s) {
  Json j;
  j["total_docs"] = s.total_docs;
  Json gender = Json::object();
  for (const auto& [g, n] : s.gender_counts) gender[std::string(to_string(g))] = n;
  j["gender_counts"] = gender;
  j["female_fraction"] = s.female_fraction;
  Json states = Json::object();
  for (const auto& [state, n] : s.state_counts) states[state] = n;
  j["state_counts"] = states;
  Json eras = Json::object();
  for (const auto& [e, n] : s.era_counts) eras[std::string(to_string(e))] = n;
  j["era_counts"] = eras;
  return j;
}

inline Json oov_json(const OovStats& s) {
  Json j;
  j["types"] = s.types;
  j["oov_types"] = s.oov_types;
  j["tokens"] = s.tokens;
  j["oov_tokens"] = s.oov_tokens;
  j["type_rate"] = s.type_rate();
  j["token_rate"] = s.token_rate();
  return j;
}

/// One lemma per line in final order.
inline std::string stop_lemma_lines(const StopLemmaList& list) {
  std::string out;
  for (const auto& s : list.lemmas) {
    out += s.lemma;
    out += '\n';
  }
  return out;
}

inline std::string stop_lemma_tsv(const StopLemmaList& list) {
  std::string out;
  for (const auto& s : list.lemmas) {
    out += s.lemma;
    out += '\t';
    out += std::to_string(s.aggregate_count);
    out += '\n';
  }
  return out;
}

inline std::string set_lines(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    out += s;
    out += '\n';
  }
  return out;
}

inline Json induction_json(const Induction& ind) {
  Json j;
  const InductionReport& r = ind.report;
  j["raw_word_total"] = r.raw_word_total;
  j["deduped_word_total"] = r.deduped_word_total;
  j["set_a_size"] = r.set_a_size;
  j["set_b_size"] = r.set_b_size;
  j["final_size"] = r.final_size;
  const Provenance& p = ind.list.provenance;
  Json prov;
  prov["list_ids"] = p.list_ids;
  prov["corpus_ids"] = p.corpus_ids;
  prov["k_a"] = k_json(p.k_a);
  prov["k_b"] = k_json(p.k_b);
  prov["lexicon_id"] = p.lexicon_id;
  j["list_provenance"] = prov;
  Json lemmas = Json::array();
  for (const auto& s : ind.list.lemmas) lemmas.push_back({{"lemma", s.lemma}, {"count", s.aggregate_count}});
  j["stop_lemmas"] = lemmas;
  return j;
}

inline std::string overlap_tsv(const OverlapReport& r) {
  std::string out;
  for (const auto& [item, n] : ordered_counts(r)) {
    out += item;
    out += '\t';
    out += std::to_string(n);
    out += '\n';
  }
  return out;
}

inline Json overlap_json(const OverlapReport& r) {
  Json j;
  j["k"] = k_json(r.k);
  j["source_count"] = r.source_count;
  j["unique_items"] = r.unique_items;
  j["max_count"] = r.max_count;
  j["has_short_lists"] = r.has_short_lists;
  Json counts = Json::array();
  for (const auto& [item, n] : ordered_counts(r)) counts.push_back({{"item", item}, {"count", n}});
  j["counts"] = counts;
  return j;
}

/// Rows shaped like a descriptive-statistics table: group, source list,
/// mean/sd/max/min of r, mean/sd of p, and the number of defined cells.
inline std::string correlation_tsv(const CorrelationReport& r, std::string_view list_label) {
  std::string out =
      "Part of Speech\tSource List\tMean\tSD\tMax\tMin\tP Mean\tP SD\tDefined\tUndefined\n";
  for (const auto& g : r.groups) {
    const auto& s = g.r_stats;
    out += g.group.name;
    out += '\t';
    out += list_label;
    out += '\t' + fixed(s ? std::optional(s->mean) : std::nullopt);
    out += '\t' + fixed(s ? s->sd : std::nullopt);
    out += '\t' + fixed(s ? std::optional(s->max) : std::nullopt);
    out += '\t' + fixed(s ? std::optional(s->min) : std::nullopt);
    out += '\t' + fixed(g.p_mean);
    out += '\t' + fixed(g.p_sd);
    out += '\t' + std::to_string(g.cells.size() - g.undefined_cells);
    out += '\t' + std::to_string(g.undefined_cells);
    out += '\n';
  }
  return out;
}

inline Json correlation_json(const CorrelationReport& r, double threshold) {
  Json j;
  j["depth"] = k_json(r.depth);
  j["rank_variable"] = std::string(to_string(r.variable));
  j["sources"] = r.source_ids;
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json gj;
    gj["group"] = g.group.name;
    gj["tags"] = Json(std::vector<std::string>(g.group.members.begin(), g.group.members.end()));
    Json cells = Json::array();
    for (const auto& c : g.cells) {
      Json cj;
      cj["source"] = c.source_id;
      cj["n"] = c.n;
      if (c.result) {
        cj["r"] = c.result->r;
        cj["p"] = c.result->p;
        cj["n1"] = c.result->n1;
        cj["n0"] = c.result->n0;
      } else {
        cj["undefined"] = c.error;
      }
      cells.push_back(cj);
    }
    gj["cells"] = cells;
    if (g.r_stats) {
      gj["r_mean"] = g.r_stats->mean;
      gj["r_sd"] = optional_number(g.r_stats->sd);
      gj["r_max"] = g.r_stats->max;
      gj["r_min"] = g.r_stats->min;
    } else {
      gj["r_mean"] = nullptr;
    }
    gj["p_mean"] = optional_number(g.p_mean);
    gj["p_sd"] = optional_number(g.p_sd);
    gj["undefined_cells"] = g.undefined_cells;
    groups.push_back(gj);
  }
  j["groups"] = groups;
  j["threshold"] = threshold;
  j["reject_pos_hypothesis"] = reject_pos_hypothesis(r, threshold);
  return j;
}

inline Json coverage_json(const CoverageReport& c) {
  Json j;
  j["external_total"] = c.external_total;
  j["untranslatable_count"] = c.untranslatable_count;
  j["mapped_lemma_count"] = c.mapped_lemma_set.size();
  j["hit_count"] = c.hits.size();
  j["miss_count"] = c.misses.size();
  j["coverage_ratio"] = optional_number(c.coverage_ratio);
  j["hits"] = c.hits;
  j["misses"] = c.misses;
  return j;
}

inline std::string coverage_summary(const CoverageReport& c) {
  std::string out;
  out += "external words:      " + std::to_string(c.external_total) + "\n";
  out += "untranslatable:      " + std::to_string(c.untranslatable_count) + "\n";
  out += "unique mapped lemmas: " + std::to_string(c.mapped_lemma_set.size()) + "\n";
  out += "present in list:     " + std::to_string(c.hits.size()) + "\n";
  out += "coverage:            ";
  out += c.coverage_ratio ? std::to_string(c.hits.size()) + "/" +
                                std::to_string(c.mapped_lemma_set.size()) + " (" +
                                fixed(c.coverage_ratio) + ")"
                          : std::string("undefined (nothing mapped)");
  out += "\n";
  if (!c.misses.empty()) {
    out += "missing:";
    for (const auto& m : c.misses) out += " " + m;
    out += "\n";
  }
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace stoplemma::report

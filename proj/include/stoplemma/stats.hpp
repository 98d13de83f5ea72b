// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Consistency of top-k lists across sources and point-biserial correlation
// between POS-group membership and frequency rank.

#pragma once

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stoplemma/error.hpp"
#include "stoplemma/freq.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/text_io.hpp"

namespace stoplemma {

// ---------------------------------------------------------------------------
// Top-k overlap

struct OverlapReport {
  std::size_t k = 0;
  std::size_t source_count = 0;
  std::map<std::string, std::size_t> counts;  // item -> #sources whose top-k holds it
  std::size_t unique_items = 0;
  std::size_t max_count = 0;
  // Set when some source has fewer than k items; the sum of counts is then
  // below k * source_count.
  bool has_short_lists = false;
};

inline OverlapReport top_k_overlap(std::span<const RankedList> lists, std::size_t k) {
  if (lists.size() < 2) throw std::invalid_argument("top_k_overlap: need at least two lists");
  OverlapReport report;
  report.k = k;
  report.source_count = lists.size();
  for (const auto& list : lists) {
    if (list.size() < k) report.has_short_lists = true;
    const auto items = top_k(list, k);
    for (const auto& item : std::set<std::string>(items.begin(), items.end())) {
      ++report.counts[item];
    }
  }
  report.unique_items = report.counts.size();
  for (const auto& [_, c] : report.counts) report.max_count = std::max(report.max_count, c);
  return report;
}

/// Overlap counts ordered for export: count descending, code point tie-break.
inline std::vector<std::pair<std::string, std::size_t>> ordered_counts(const OverlapReport& r) {
  std::vector<std::pair<std::string, std::size_t>> rows(r.counts.begin(), r.counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return rows;
}

// ---------------------------------------------------------------------------
// Point-biserial correlation

struct PointBiserial {
  double r = 0.0;
  double p = 1.0;  // two-tailed
  std::size_t n1 = 0;
  std::size_t n0 = 0;
};

/// Two-tailed p-value of a correlation coefficient from the t statistic
/// t = r * sqrt((n - 2) / (1 - r^2)) with n - 2 degrees of freedom.
inline double correlation_p_value(double r, std::size_t n) {
  if (n < 3) throw std::invalid_argument("correlation_p_value: n must be >= 3");
  const double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = std::abs(r) * std::sqrt(df / denom);
  boost::math::students_t dist(df);
  return std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, t)), 0.0, 1.0);
}

/// r = ((M1 - M0) / s_n) * sqrt(n1 n0 / n^2), where M1 and M0 are the mean
/// values for members and non-members and s_n is the population standard
/// deviation of all values.
inline PointBiserial point_biserial(std::span<const int> membership,
                                    std::span<const double> values) {
  const std::size_t n = membership.size();
  if (values.size() != n) throw std::invalid_argument("point_biserial: length mismatch");
  if (n < 3) throw std::invalid_argument("point_biserial: need at least 3 observations");

  PointBiserial out;
  double sum1 = 0.0, sum0 = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (membership[i] == 1) {
      ++out.n1;
      sum1 += values[i];
    } else if (membership[i] == 0) {
      ++out.n0;
      sum0 += values[i];
    } else {
      throw std::invalid_argument("point_biserial: membership values must be 0 or 1");
    }
    sum += values[i];
  }
  if (out.n1 == 0 || out.n0 == 0) {
    throw UndefinedCorrelation("point-biserial correlation undefined: constant membership");
  }
  const double dn = static_cast<double>(n);
  const double mean = sum / dn;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / dn);
  if (!(sd > 0.0)) {
    throw UndefinedCorrelation("point-biserial correlation undefined: zero variance");
  }
  const double m1 = sum1 / static_cast<double>(out.n1);
  const double m0 = sum0 / static_cast<double>(out.n0);
  const double weight =
      std::sqrt(static_cast<double>(out.n1) * static_cast<double>(out.n0) / (dn * dn));
  out.r = std::clamp((m1 - m0) / sd * weight, -1.0, 1.0);
  out.p = correlation_p_value(out.r, n);
  return out;
}

// ---------------------------------------------------------------------------
// Descriptive statistics

struct Descriptive {
  double mean = 0.0;
  std::optional<double> sd;  // sample sd; absent for a single value
  double max = 0.0;
  double min = 0.0;
};

inline Descriptive descriptive_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("descriptive_stats: empty input");
  Descriptive d;
  double sum = 0.0;
  d.max = d.min = values.front();
  for (double v : values) {
    sum += v;
    d.max = std::max(d.max, v);
    d.min = std::min(d.min, v);
  }
  const double n = static_cast<double>(values.size());
  d.mean = sum / n;
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - d.mean) * (v - d.mean);
    d.sd = std::sqrt(ss / (n - 1.0));
  }
  return d;
}

// ---------------------------------------------------------------------------
// POS-rank analysis

inline constexpr std::string_view kOtherTag = "other";

class PosLexicon {
 public:
  void add(std::string_view item, std::string_view tag) {
    if (item.empty() || tag.empty()) throw InputError("POS lexicon entries must be non-empty");
    auto [it, inserted] = tags_.try_emplace(unicode::to_nfc(item), std::string(tag));
    if (!inserted && it->second != tag) {
      throw InputError("conflicting tags for '" + it->first + "': " + it->second + " vs " +
                       std::string(tag));
    }
  }
  std::string_view tag(std::string_view item) const {
    auto it = tags_.find(item);
    return it == tags_.end() ? kOtherTag : std::string_view(it->second);
  }
  std::size_t size() const { return tags_.size(); }

 private:
  StringMap<std::string> tags_;
};

inline PosLexicon parse_pos_lexicon(std::string_view text, const std::string& origin) {
  PosLexicon lex;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_skippable_line(lines[i])) continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
      throw InputError(where + ": expected 'item<TAB>tag'");
    }
    try {
      lex.add(trim(fields[0]), trim(fields[1]));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return lex;
}

inline PosLexicon load_pos_lexicon(const std::filesystem::path& path) {
  return parse_pos_lexicon(read_text_file(path), path.string());
}

struct TagGroup {
  std::string name;
  std::set<std::string, std::less<>> members;
};

/// Nouns, post/pronouns, symbols, verbs, quantifiers, negation, conjunctions.
inline std::vector<TagGroup> default_tag_groups() {
  return {
      {"NN/NNP/NNPC", {"NN", "NNP", "NNPC"}},
      {"PSP/PRP", {"PSP", "PRP"}},
      {"SYM", {"SYM"}},
      {"VM", {"VM"}},
      {"QC/QF/QO", {"QC", "QF", "QO"}},
      {"NEG", {"NEG"}},
      {"CC", {"CC"}},
  };
}

/// What the membership indicator is correlated against.
enum class RankVariable { rank, frequency };

constexpr std::string_view to_string(RankVariable v) {
  return v == RankVariable::rank ? "rank" : "frequency";
}

struct CorrelationCell {
  std::string source_id;
  std::size_t n = 0;
  std::optional<PointBiserial> result;
  std::string error;  // set when result is absent
};

struct GroupCorrelation {
  TagGroup group;
  std::vector<CorrelationCell> cells;  // one per source, input order
  std::optional<Descriptive> r_stats;  // over defined cells only
  std::optional<double> p_mean;
  std::optional<double> p_sd;
  std::size_t undefined_cells = 0;
};

struct CorrelationReport {
  std::size_t depth = kAllItems;
  RankVariable variable = RankVariable::rank;
  std::vector<std::string> source_ids;
  std::vector<GroupCorrelation> groups;

  bool all_undefined() const {
    return std::all_of(groups.begin(), groups.end(),
                       [](const GroupCorrelation& g) { return !g.r_stats; });
  }
};

/// For each (group, source): membership[i] = 1 iff the tag of the item at
/// rank i is in the group, over the top `depth` entries, correlated with the
/// rank (or raw count). Cells that are undefined are recorded, excluded
/// from the group's descriptive statistics, and never abort the analysis.
inline CorrelationReport pos_rank_analysis(std::span<const RankedList> lists,
                                           const PosLexicon& lex,
                                           std::span<const TagGroup> groups,
                                           std::size_t depth = kAllItems,
                                           RankVariable variable = RankVariable::rank) {
  if (depth == 0) throw std::invalid_argument("pos_rank_analysis: depth must be >= 1");
  CorrelationReport report;
  report.depth = depth;
  report.variable = variable;
  for (const auto& list : lists) report.source_ids.push_back(list.source_id);

  for (const TagGroup& group : groups) {
    GroupCorrelation row;
    row.group = group;
    std::vector<double> rs, ps;
    for (const auto& list : lists) {
      CorrelationCell cell;
      cell.source_id = list.source_id;
      const std::size_t n = std::min(depth, list.size());
      cell.n = n;
      std::vector<int> membership(n);
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) {
        const RankedEntry& e = list.entries[i];
        membership[i] = group.members.contains(lex.tag(e.item)) ? 1 : 0;
        values[i] = variable == RankVariable::rank ? static_cast<double>(e.rank)
                                                   : static_cast<double>(e.count);
      }
      try {
        cell.result = point_biserial(membership, values);
        rs.push_back(cell.result->r);
        ps.push_back(cell.result->p);
      } catch (const UndefinedCorrelation& e) {
        cell.error = e.what();
      } catch (const std::invalid_argument& e) {
        cell.error = e.what();
      }
      if (!cell.result) ++row.undefined_cells;
      row.cells.push_back(std::move(cell));
    }
    if (!rs.empty()) {
      row.r_stats = descriptive_stats(rs);
      const Descriptive pd = descriptive_stats(ps);
      row.p_mean = pd.mean;
      row.p_sd = pd.sd;
    }
    report.groups.push_back(std::move(row));
  }
  return report;
}

/// True when no group's mean coefficient exceeds `threshold` in magnitude,
/// i.e. POS membership does not explain frequency rank.
inline bool reject_pos_hypothesis(const CorrelationReport& report, double threshold = 0.5) {
  return std::none_of(report.groups.begin(), report.groups.end(), [&](const GroupCorrelation& g) {
    return g.r_stats && std::abs(g.r_stats->mean) > threshold;
  });
}

}  // namespace stoplemma

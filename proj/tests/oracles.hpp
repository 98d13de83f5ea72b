// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Test-only reference computations. Nothing here calls into the library's
// counting, ranking or statistics code; each oracle recomputes its answer
// from first principles so it can check the implementation independently.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Counting and set algebra

using Counts = std::map<std::string, std::uint64_t>;

inline Counts count(const std::vector<std::string>& tokens) {
  Counts c;
  for (const auto& t : tokens) ++c[t];
  return c;
}

inline std::string lookup(const std::map<std::string, std::string>& lex, const std::string& w) {
  auto it = lex.find(w);
  return it == lex.end() ? w : it->second;
}

/// Token-level lemmatization followed by counting.
inline Counts count_lemmas(const std::vector<std::string>& tokens,
                           const std::map<std::string, std::string>& lex) {
  Counts c;
  for (const auto& t : tokens) ++c[lookup(lex, t)];
  return c;
}

/// Items sorted by count descending, then byte order.
inline std::vector<std::pair<std::string, std::uint64_t>> ranked(const Counts& c) {
  std::vector<std::pair<std::string, std::uint64_t>> v(c.begin(), c.end());
  // Selection-style ordering keeps this obviously independent of std::sort
  // comparators used by the library.
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const bool better = v[j].second > v[best].second ||
                          (v[j].second == v[best].second && v[j].first < v[best].first);
      if (better) best = j;
    }
    std::swap(v[i], v[best]);
  }
  return v;
}

inline std::set<std::string> top(const Counts& c, std::size_t k) {
  std::set<std::string> s;
  const auto r = ranked(c);
  for (std::size_t i = 0; i < r.size() && i < k; ++i) s.insert(r[i].first);
  return s;
}

inline std::set<std::string> set_a(const std::vector<std::vector<std::string>>& lists,
                                   const std::map<std::string, std::string>& lex, std::size_t k) {
  std::set<std::string> a;
  for (const auto& list : lists) {
    for (std::size_t i = 0; i < list.size() && i < k; ++i) a.insert(lookup(lex, list[i]));
  }
  return a;
}

inline std::set<std::string> set_b(const std::vector<Counts>& corpora, std::size_t k) {
  std::set<std::string> b;
  for (const auto& c : corpora) {
    const auto t = top(c, k);
    b.insert(t.begin(), t.end());
  }
  return b;
}

/// Final list: members of both sets, ordered by summed count then bytes.
inline std::vector<std::pair<std::string, std::uint64_t>> final_list(
    const std::set<std::string>& a, const std::set<std::string>& b,
    const std::vector<Counts>& corpora) {
  Counts sums;
  for (const auto& item : a) {
    if (!b.count(item)) continue;
    std::uint64_t total = 0;
    for (const auto& c : corpora) {
      auto it = c.find(item);
      if (it != c.end()) total += it->second;
    }
    sums[item] = total;
  }
  return ranked(sums);
}

// ---------------------------------------------------------------------------
// Statistics

/// Textbook Pearson correlation in long double.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

/// Continued fraction for the regularized incomplete beta (modified Lentz).
inline long double beta_cf(long double a, long double b, long double x) {
  constexpr long double kTiny = 1e-300L;
  constexpr long double kEps = 1e-19L;
  long double qab = a + b, qap = a + 1, qam = a - 1;
  long double c = 1, d = 1 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1 / d;
  long double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const int m2 = 2 * m;
    long double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    const long double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < kEps) break;
  }
  return h;
}

inline long double incomplete_beta(long double a, long double b, long double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const long double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x);
  const long double front = std::exp(ln_front);
  if (x < (a + 1) / (a + b + 2)) return front * beta_cf(a, b, x) / a;
  return 1 - front * beta_cf(b, a, 1 - x) / b;
}

/// Two-tailed p of Student's t with df degrees of freedom:
/// P(|T| > t) = I_{df / (df + t^2)}(df / 2, 1 / 2).
inline double t_two_tailed(double t, double df) {
  const long double tt = static_cast<long double>(t) * t;
  return static_cast<double>(incomplete_beta(df / 2.0L, 0.5L, df / (df + tt)));
}

/// p for a correlation coefficient r over n observations.
inline double correlation_p(double r, std::size_t n) {
  const double df = static_cast<double>(n - 2);
  if (1.0 - r * r <= 0.0) return 0.0;
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return t_two_tailed(std::fabs(t), df);
}

// ---------------------------------------------------------------------------
// Generators

/// A pool of distinct Devanagari pseudo-words built from consonant + vowel
/// sign syllables.
inline std::vector<std::string> devanagari_words(std::mt19937_64& rng, std::size_t count) {
  static const char* kConsonants[] = {"क", "ख", "ग", "च", "ज", "ट", "ड", "त", "द", "न",
                                      "प", "ब", "म", "य", "र", "ल", "व", "स", "ह"};
  static const char* kSigns[] = {"", "ा", "ि", "ी", "ु", "े", "ो", "ं", "्"};
  std::set<std::string> seen;
  std::vector<std::string> out;
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<std::size_t> cons(0, std::size(kConsonants) - 1);
  std::uniform_int_distribution<std::size_t> sign(0, std::size(kSigns) - 1);
  while (out.size() < count) {
    std::string w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      w += kConsonants[cons(rng)];
      // A virama may not end the word.
      std::size_t s = sign(rng);
      if (i + 1 == n && std::string(kSigns[s]) == "्") s = 0;
      w += kSigns[s];
    }
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

inline void put_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
}

/// Random well-formed UTF-8 biased towards the cases that matter here:
/// Devanagari (including decomposed nukta forms), ASCII letters, digits and
/// punctuation, exotic whitespace, joiners, combining marks from other
/// scripts, Hangul jamo that compose under NFC, and astral code points.
inline std::string random_unicode(std::mt19937_64& rng, std::size_t max_len) {
  struct Range {
    char32_t lo, hi;
  };
  static const Range kPools[] = {
      {0x0900, 0x097F},  // Devanagari block
      {0x0915, 0x0939},  // Devanagari consonants (weighted up)
      {0x093C, 0x093C},  // nukta
      {0x093E, 0x094D},  // vowel signs and virama
      {0x0966, 0x096F},  // Devanagari digits
      {0x0964, 0x0965},  // danda, double danda
      {'a', 'z'},        {'A', 'Z'},       {'0', '9'},       {0x21, 0x2F},
      {' ', ' '},        {'\t', '\r'},     {0x00A0, 0x00A0}, {0x2000, 0x200A},
      {0x3000, 0x3000},  {0x200C, 0x200D}, {0x0300, 0x036F}, {0x00C0, 0x00FF},
      {0x1100, 0x1112},  {0x1161, 0x1175}, {0x0600, 0x06FF}, {0x4E00, 0x4E20},
      {0x1F600, 0x1F64F}, {0x0980, 0x09FF},
  };
  std::uniform_int_distribution<std::size_t> pool(0, std::size(kPools) - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Range& r = kPools[pool(rng)];
    std::uniform_int_distribution<std::uint32_t> cp(r.lo, r.hi);
    put_utf8(out, static_cast<char32_t>(cp(rng)));
  }
  return out;
}

/// A whitespace-free string of Devanagari letters, marks and digits.
inline std::string random_devanagari_run(std::mt19937_64& rng, std::size_t max_len) {
  static const std::pair<char32_t, char32_t> kPools[] = {
      {0x0905, 0x0914}, {0x0915, 0x0939}, {0x093C, 0x093C},
      {0x093E, 0x094D}, {0x0901, 0x0903}, {0x0966, 0x096F},
  };
  std::uniform_int_distribution<std::size_t> pool(0, std::size(kPools) - 1);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::string out;
  // Start with a letter so the run is a word.
  put_utf8(out, 0x0915);
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [lo, hi] = kPools[pool(rng)];
    std::uniform_int_distribution<std::uint32_t> cp(lo, hi);
    put_utf8(out, static_cast<char32_t>(cp(rng)));
  }
  return out;
}

/// Raw document text together with the Devanagari tokens a correct
/// pipeline must keep under the default filter policy.
struct SyntheticDoc {
  std::string text;
  std::vector<std::string> kept;
};

/// Joins words drawn (skewed towards the front of `vocab`) with assorted
/// separators, sprinkling in Latin words and numbers that must be filtered.
inline SyntheticDoc synthetic_doc(std::mt19937_64& rng, const std::vector<std::string>& vocab,
                                  std::size_t n_tokens) {
  static const char* kSeparators[] = {" ", " ", " ", "। ", ", ", "\n", "  ", "? ", "॥\t", " - "};
  static const char* kNoise[] = {"abc", "Delhi", "42", "2024", "x7", "@", "(", ")"};
  std::geometric_distribution<std::size_t> skew(4.0 / static_cast<double>(vocab.size() + 1));
  std::uniform_int_distribution<std::size_t> sep(0, std::size(kSeparators) - 1);
  std::uniform_int_distribution<std::size_t> noise(0, std::size(kNoise) - 1);
  SyntheticDoc doc;
  for (std::size_t i = 0; i < n_tokens; ++i) {
    if (!doc.text.empty()) doc.text += kSeparators[sep(rng)];
    if (rng() % 10 == 0) {
      doc.text += kNoise[noise(rng)];
      doc.text += ' ';
    }
    const std::string& w = vocab[skew(rng) % vocab.size()];
    doc.text += w;
    doc.kept.push_back(w);
  }
  if (rng() % 2) doc.text += "।";
  return doc;
}

}  // namespace oracle

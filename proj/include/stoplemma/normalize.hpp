// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// Text normalization, sentence splitting, tokenization and token filtering
// for Devanagari (Hindi) text.
//
// All functions take UTF-8. normalize_text produces NFC with every run of
// Unicode whitespace collapsed to a single U+0020; the other functions
// expect normalized input but never rewrite characters themselves.

#pragma once

#include <unicode/normalizer2.h>
#include <unicode/bytestream.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stoplemma/error.hpp"

namespace stoplemma {

enum class TokenKind : std::uint8_t {
  devanagari_word,
  latin_word,
  latin_number,
  devanagari_number,
  symbol,
};

constexpr std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::devanagari_word: return "devanagari_word";
    case TokenKind::latin_word: return "latin_word";
    case TokenKind::latin_number: return "latin_number";
    case TokenKind::devanagari_number: return "devanagari_number";
    case TokenKind::symbol: return "symbol";
  }
  return "symbol";
}

/// Half-open byte range [begin, end) into the text a function was given.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::symbol;
  ByteSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  ByteSpan span;
  std::vector<Token> tokens;
};

/// Which token kinds filter_tokens removes. The defaults delete special
/// characters, English tokens and Latin numerals and keep Devanagari digits.
struct FilterPolicy {
  bool drop_symbols = true;
  bool drop_latin_words = true;
  bool drop_latin_numbers = true;
  bool drop_devanagari_digits = false;

  constexpr bool drops(TokenKind kind) const {
    switch (kind) {
      case TokenKind::devanagari_word: return false;
      case TokenKind::latin_word: return drop_latin_words;
      case TokenKind::latin_number: return drop_latin_numbers;
      case TokenKind::devanagari_number: return drop_devanagari_digits;
      case TokenKind::symbol: return drop_symbols;
    }
    return true;
  }
  friend bool operator==(const FilterPolicy&, const FilterPolicy&) = default;
};

namespace unicode {

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;

constexpr bool in_devanagari_block(char32_t c) { return c >= 0x0900 && c <= 0x097F; }
constexpr bool is_devanagari_digit(char32_t c) { return c >= 0x0966 && c <= 0x096F; }
constexpr bool is_ascii_letter(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
constexpr bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

inline bool is_whitespace(char32_t c) {
  if (c < 0x80) return c == ' ' || (c >= '\t' && c <= '\r');
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

inline bool is_letter(char32_t c) {
  if (c < 0x80) return is_ascii_letter(c);
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_L_MASK) != 0;
}

/// Letters, combining marks, decimal digits and the two joiners.
inline bool is_word_char(char32_t c) {
  if (c < 0x80) return is_ascii_letter(c) || is_ascii_digit(c);
  if (c == kZwj || c == kZwnj) return true;
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) &
          (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

constexpr bool is_sentence_terminator(char32_t c) {
  return c == kDanda || c == kDoubleDanda || c == '?' || c == '!' || c == '.';
}

/// Decodes the code point at `pos` and advances past it. Ill-formed bytes
/// decode as U+FFFD one byte at a time.
inline char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  if (s[pos] < 0x80) return s[pos++];
  auto i = static_cast<std::int64_t>(pos);
  UChar32 c;
  U8_NEXT(s, i, static_cast<std::int64_t>(text.size()), c);
  pos = static_cast<std::size_t>(i);
  return c < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(c);
}

inline void append_utf8(std::string& out, char32_t c) {
  char buf[4];
  std::int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<std::uint8_t*>(buf), len, 4, static_cast<UChar32>(c), error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

inline const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || n == nullptr) {
      throw Error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
    }
    return n;
  }();
  return *instance;
}

inline std::string to_nfc(std::string_view text) {
  const icu::Normalizer2& norm = nfc();
  const icu::StringPiece piece(text.data(), static_cast<std::int32_t>(text.size()));
  UErrorCode status = U_ZERO_ERROR;
  if (norm.isNormalizedUTF8(piece, status) && U_SUCCESS(status)) return std::string(text);
  status = U_ZERO_ERROR;
  std::string out;
  out.reserve(text.size());
  icu::StringByteSink<std::string> sink(&out, static_cast<std::int32_t>(text.size()));
  norm.normalizeUTF8(0, piece, sink, nullptr, status);
  if (U_FAILURE(status)) throw Error(std::string("NFC normalization failed: ") + u_errorName(status));
  return out;
}

}  // namespace unicode

/// NFC-normalizes `raw` and collapses each run of Unicode whitespace to one
/// U+0020. No other character is rewritten. Idempotent.
inline std::string normalize_text(std::string_view raw) {
  std::string composed = unicode::to_nfc(raw);
  const std::string_view text = composed;

  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t c = unicode::next_code_point(text, pos);
    if (unicode::is_whitespace(c)) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.append(text.substr(start, pos - start));
      in_space = false;
    }
  }
  return out;
}

/// Sentence boundaries over normalized text. A sentence ends after a run of
/// terminators (danda, double danda, '?', '!', '.'); text after the last
/// terminator forms a final sentence. Spans exclude surrounding whitespace
/// and whitespace-only segments are dropped.
inline std::vector<ByteSpan> split_sentences(std::string_view text) {
  std::vector<ByteSpan> spans;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t start = kNone;
  std::size_t content_end = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t here = pos;
    const char32_t c = unicode::next_code_point(text, pos);
    if (unicode::is_whitespace(c)) continue;
    if (start == kNone) start = here;
    content_end = pos;
    if (!unicode::is_sentence_terminator(c)) continue;
    // Absorb a run such as "?!" or "।।" into the same sentence.
    while (pos < text.size()) {
      std::size_t peek = pos;
      if (!unicode::is_sentence_terminator(unicode::next_code_point(text, peek))) break;
      pos = peek;
    }
    spans.push_back({start, pos});
    start = kNone;
  }
  if (start != kNone) spans.push_back({start, content_end});
  return spans;
}

namespace detail {

struct RunTraits {
  bool has_letter = false;
  bool has_devanagari_letter = false;
  bool has_ascii_letter = false;
  bool has_ascii_digit = false;
  bool all_devanagari = true;         // joiners excepted
  bool all_devanagari_digits = true;

  void add(char32_t c) {
    const bool letter = unicode::is_letter(c);
    const bool deva = unicode::in_devanagari_block(c);
    has_letter |= letter;
    has_devanagari_letter |= letter && deva;
    has_ascii_letter |= unicode::is_ascii_letter(c);
    has_ascii_digit |= unicode::is_ascii_digit(c);
    if (!deva && c != unicode::kZwj && c != unicode::kZwnj) all_devanagari = false;
    if (!unicode::is_devanagari_digit(c)) all_devanagari_digits = false;
  }

  TokenKind kind() const {
    if (has_letter) {
      if (has_devanagari_letter && all_devanagari) return TokenKind::devanagari_word;
      if (has_ascii_letter && !has_devanagari_letter) return TokenKind::latin_word;
    }
    if (has_ascii_digit) return TokenKind::latin_number;
    if (!has_letter && all_devanagari_digits) return TokenKind::devanagari_number;
    // Other scripts, mixed-script runs and stray marks.
    return TokenKind::symbol;
  }
};

}  // namespace detail

/// Calls fn(surface, kind, span) for every token of `text` in order, without
/// allocating. Word tokens are maximal runs of letters, marks, digits and
/// joiners; each other non-whitespace code point is a symbol token. Joined
/// words are never split. Spans are offset by `base`.
template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn, std::size_t base = 0) {
  std::size_t pos = 0;
  std::size_t run_start = 0;
  bool in_run = false;
  detail::RunTraits traits;
  auto flush = [&](std::size_t run_end) {
    if (!in_run) return;
    fn(text.substr(run_start, run_end - run_start), traits.kind(),
       ByteSpan{base + run_start, base + run_end});
    in_run = false;
  };
  while (pos < text.size()) {
    const std::size_t here = pos;
    const char32_t c = unicode::next_code_point(text, pos);
    if (unicode::is_word_char(c)) {
      if (!in_run) {
        in_run = true;
        run_start = here;
        traits = {};
      }
      traits.add(c);
      continue;
    }
    flush(here);
    if (unicode::is_whitespace(c)) continue;
    fn(text.substr(here, pos - here), TokenKind::symbol, ByteSpan{base + here, base + pos});
  }
  flush(text.size());
}

inline std::vector<Token> tokenize(std::string_view text, std::size_t base = 0) {
  std::vector<Token> tokens;
  for_each_token(
      text,
      [&](std::string_view surface, TokenKind kind, ByteSpan span) {
        tokens.push_back(Token{std::string(surface), kind, span});
      },
      base);
  return tokens;
}

inline std::vector<Token> filter_tokens(std::span<const Token> tokens,
                                        const FilterPolicy& policy = {}) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (!policy.drops(t.kind)) kept.push_back(t);
  }
  return kept;
}

/// split_sentences followed by tokenize on each sentence. Token spans are
/// relative to `text`.
inline std::vector<Sentence> segment(std::string_view text) {
  std::vector<Sentence> sentences;
  for (const ByteSpan& span : split_sentences(text)) {
    sentences.push_back(
        Sentence{span, tokenize(text.substr(span.begin, span.size()), span.begin)});
  }
  return sentences;
}

/// The preprocessing pipeline used for counting: normalize, split, tokenize
/// and filter, reporting each surviving surface to `fn`.
template <typename Fn>
void for_each_kept_token(std::string_view raw, const FilterPolicy& policy, Fn&& fn) {
  const std::string text = normalize_text(raw);
  const std::string_view view = text;
  for (const ByteSpan& span : split_sentences(view)) {
    for_each_token(view.substr(span.begin, span.size()),
                   [&](std::string_view surface, TokenKind kind, ByteSpan) {
                     if (!policy.drops(kind)) fn(surface);
                   });
  }
}

}  // namespace stoplemma

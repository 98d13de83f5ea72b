// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "stoplemma/normalize.hpp"

using namespace stoplemma;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

bool has_ascii_alnum(std::string_view s) {
  for (unsigned char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("normalize_text composes to NFC and collapses whitespace") {
  CHECK(normalize_text("\u0928\u093C") == "\u0929");
  CHECK(normalize_text("\u0958") == "\u0915\u093C");  // composition exclusion
  CHECK(normalize_text("\u0905\u00A0\u092C") == "\u0905 \u092C");
  CHECK(normalize_text("घर \t\n  गया") == "घर गया");
  CHECK(normalize_text("\u3000x\u2003") == " x ");
  const std::string nfc = "वह घर गया।";
  CHECK(normalize_text(nfc) == nfc);
  CHECK(normalize_text("").empty());
}

TEST_CASE("normalize_text is idempotent on random strings") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string s = oracle::random_unicode(rng, 40);
    const std::string once = normalize_text(s);
    CHECK(normalize_text(once) == once);
  }
}

TEST_CASE("split_sentences") {
  CHECK(split_sentences("वह घर गया। फिर आया।").size() == 2);
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("   ").empty());

  // "क्या" is 12 bytes, "?" one, then a space, then "हाँ" (9 bytes).
  const auto spans = split_sentences("क्या? हाँ");
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].begin == 0);
  CHECK(spans[0].end == 13);
  CHECK(spans[1].begin == 14);
  CHECK(spans[1].end == 23);

  // A run of terminators stays with its sentence.
  const auto run = split_sentences("क्या?! हाँ।।");
  REQUIRE(run.size() == 2);
  CHECK(run[0].end == 14);
}

TEST_CASE("split_sentences spans cover the text") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::string text = normalize_text(oracle::random_unicode(rng, 60));
    const auto spans = split_sentences(text);
    std::size_t covered = 0, last_end = 0;
    for (const auto& s : spans) {
      REQUIRE(s.begin >= last_end);
      REQUIRE(s.end > s.begin);
      covered += s.size();
      last_end = s.end;
    }
    // Everything outside the spans is whitespace.
    std::size_t gap_ws = 0;
    std::size_t pos = 0;
    std::size_t next_span = 0;
    while (pos < text.size()) {
      if (next_span < spans.size() && pos == spans[next_span].begin) {
        pos = spans[next_span++].end;
        continue;
      }
      const std::size_t here = pos;
      const char32_t c = unicode::next_code_point(text, pos);
      REQUIRE(unicode::is_whitespace(c));
      gap_ws += pos - here;
    }
    CHECK(covered + gap_ws == text.size());
  }
}

TEST_CASE("tokenize classifies runs") {
  const auto simple = tokenize("राम घर गया");
  REQUIRE(simple.size() == 3);
  for (const auto& t : simple) CHECK(t.kind == TokenKind::devanagari_word);

  const auto joined = tokenize("रामघर");
  REQUIRE(joined.size() == 1);
  CHECK(joined[0].surface == "रामघर");

  const auto mixed = tokenize("abc १२ 45 ।");
  REQUIRE(mixed.size() == 4);
  CHECK(mixed[0].surface == "abc");
  CHECK(mixed[0].kind == TokenKind::latin_word);
  CHECK(mixed[1].surface == "१२");
  CHECK(mixed[1].kind == TokenKind::devanagari_number);
  CHECK(mixed[2].surface == "45");
  CHECK(mixed[2].kind == TokenKind::latin_number);
  CHECK(mixed[3].surface == "।");
  CHECK(mixed[3].kind == TokenKind::symbol);
}

TEST_CASE("tokenize edge cases") {
  // Joiners stay inside a word.
  const auto zw = tokenize("\u0915\u094D\u200D\u0937");
  REQUIRE(zw.size() == 1);
  CHECK(zw[0].kind == TokenKind::devanagari_word);

  // Punctuation splits and each mark is its own symbol.
  CHECK(surfaces(tokenize("घर-बार,")) == std::vector<std::string>{"घर", "-", "बार", ","});

  // Mixed-script and foreign-script runs are symbols; a Latin run with
  // digits is a Latin word.
  CHECK(tokenize("घरabc")[0].kind == TokenKind::symbol);
  CHECK(tokenize("ঘর")[0].kind == TokenKind::symbol);
  CHECK(tokenize("abc1")[0].kind == TokenKind::latin_word);
  CHECK(tokenize("घर1")[0].kind == TokenKind::latin_number);

  const auto spans = tokenize("ab घर", 10);
  CHECK(spans[1].span.begin == 13);
  CHECK(spans[1].span.end == 19);
}

TEST_CASE("filter_tokens applies the policy") {
  const auto tokens = tokenize("घर house 123 ।");
  CHECK(surfaces(filter_tokens(tokens)) == std::vector<std::string>{"घर"});
  CHECK(filter_tokens(std::vector<Token>{}).empty());

  const auto digits = tokenize("१२ घर");
  CHECK(surfaces(filter_tokens(digits)) == std::vector<std::string>{"१२", "घर"});
  FilterPolicy no_digits;
  no_digits.drop_devanagari_digits = true;
  CHECK(surfaces(filter_tokens(digits, no_digits)) == std::vector<std::string>{"घर"});

  FilterPolicy keep_all{false, false, false, false};
  CHECK(filter_tokens(tokens, keep_all).size() == tokens.size());
}

TEST_CASE("default filtering leaves no ASCII letters or digits") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::string raw = oracle::random_unicode(rng, 50);
    for_each_kept_token(raw, FilterPolicy{}, [&](std::string_view s) {
      CHECK_FALSE(has_ascii_alnum(s));
    });
  }
}

TEST_CASE("re-tokenizing word surfaces is a fixpoint") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = normalize_text(oracle::random_unicode(rng, 50));
    std::vector<std::string> words;
    for (const auto& t : tokenize(text)) {
      if (t.kind != TokenKind::symbol) words.push_back(t.surface);
    }
    std::string joined;
    for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
    CHECK(surfaces(tokenize(joined)) == words);
  }
}

TEST_CASE("whitespace-free Devanagari strings are never split") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const std::string run = normalize_text(oracle::random_devanagari_run(rng, 20));
    const auto tokens = tokenize(run);
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].surface == run);
    CHECK(tokens[0].kind == TokenKind::devanagari_word);
  }
}

TEST_CASE("segment keeps tokens in order with absolute spans") {
  const std::string text = "वह घर गया। फिर आया।";
  const auto sentences = segment(text);
  REQUIRE(sentences.size() == 2);
  std::size_t last = 0;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      CHECK(t.span.begin >= last);
      CHECK(text.substr(t.span.begin, t.span.size()) == t.surface);
      last = t.span.end;
    }
  }
}

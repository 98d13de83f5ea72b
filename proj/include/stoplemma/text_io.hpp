// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include <unicode/utf8.h>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stoplemma/error.hpp"

namespace stoplemma {

/// Byte offset of the first ill-formed UTF-8 sequence, or nullopt when the
/// whole buffer is well formed. Surrogates and overlongs are ill formed.
inline std::optional<std::size_t> find_invalid_utf8(std::string_view bytes) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const auto length = static_cast<std::int64_t>(bytes.size());
  std::int64_t i = 0;
  while (i < length) {
    // ASCII fast path.
    if (s[i] < 0x80) {
      ++i;
      continue;
    }
    const std::int64_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return static_cast<std::size_t>(start);
  }
  return std::nullopt;
}

inline bool is_valid_utf8(std::string_view bytes) { return !find_invalid_utf8(bytes); }

inline std::string_view strip_bom(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.starts_with(kBom)) text.remove_prefix(kBom.size());
  return text;
}

/// Reads a whole file as UTF-8 text. A leading BOM is dropped; ill-formed
/// bytes raise InputError naming the file and the byte offset.
inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string data = std::move(buffer).str();
  if (in.bad()) throw InputError("read failed: " + path.string());

  std::size_t bom = 0;
  if (std::string_view(data).starts_with("\xEF\xBB\xBF")) bom = 3;
  if (auto bad = find_invalid_utf8(std::string_view(data).substr(bom))) {
    throw InputError("invalid UTF-8 in " + path.string() + " at byte offset " +
                     std::to_string(*bad + bom));
  }
  if (bom) data.erase(0, bom);
  return data;
}

/// Splits on '\n', dropping a trailing '\r' from each line. A final empty
/// line after the last newline is not reported.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char sep = '\t') {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = line.find(sep, pos);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

/// ASCII whitespace trim; Unicode whitespace is handled by normalize_text.
inline std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

/// True for blank lines and '#' comment lines.
inline bool is_skippable_line(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace stoplemma

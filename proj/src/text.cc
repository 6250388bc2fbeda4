// Copyright 2026 The Hintgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hintgen/text.h"

#include <cctype>

#include "hintgen/errors.h"

namespace hintgen {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool IsDetachable(char c, bool last_word) {
  return c == '?' || c == '!' || (last_word && c == '.');
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    words.emplace_back(start, i);
  }
  if (words.empty()) throw Error(ErrorCode::kEmptyInput, "blank text");

  std::vector<Token> tokens;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const bool last_word = w + 1 == words.size();
    auto [start, end] = words[w];
    std::size_t cut = end;
    while (cut > start && IsDetachable(text[cut - 1], last_word)) --cut;
    if (cut > start) {
      tokens.push_back({std::string(text.substr(start, cut - start)), start});
    }
    for (std::size_t p = cut; p < end; ++p) {
      tokens.push_back({std::string(1, text[p]), p});
    }
  }
  return tokens;
}

Question::Question(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)), tokens_(Tokenize(text_)) {}

std::string Question::Normalized() const {
  std::vector<std::string> parts;
  parts.reserve(tokens_.size());
  for (const Token& t : tokens_) parts.push_back(t.text);
  return JoinTokens(parts);
}

bool IsTerminalPunctuation(std::string_view token) {
  return token == "?" || token == "!" || token == ".";
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool StartsWithUpper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

std::string CapitalizeFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string LowercaseFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !IsSpace(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> Split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty() && !IsTerminalPunctuation(t)) out += ' ';
    out += t;
  }
  return out;
}

std::vector<std::string> MetricTokens(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x80 && std::ispunct(u)) continue;
    cleaned += static_cast<char>(std::tolower(u));
  }
  return SplitWhitespace(cleaned);
}

}  // namespace hintgen

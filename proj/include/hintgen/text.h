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

#ifndef HINTGEN_TEXT_H_
#define HINTGEN_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hintgen {

struct Token {
  std::string text;
  std::size_t offset = 0;  // byte offset into the source text

  bool operator==(const Token&) const = default;
};

// Half-open token range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Contains(std::size_t i) const { return i >= begin && i < end; }
  bool Overlaps(const TokenSpan& other) const {
    return !empty() && !other.empty() && begin < other.end &&
           other.begin < end;
  }
  bool operator==(const TokenSpan&) const = default;
};

// Splits on whitespace and detaches sentence-final punctuation. '?' and '!'
// are detached from any word; '.' only from the last word, so abbreviations
// such as "Dr." survive mid-sentence. Throws EmptyInput on blank text.
std::vector<Token> Tokenize(std::string_view text);

// A direct question q (or one of Q_rel).
class Question {
 public:
  Question(std::string id, std::string text);

  const std::string& id() const { return id_; }
  const std::string& text() const { return text_; }
  const std::vector<Token>& tokens() const { return tokens_; }

  // Tokens joined by single spaces with punctuation reattached.
  std::string Normalized() const;

 private:
  std::string id_;
  std::string text_;
  std::vector<Token> tokens_;
};

bool IsTerminalPunctuation(std::string_view token);

// ASCII helpers. Non-ASCII bytes pass through unchanged.
std::string ToLower(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);
std::string Trim(std::string_view s);
bool StartsWithUpper(std::string_view s);
std::string CapitalizeFirst(std::string_view s);
std::string LowercaseFirst(std::string_view s);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::vector<std::string> Split(std::string_view s, std::string_view sep);

// Joins word tokens with single spaces, attaching punctuation tokens to the
// preceding word.
std::string JoinTokens(const std::vector<std::string>& tokens);

// Lowercases, deletes punctuation, splits on whitespace. Shared by the
// metrics and the similarity-based validators.
std::vector<std::string> MetricTokens(std::string_view text);

}  // namespace hintgen

#endif  // HINTGEN_TEXT_H_

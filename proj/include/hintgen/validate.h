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

#ifndef HINTGEN_VALIDATE_H_
#define HINTGEN_VALIDATE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hintgen/composer.h"

namespace hintgen {

class Stopwords {
 public:
  static Stopwords Parse(std::string_view text);
  static Stopwords Load(const std::filesystem::path& path);
  static const Stopwords& Default();

  bool Contains(std::string_view lower_word) const {
    return words_.count(std::string(lower_word)) > 0;
  }
  // Metric tokens of `text` minus stopwords.
  std::vector<std::string> ContentWords(std::string_view text) const;

 private:
  std::unordered_set<std::string> words_;
};

// Thresholds for the annotation validators. Loaded from key=value files.
struct ValidatorConfig {
  std::size_t min_chars = 70;
  double max_chars_factor = 1.25;  // hint chars / summed related-question chars
  std::size_t min_words = 8;
  std::size_t max_words = 80;
  double similarity_threshold = 0.35;
  double coverage_recall_threshold = 0.6;
  bool require_pattern = true;
  bool require_entity = true;
  bool require_anaphora = false;

  static ValidatorConfig Parse(std::string_view text);
  static ValidatorConfig Load(const std::filesystem::path& path);
  // Throws InvalidArgument when thresholds leave [0,1] or bounds cross.
  void Check() const;
};

enum class ViolationCode {
  kMinLength,
  kMaxLength,
  kNoStartPattern,
  kNoEntity,
  kNoAnaphora,
  kLowSimilarity,
  kMissingQuestion,
  kNotEnglishChars,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string question_id;  // set for kMissingQuestion
  std::string detail;
};

// Cosine of term-frequency vectors over lowercased, punctuation-free tokens.
// Throws EmptyInput if either text is blank.
double Similarity(std::string_view a, std::string_view b);

struct QuestionCoverage {
  std::string question_id;
  double recall = 0.0;
  bool covered = false;
};

// Share of each related question's content words (stopwords, wh-words and
// auxiliaries excluded) found in the hint, compared by stem. Words of the
// entity's name also count as present when the hint names the entity or uses
// one of its pronouns. `entity` may be null.
std::vector<QuestionCoverage> CoverageCheck(std::string_view hint_text,
                                            const std::vector<Question>& related,
                                            const ValidatorConfig& cfg,
                                            const EntityRef* entity = nullptr,
                                            const Stopwords& stopwords = Stopwords::Default(),
                                            const Grammar& grammar = Grammar::Default());

// Empty result means the hint passes.
std::vector<Violation> ValidateHint(const Hint& hint, const HintBundle& bundle,
                                    const ValidatorConfig& cfg,
                                    const Stopwords& stopwords = Stopwords::Default(),
                                    const Grammar& grammar = Grammar::Default());

// Share of ASCII letters among alphabetic code points.
double AsciiLetterRatio(std::string_view utf8);

}  // namespace hintgen

#endif  // HINTGEN_VALIDATE_H_

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

#ifndef HINTGEN_METRICS_H_
#define HINTGEN_METRICS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hintgen {

enum class Smoothing {
  kNone,
  // Adds one to numerator and denominator of every k-gram precision whose
  // match count is zero.
  kAddOne,
};

// Sentence BLEU over metric tokens (lowercased, punctuation stripped).
// Brevity penalty uses the reference length closest to the candidate length,
// the shorter one on ties. Throws EmptyInput for blank inputs and
// InvalidArgument for n outside 1..4 or an empty reference list.
double BleuN(std::string_view candidate, const std::vector<std::string>& references, int n,
             Smoothing smoothing = Smoothing::kNone);

// Clipped n-gram recall against one reference. Throws UndefinedForShortText
// when the reference has fewer than n tokens.
double RougeN(std::string_view candidate, std::string_view reference, int n);

struct ScorePair {
  std::string id;
  std::string candidate;
  std::string reference;
};

struct PairScores {
  std::string id;
  std::array<double, 4> bleu{};
  // Empty where the reference is shorter than n tokens.
  std::array<std::optional<double>, 4> rouge{};
  std::size_t candidate_chars = 0;
};

struct ScoreReport {
  std::vector<PairScores> per_pair;
  // Pooled counts and pooled brevity penalty, no smoothing.
  std::array<double, 4> corpus_bleu{};
  // Macro average over pairs where the score is defined.
  std::array<std::optional<double>, 4> corpus_rouge{};
  std::size_t pair_count = 0;
  double length_mean = 0.0;
  double length_stddev = 0.0;  // sample standard deviation
};

// Per-pair BLEU uses add-one smoothing. Throws EmptyCorpus for no pairs.
ScoreReport ScoreCorpus(const std::vector<ScorePair>& pairs, std::size_t jobs = 1);

// Tab-separated: a header, one "pair" row per pair, one "corpus" row.
std::string FormatReportTsv(const ScoreReport& report);
// One JSON object per pair followed by one corpus object.
std::string FormatReportJsonl(const ScoreReport& report);

}  // namespace hintgen

#endif  // HINTGEN_METRICS_H_

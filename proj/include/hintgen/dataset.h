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

#ifndef HINTGEN_DATASET_H_
#define HINTGEN_DATASET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hintgen/composer.h"

namespace hintgen {

// Record format, one JSON object per line:
//   {"id": "...", "domain": "Athlete",
//    "question": {"id": "...", "text": "..."} | "text",
//    "related": [{"id": "...", "text": "..."} | "text", ...],
//    "entity": {"id": "...", "canonical": "...", "aliases": [...],
//               "gender_number": "masculine|feminine|neuter|plural"},
//    "gold": "..."}
// Question ids default to "<id>/q" and "<id>/r<i>"; the entity id defaults to
// the canonical name; gold is optional. Throws MalformedRecord naming the
// 1-based line number.
HintBundle ParseRecord(std::string_view line, std::size_t line_no = 1);
std::vector<HintBundle> ReadRecords(std::istream& in);
std::vector<HintBundle> ParseRecords(std::string_view text);
std::vector<HintBundle> LoadRecords(const std::filesystem::path& path);

// Canonical form: all defaults spelled out, fixed key order, no newline.
std::string FormatRecord(const HintBundle& bundle);
std::string FormatRecords(const std::vector<HintBundle>& bundles);

struct SplitSpec {
  std::array<double, 3> ratios{0.6, 0.1, 0.3};  // train, dev, test
  std::uint64_t seed = 0;

  // Each ratio in (0,1), sum 1 within 1e-9. Throws InvalidArgument.
  void Check() const;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Seeded shuffle of 0..n-1, then contiguous partition. Train and dev get
// floor(n * ratio); test gets the rest. Throws TooFewRecords for n < 10.
SplitIndices SplitIndicesFor(std::size_t n, const SplitSpec& spec);

struct DatasetSplit {
  std::vector<HintBundle> train;
  std::vector<HintBundle> dev;
  std::vector<HintBundle> test;
};

DatasetSplit SplitDataset(const std::vector<HintBundle>& bundles, const SplitSpec& spec);

enum class Seq2SeqMode {
  // One line per bundle: the encoded input, plus "\t<gold>" when targets are
  // requested and present.
  kFinetune,
  // One line per question: "<question>\t<pattern> <clause>.". Questions the
  // parser rejects are skipped and counted.
  kPretrain,
};

struct Seq2SeqOutput {
  std::vector<std::string> lines;
  std::size_t skipped = 0;
};

Seq2SeqOutput EmitSeq2Seq(const std::vector<HintBundle>& bundles, Seq2SeqMode mode,
                          bool with_targets,
                          PatternStrategy strategy = PatternStrategy::Fixed(0),
                          const PatternInventory& inventory = PatternInventory::Default(),
                          const Grammar& grammar = Grammar::Default());

}  // namespace hintgen

#endif  // HINTGEN_DATASET_H_

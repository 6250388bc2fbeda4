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

#ifndef HINTGEN_COMPOSER_H_
#define HINTGEN_COMPOSER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hintgen/anaphora.h"
#include "hintgen/clauser.h"
#include "hintgen/text.h"

namespace hintgen {

enum class Modal { kCan, kMay, kMight, kCould };
enum class VerbSlot { kAsk, kAlsoAsk, kBeInterested, kAlsoBeInterested };

// The action-oriented main clause that opens a hint, e.g. "You may want to
// know". text == "You " + modal + " " + verb phrase, where the verb phrase
// realizes verb_slot ("ask"/"want to know", "also ask"/"also want to know",
// "be interested to know", "also be interested to know").
struct StartPattern {
  std::string text;
  VerbSlot verb_slot = VerbSlot::kAsk;
  Modal modal_slot = Modal::kCan;

  bool operator==(const StartPattern&) const = default;
};

// Throws InvalidArgument if the line is not "You <modal> <verb phrase>".
StartPattern ParseStartPattern(std::string_view line);

// Index-addressable list of start patterns, one per line in the file.
class PatternInventory {
 public:
  static PatternInventory Parse(std::string_view text);
  static PatternInventory Load(const std::filesystem::path& path);
  static const PatternInventory& Default();

  std::size_t size() const { return patterns_.size(); }
  const StartPattern& at(std::size_t index) const;
  const std::vector<StartPattern>& patterns() const { return patterns_; }

  // Longest pattern that prefixes `text` (case-insensitive), if any.
  std::optional<StartPattern> Detect(std::string_view text) const;

 private:
  std::vector<StartPattern> patterns_;
};

struct PatternStrategy {
  enum class Kind { kFixed, kRoundRobin, kSeeded };

  static PatternStrategy Fixed(std::size_t index) { return {Kind::kFixed, index, 0}; }
  static PatternStrategy RoundRobin() { return {Kind::kRoundRobin, 0, 0}; }
  static PatternStrategy Seeded(std::uint64_t seed) { return {Kind::kSeeded, 0, seed}; }

  Kind kind = Kind::kFixed;
  std::size_t index = 0;
  std::uint64_t seed = 0;
};

// Deterministic for a given strategy and call sequence.
class PatternChooser {
 public:
  PatternChooser(const PatternInventory& inventory, PatternStrategy strategy);

  const StartPattern& Next();

 private:
  const PatternInventory& inventory_;
  PatternStrategy strategy_;
  std::size_t counter_ = 0;
  std::mt19937_64 rng_;
};

StartPattern ChooseStartPattern(PatternStrategy strategy,
                                const PatternInventory& inventory = PatternInventory::Default());

enum class HintMode { kTb, kRsb, kFull };
std::string_view HintModeName(HintMode m);
HintMode ParseHintMode(std::string_view name);

enum class Conjunction { kOr, kAnd };
std::string_view ConjunctionWord(Conjunction c);

// A synthesized hint h. char_len counts UTF-8 code points.
struct Hint {
  std::string text;
  std::optional<StartPattern> pattern;
  std::vector<std::string> clause_order;  // source question ids
  std::size_t char_len = 0;
  std::size_t word_len = 0;
  HintMode mode = HintMode::kTb;

  static Hint Make(std::string text, std::optional<StartPattern> pattern,
                   std::vector<std::string> clause_order, HintMode mode);
  // For hints that come from outside the composer (gold hints, files): the
  // pattern is detected against the inventory.
  static Hint FromText(std::string text,
                       const PatternInventory& inventory = PatternInventory::Default());
};

std::size_t CountCodePoints(std::string_view utf8);

// The triple <q, Q_rel, h>, h optional.
struct HintBundle {
  std::string id;
  Question q;
  std::vector<Question> related;  // 1..3
  EntityRef entity;
  std::optional<std::string> gold;
  std::string domain;

  // Throws InvalidArgument when |related| is outside 1..3 or ids collide.
  void Validate() const;
};

// Related questions verbatim, terminal punctuation dropped, joined by ", or ".
Hint ComposeTb(const HintBundle& bundle, const StartPattern& pattern);

// Related questions as content clauses (person shift on), joined by ", or ".
// Any unparseable question fails the whole hint.
Hint ComposeRsb(const HintBundle& bundle, const StartPattern& pattern,
                const Grammar& grammar = Grammar::Default());

// RSB clauses with anaphora applied, coordinated with `conj` before the last
// clause.
Hint ComposeFull(const HintBundle& bundle, const StartPattern& pattern,
                 Conjunction conj = Conjunction::kOr,
                 const Grammar& grammar = Grammar::Default());

Hint Compose(const HintBundle& bundle, const StartPattern& pattern, HintMode mode,
             Conjunction conj = Conjunction::kOr,
             const Grammar& grammar = Grammar::Default());

inline constexpr std::string_view kSeparator = " [SEP] ";

// "q [SEP] r1 [SEP] r2 [SEP] r3".
std::string EncodeSeq2SeqInput(const HintBundle& bundle);

// Direct question text as it appears inside a template hint: first token
// lowercased when it is a wh-word or auxiliary, terminal punctuation dropped.
std::string QuestionForTemplate(const Question& q, const Grammar& grammar = Grammar::Default());

}  // namespace hintgen

#endif  // HINTGEN_COMPOSER_H_

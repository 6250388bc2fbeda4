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

#include "hintgen/composer.h"

#include <set>

#include "hintgen/embedded_data.h"
#include "hintgen/errors.h"
#include "hintgen/qparse.h"

namespace hintgen {
namespace {

std::string_view ModalWord(Modal m) {
  switch (m) {
    case Modal::kCan: return "can";
    case Modal::kMay: return "may";
    case Modal::kMight: return "might";
    case Modal::kCould: return "could";
  }
  return "can";
}

std::string JoinClauses(const std::vector<std::string>& clauses, Conjunction last) {
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i > 0) {
      out += ", ";
      out += i + 1 == clauses.size() ? ConjunctionWord(last) : "or";
      out += ' ';
    }
    out += clauses[i];
  }
  return out;
}

std::string Assemble(const StartPattern& pattern, const std::vector<std::string>& clauses,
                     Conjunction last) {
  return pattern.text + " " + JoinClauses(clauses, last) + ".";
}

std::vector<std::string> RelatedIds(const HintBundle& bundle) {
  std::vector<std::string> ids;
  for (const Question& r : bundle.related) ids.push_back(r.id());
  return ids;
}

std::vector<ContentClause> RsClauses(const HintBundle& bundle, const Grammar& g) {
  std::vector<ContentClause> clauses;
  for (const Question& r : bundle.related) {
    clauses.push_back(ToContentClause(ParseQuestion(r, g), {}, g));
  }
  return clauses;
}

std::vector<std::string> Texts(const std::vector<ContentClause>& clauses) {
  std::vector<std::string> out;
  for (const ContentClause& c : clauses) out.push_back(c.Text());
  return out;
}

}  // namespace

StartPattern ParseStartPattern(std::string_view line) {
  std::vector<std::string> w = SplitWhitespace(line);
  auto bad = [&]() {
    return Error(ErrorCode::kInvalidArgument,
                 "not a start pattern: \"" + std::string(line) + "\"");
  };
  if (w.size() < 3 || w[0] != "You") throw bad();
  StartPattern p;
  const std::string modal = ToLower(w[1]);
  if (modal == "can") {
    p.modal_slot = Modal::kCan;
  } else if (modal == "may") {
    p.modal_slot = Modal::kMay;
  } else if (modal == "might") {
    p.modal_slot = Modal::kMight;
  } else if (modal == "could") {
    p.modal_slot = Modal::kCould;
  } else {
    throw bad();
  }
  std::vector<std::string> rest(w.begin() + 2, w.end());
  const std::string phrase = ToLower(Join(rest, " "));
  if (phrase == "ask" || phrase == "want to know") {
    p.verb_slot = VerbSlot::kAsk;
  } else if (phrase == "also ask" || phrase == "also want to know") {
    p.verb_slot = VerbSlot::kAlsoAsk;
  } else if (phrase == "be interested to know") {
    p.verb_slot = VerbSlot::kBeInterested;
  } else if (phrase == "also be interested to know") {
    p.verb_slot = VerbSlot::kAlsoBeInterested;
  } else {
    throw bad();
  }
  p.text = "You " + std::string(ModalWord(p.modal_slot)) + " " + phrase;
  return p;
}

PatternInventory PatternInventory::Parse(std::string_view text) {
  PatternInventory inv;
  for (const std::string& line : DataLines(text)) {
    inv.patterns_.push_back(ParseStartPattern(line));
  }
  if (inv.patterns_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "start pattern inventory is empty");
  }
  return inv;
}

PatternInventory PatternInventory::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const PatternInventory& PatternInventory::Default() {
  static const auto* inv = new PatternInventory(Parse(embedded::start_patterns_txt()));
  return *inv;
}

const StartPattern& PatternInventory::at(std::size_t index) const {
  if (index >= patterns_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "pattern index " + std::to_string(index) + " out of range (inventory has " +
                    std::to_string(patterns_.size()) + ")");
  }
  return patterns_[index];
}

std::optional<StartPattern> PatternInventory::Detect(std::string_view text) const {
  const StartPattern* best = nullptr;
  for (const StartPattern& p : patterns_) {
    if (text.size() < p.text.size()) continue;
    if (!EqualsIgnoreCase(text.substr(0, p.text.size()), p.text)) continue;
    // Must end on a word boundary.
    if (text.size() > p.text.size() && text[p.text.size()] != ' ') continue;
    if (best == nullptr || p.text.size() > best->text.size()) best = &p;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

PatternChooser::PatternChooser(const PatternInventory& inventory, PatternStrategy strategy)
    : inventory_(inventory), strategy_(strategy), rng_(strategy.seed) {
  if (strategy_.kind == PatternStrategy::Kind::kFixed) inventory_.at(strategy_.index);
}

const StartPattern& PatternChooser::Next() {
  switch (strategy_.kind) {
    case PatternStrategy::Kind::kFixed:
      return inventory_.at(strategy_.index);
    case PatternStrategy::Kind::kRoundRobin:
      return inventory_.at(counter_++ % inventory_.size());
    case PatternStrategy::Kind::kSeeded:
      // Plain modulo keeps the sequence identical across standard libraries.
      return inventory_.at(static_cast<std::size_t>(rng_() % inventory_.size()));
  }
  return inventory_.at(0);
}

StartPattern ChooseStartPattern(PatternStrategy strategy, const PatternInventory& inventory) {
  PatternChooser chooser(inventory, strategy);
  return chooser.Next();
}

std::string_view HintModeName(HintMode m) {
  switch (m) {
    case HintMode::kTb: return "tb";
    case HintMode::kRsb: return "rsb";
    case HintMode::kFull: return "full";
  }
  return "tb";
}

HintMode ParseHintMode(std::string_view name) {
  if (name == "tb") return HintMode::kTb;
  if (name == "rsb") return HintMode::kRsb;
  if (name == "full") return HintMode::kFull;
  throw Error(ErrorCode::kInvalidArgument, "unknown hint mode '" + std::string(name) + "'");
}

std::string_view ConjunctionWord(Conjunction c) {
  return c == Conjunction::kAnd ? "and" : "or";
}

std::size_t CountCodePoints(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

Hint Hint::Make(std::string text, std::optional<StartPattern> pattern,
                std::vector<std::string> clause_order, HintMode mode) {
  Hint h;
  h.char_len = CountCodePoints(text);
  h.word_len = SplitWhitespace(text).size();
  h.text = std::move(text);
  h.pattern = std::move(pattern);
  h.clause_order = std::move(clause_order);
  h.mode = mode;
  return h;
}

Hint Hint::FromText(std::string text, const PatternInventory& inventory) {
  std::optional<StartPattern> pattern = inventory.Detect(text);
  return Make(std::move(text), std::move(pattern), {}, HintMode::kTb);
}

void HintBundle::Validate() const {
  if (related.empty() || related.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "bundle " + id + ": expected 1..3 related questions, got " +
                    std::to_string(related.size()));
  }
  std::set<std::string> ids{q.id()};
  for (const Question& r : related) {
    if (!ids.insert(r.id()).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bundle " + id + ": duplicate question id '" + r.id() + "'");
    }
  }
}

std::string QuestionForTemplate(const Question& q, const Grammar& g) {
  std::vector<std::string> words;
  for (const Token& t : q.tokens()) words.push_back(t.text);
  while (!words.empty() && IsTerminalPunctuation(words.back())) words.pop_back();
  if (!words.empty() && (IsWhWord(words[0]) || g.FindAuxiliary(words[0]) != nullptr)) {
    words[0] = ToLower(words[0]);
  }
  return JoinTokens(words);
}

Hint ComposeTb(const HintBundle& bundle, const StartPattern& pattern) {
  std::vector<std::string> parts;
  for (const Question& r : bundle.related) parts.push_back(QuestionForTemplate(r));
  return Hint::Make(Assemble(pattern, parts, Conjunction::kOr), pattern, RelatedIds(bundle),
                    HintMode::kTb);
}

Hint ComposeRsb(const HintBundle& bundle, const StartPattern& pattern, const Grammar& g) {
  std::vector<ContentClause> clauses = RsClauses(bundle, g);
  return Hint::Make(Assemble(pattern, Texts(clauses), Conjunction::kOr), pattern,
                    RelatedIds(bundle), HintMode::kRsb);
}

Hint ComposeFull(const HintBundle& bundle, const StartPattern& pattern, Conjunction conj,
                 const Grammar& g) {
  std::vector<ContentClause> clauses =
      ApplyAnaphora(RsClauses(bundle, g), bundle.entity, {}, g);
  return Hint::Make(Assemble(pattern, Texts(clauses), conj), pattern, RelatedIds(bundle),
                    HintMode::kFull);
}

Hint Compose(const HintBundle& bundle, const StartPattern& pattern, HintMode mode,
             Conjunction conj, const Grammar& g) {
  switch (mode) {
    case HintMode::kTb: return ComposeTb(bundle, pattern);
    case HintMode::kRsb: return ComposeRsb(bundle, pattern, g);
    case HintMode::kFull: return ComposeFull(bundle, pattern, conj, g);
  }
  return ComposeTb(bundle, pattern);
}

std::string EncodeSeq2SeqInput(const HintBundle& bundle) {
  std::string out = bundle.q.text();
  for (const Question& r : bundle.related) {
    out += kSeparator;
    out += r.text();
  }
  return out;
}

}  // namespace hintgen

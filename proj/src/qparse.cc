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

#include "hintgen/qparse.h"

#include <cctype>
#include <unordered_set>

#include "hintgen/errors.h"

namespace hintgen {
namespace {

using WordSet = std::unordered_set<std::string>;

const WordSet& WhWords() {
  static const auto* s = new WordSet{"who",   "what",  "when", "where", "why",
                                     "which", "whose", "whom", "how"};
  return *s;
}

// "how long", "how old", ... move as a unit.
const WordSet& HowDegreeWords() {
  static const auto* s = new WordSet{"long", "old",   "far",   "often", "tall",
                                     "big",  "fast",  "heavy", "high",  "large",
                                     "deep", "early", "late",  "soon"};
  return *s;
}

// Tokens that start or continue a noun phrase; a verb never follows them.
const WordSet& NominalBlockers() {
  static const auto* s = new WordSet{
      "the",  "a",    "an",    "this", "that", "these", "those", "my",
      "your", "his",  "her",   "its",  "our",  "their", "some",  "any",
      "every", "each", "no",   "of",   "in",   "on",    "for",   "with",
      "at",   "by",   "from",  "about", "to",  "into",  "which", "what",
      "whose"};
  return *s;
}

const WordSet& PronounSubjects() {
  static const auto* s =
      new WordSet{"i", "you", "he", "she", "it", "we", "they", "there"};
  return *s;
}

const WordSet& Adverbs() {
  static const auto* s = new WordSet{
      "still",   "ever",   "really",  "also",      "even",     "not",
      "never",   "already", "usually", "often",    "actually", "just",
      "always",  "only",   "generally", "typically", "normally", "currently"};
  return *s;
}

const WordSet& Articles() {
  static const auto* s = new WordSet{"a", "an", "the"};
  return *s;
}

const WordSet& Prepositions() {
  static const auto* s = new WordSet{
      "in",   "on",    "at",     "from",   "to",     "for",    "with",
      "near", "under", "over",   "inside", "than",   "like",   "into",
      "after", "before", "during", "without", "because"};
  return *s;
}

// Common predicate adjectives after a fronted "be" ("is X poisonous").
const WordSet& PredicateAdjectives() {
  static const auto* s = new WordSet{
      "good",      "bad",       "safe",      "dangerous",  "healthy",
      "poisonous", "toxic",     "waterproof", "afraid",    "able",
      "alive",     "real",      "true",      "possible",   "worth",
      "legal",     "available", "free",      "single",     "rich",
      "older",     "younger",   "bigger",    "smaller",    "better",
      "faster",    "taller",    "heavier",   "extinct",    "edible",
      "vegan",     "compatible", "expensive", "cheap",     "popular",
      "famous",    "ready",     "open",      "closed",     "necessary",
      "harmful",   "friendly",  "smart",     "intelligent", "fast",
      "strong",    "wrong",     "right",     "sweet",      "spicy",
      "sour",      "fresh",     "ripe",      "raw",        "gluten-free",
      "worse",     "colorblind", "nocturnal", "big",       "small",
      "old",       "young",     "tall",      "short",      "better",
      "related",   "active",    "endangered", "native",    "aggressive"};
  return *s;
}

std::string Lower(const std::vector<Token>& t, std::size_t i) {
  return ToLower(t[i].text);
}

bool IsAdverb(const std::string& lower) {
  return Adverbs().count(lower) > 0 ||
         (lower.size() > 4 && lower.compare(lower.size() - 2, 2, "ly") == 0);
}

bool IsLowerAlpha(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (!std::islower(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool EndsWithPossessive(const std::string& lower) {
  return lower.size() > 2 &&
         (lower.compare(lower.size() - 2, 2, "'s") == 0 || lower.back() == '\'');
}

bool CanPrecedeVerb(const std::string& prev_lower) {
  return NominalBlockers().count(prev_lower) == 0 && !EndsWithPossessive(prev_lower);
}

// After a pronoun subject the next non-adverb token is the verb.
std::optional<std::size_t> VerbAfterPronoun(const std::vector<Token>& t,
                                            std::size_t start, std::size_t end) {
  std::size_t j = start + 1;
  while (j < end && IsAdverb(Lower(t, j))) ++j;
  if (j < end && IsLowerAlpha(t[j].text)) return j;
  return std::nullopt;
}

// Main verb in base form following a subject that starts at `start`.
std::optional<std::size_t> FindBaseVerb(const std::vector<Token>& t,
                                        std::size_t start, std::size_t end,
                                        const Grammar& g) {
  if (start >= end) return std::nullopt;
  if (PronounSubjects().count(Lower(t, start))) {
    return VerbAfterPronoun(t, start, end);
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i = start + 1; i < end; ++i) {
    if (StartsWithUpper(t[i].text) || !g.IsVerbLemma(t[i].text)) continue;
    if (!CanPrecedeVerb(Lower(t, i - 1))) continue;
    candidates.push_back(i);
  }
  if (candidates.empty()) return std::nullopt;
  // A lemma right after a lowercase noun may be a compound head ("a gondola
  // ride in Venice cost"). Prefer a sentence-final candidate, unless that one
  // is itself inside a noun phrase ("a flat track") or an infinitive.
  const std::size_t first = candidates.front();
  const std::size_t last = candidates.back();
  const std::string prev = Lower(t, first - 1);
  if (last != first && last == end - 1 && first - 1 > start &&
      IsLowerAlpha(t[first - 1].text) && !IsAdverb(prev) && !PronounSubjects().count(prev) &&
      Lower(t, last - 1) != "to" && !Articles().count(Lower(t, last - 2))) {
    return last;
  }
  return first;
}

std::optional<std::size_t> FindParticiple(const std::vector<Token>& t,
                                          std::size_t start, std::size_t end,
                                          const Grammar& g) {
  if (start >= end) return std::nullopt;
  if (PronounSubjects().count(Lower(t, start))) {
    return VerbAfterPronoun(t, start, end);
  }
  for (std::size_t i = start + 1; i < end; ++i) {
    if (StartsWithUpper(t[i].text) || !g.IsPastParticipleLike(t[i].text)) continue;
    if (!CanPrecedeVerb(Lower(t, i - 1))) continue;
    return i;
  }
  return std::nullopt;
}

// Start of the predicate after "be <subject>" in a yes/no question.
std::optional<std::size_t> FindPredicate(const std::vector<Token>& t,
                                         std::size_t start, std::size_t end,
                                         const Grammar& g) {
  if (end < start + 2) return std::nullopt;
  if (PronounSubjects().count(Lower(t, start))) return start + 1;
  // A proper-name subject ends with its capitalized run ("Is Fortnite
  // suitable ...", "Is Mount Everest in Nepal").
  if (StartsWithUpper(t[start].text) && !Articles().count(Lower(t, start))) {
    std::size_t i = start + 1;
    while (i < end && (StartsWithUpper(t[i].text) ||
                       std::isdigit(static_cast<unsigned char>(t[i].text[0])) ||
                       (Lower(t, i) == "of" && i + 1 < end && StartsWithUpper(t[i + 1].text)))) {
      ++i;
    }
    if (i < end) return i;
  }
  for (std::size_t i = start + 1; i < end; ++i) {
    std::string w = Lower(t, i);
    bool ing = w.size() > 4 && w.compare(w.size() - 3, 3, "ing") == 0;
    if (Articles().count(w) || Prepositions().count(w) ||
        PredicateAdjectives().count(w) || IsAdverb(w) || ing ||
        (IsLowerAlpha(t[i].text) && g.IsPastParticipleLike(w))) {
      return i;
    }
  }
  // Fall back to a one-word predicate.
  return end - 1;
}

// Extends a nominal wh-phrase ("how many children", "what year") up to the
// inverted auxiliary, or up to the verb of a subject question.
std::size_t ExtendNominal(const std::vector<Token>& t, std::size_t p,
                          std::size_t end, const Grammar& g) {
  constexpr std::size_t kWindow = 5;
  std::optional<std::size_t> verb;
  for (std::size_t j = p; j < end && j < p + kWindow; ++j) {
    std::string w = Lower(t, j);
    if (g.FindAuxiliary(w) != nullptr) return j;
    if (!verb && j > p && g.IsVerbForm(w)) verb = j;
    if (NominalBlockers().count(w)) break;
  }
  return verb.value_or(p);
}

std::size_t WhPhraseEnd(const std::vector<Token>& t, std::size_t end,
                        const Grammar& g) {
  const std::string first = Lower(t, 0);
  if (first == "how") {
    if (end > 1) {
      std::string second = Lower(t, 1);
      if (second == "many" || second == "much") return ExtendNominal(t, 2, end, g);
      if (HowDegreeWords().count(second)) return 2;
      // "how smart is", "how accurate can": an adjective before the auxiliary.
      if (end > 2 && g.FindAuxiliary(second) == nullptr && IsLowerAlpha(t[1].text) &&
          g.FindAuxiliary(Lower(t, 2)) != nullptr) {
        return 2;
      }
    }
    return 1;
  }
  if (first == "what" || first == "which" || first == "whose") {
    std::size_t p = 1;
    if (end > 3) {
      std::string second = Lower(t, 1);
      if ((second == "kind" || second == "type" || second == "sort") &&
          Lower(t, 2) == "of") {
        p = 3;
      }
    }
    return ExtendNominal(t, p, end, g);
  }
  return 1;
}

[[noreturn]] void Unsupported(const Question& q, const std::string& why) {
  throw Error(ErrorCode::kUnsupportedStructure, why + ": \"" + q.text() + "\"");
}

}  // namespace

std::string_view QuestionKindName(QuestionKind k) {
  return k == QuestionKind::kYesNo ? "YesNo" : "Wh";
}

std::string_view InversionName(Inversion i) {
  switch (i) {
    case Inversion::kAuxInversion: return "AuxInversion";
    case Inversion::kDoSupport: return "DoSupport";
    case Inversion::kCopula: return "Copula";
    case Inversion::kSubjectWh: return "SubjectWh";
  }
  return "?";
}

bool IsWhWord(std::string_view word) {
  return WhWords().count(ToLower(word)) > 0;
}

std::string ParsedQuestion::SpanText(const TokenSpan& span) const {
  std::vector<std::string> parts;
  for (std::size_t i = span.begin; i < span.end; ++i) {
    parts.push_back(source.tokens()[i].text);
  }
  return Join(parts, " ");
}

ParsedQuestion ParseQuestion(const Question& q, const Grammar& g) {
  const std::vector<Token>& t = q.tokens();
  ParsedQuestion pq{.source = q};
  std::size_t end = t.size();
  while (end > 0 && IsTerminalPunctuation(t[end - 1].text)) --end;
  pq.content_end = end;
  if (end == 0) {
    throw Error(ErrorCode::kNotAQuestion, "no words: \"" + q.text() + "\"");
  }

  std::size_t p = 0;  // position of the fronted auxiliary, if any
  bool subject_capable = false;
  if (IsWhWord(t[0].text)) {
    pq.kind = QuestionKind::kWh;
    p = WhPhraseEnd(t, end, g);
    pq.wh_phrase = {0, p};
    const std::string first = Lower(t, 0);
    subject_capable = first == "who" || first == "what" || first == "which" ||
                      first == "whose" || (first == "how" && p > 2);
    if (p >= end) Unsupported(q, "wh-phrase without a clause");
  } else {
    pq.kind = QuestionKind::kYesNo;
    pq.wh_phrase = {0, 0};
    if (g.FindAuxiliary(t[0].text) == nullptr) {
      throw Error(ErrorCode::kNotAQuestion,
                  "no wh-word and no fronted auxiliary: \"" + q.text() + "\"");
    }
  }

  const AuxEntry* aux = g.FindAuxiliary(t[p].text);
  auto set_subject_wh = [&]() {
    pq.inversion = Inversion::kSubjectWh;
    pq.subject = {p, p};
    pq.remainder = {p, end};
  };
  if (aux == nullptr) {
    if (!subject_capable) Unsupported(q, "no auxiliary after the wh-phrase");
    set_subject_wh();
    return pq;
  }

  const bool wh = pq.kind == QuestionKind::kWh;
  const bool next_is_verb = p + 1 < end && IsLowerAlpha(t[p + 1].text);
  if (wh && subject_capable && next_is_verb &&
      ((aux->cls == AuxClass::kModal && g.IsVerbLemma(t[p + 1].text)) ||
       (aux->cls == AuxClass::kHaveAux && g.IsPastParticipleLike(t[p + 1].text)))) {
    // "who can help ...", "who has won ...": the modal belongs to the subject
    // question's verb group.
    set_subject_wh();
    return pq;
  }

  pq.auxiliary = Auxiliary{p, t[p].text, *aux};
  const std::size_t subject_start = p + 1;

  switch (aux->cls) {
    case AuxClass::kDoAux: {
      auto v = FindBaseVerb(t, subject_start, end, g);
      if (!v || *v == subject_start) Unsupported(q, "cannot locate subject and main verb");
      if (!IsLowerAlpha(ToLower(t[*v].text))) Unsupported(q, "main verb is not a word");
      pq.inversion = Inversion::kDoSupport;
      pq.subject = {subject_start, *v};
      pq.main_verb = *v;
      pq.remainder = {*v + 1, end};
      return pq;
    }
    case AuxClass::kBe:
      if (wh) {
        pq.inversion = Inversion::kCopula;
        pq.subject = {subject_start, subject_start};
        pq.remainder = {subject_start, end};
        return pq;
      }
      [[fallthrough]];
    case AuxClass::kModal:
    case AuxClass::kHaveAux: {
      std::optional<std::size_t> v;
      if (aux->cls == AuxClass::kBe) {
        v = FindPredicate(t, subject_start, end, g);
      } else if (aux->cls == AuxClass::kModal) {
        v = FindBaseVerb(t, subject_start, end, g);
      } else {
        v = FindParticiple(t, subject_start, end, g);
      }
      if (!v || *v <= subject_start) Unsupported(q, "cannot locate subject boundary");
      pq.inversion = Inversion::kAuxInversion;
      pq.subject = {subject_start, *v};
      pq.remainder = {*v, end};
      return pq;
    }
  }
  Unsupported(q, "unknown auxiliary class");
}

void CheckInvariants(const ParsedQuestion& pq) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "ParsedQuestion invariant: " + what);
  };
  const std::size_t n = pq.source.tokens().size();
  for (const TokenSpan* s : {&pq.wh_phrase, &pq.subject, &pq.remainder}) {
    if (s->begin > s->end || s->end > n) fail("span out of bounds");
  }
  if (pq.wh_phrase.Overlaps(pq.subject) || pq.wh_phrase.Overlaps(pq.remainder) ||
      pq.subject.Overlaps(pq.remainder)) {
    fail("spans overlap");
  }
  if ((pq.kind == QuestionKind::kYesNo) != pq.wh_phrase.empty()) {
    fail("wh_phrase must be empty iff YesNo");
  }
  if (pq.inversion == Inversion::kDoSupport &&
      (!pq.auxiliary || pq.auxiliary->entry.cls != AuxClass::kDoAux || !pq.main_verb)) {
    fail("DoSupport needs do/does/did and a main verb");
  }
  if (pq.inversion != Inversion::kDoSupport && pq.main_verb) {
    fail("main_verb only for DoSupport");
  }
  if (pq.inversion == Inversion::kSubjectWh &&
      (pq.kind != QuestionKind::kWh || pq.auxiliary)) {
    fail("SubjectWh must be a wh-question without auxiliary");
  }
  if (pq.inversion != Inversion::kSubjectWh && !pq.auxiliary) {
    fail("auxiliary absent outside SubjectWh");
  }
  if (pq.inversion == Inversion::kCopula &&
      (!pq.auxiliary || pq.auxiliary->entry.cls != AuxClass::kBe)) {
    fail("Copula needs a form of be");
  }
}

}  // namespace hintgen

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

#ifndef HINTGEN_QPARSE_H_
#define HINTGEN_QPARSE_H_

#include <optional>
#include <string>
#include <string_view>

#include "hintgen/lexicon.h"
#include "hintgen/text.h"

namespace hintgen {

enum class QuestionKind { kYesNo, kWh };

enum class Inversion {
  kAuxInversion,  // can/will/have/be fronted before the subject
  kDoSupport,     // do/does/did fronted, main verb in base form
  kCopula,        // wh-phrase immediately followed by a form of "be"
  kSubjectWh,     // the wh-phrase is the subject; nothing is inverted
};

std::string_view QuestionKindName(QuestionKind k);
std::string_view InversionName(Inversion i);

struct Auxiliary {
  std::size_t position = 0;
  std::string surface;
  AuxEntry entry;
};

// Structural analysis of one direct question. All spans index into
// source.tokens().
//
// Invariants (checked by CheckInvariants):
//   * wh_phrase, subject and remainder are pairwise disjoint and in bounds.
//   * kind == kYesNo  <=>  wh_phrase is empty.
//   * kDoSupport  => auxiliary is do/does/did and main_verb is set.
//   * kSubjectWh  => kind == kWh and no auxiliary.
//   * kCopula     => auxiliary is a form of "be".
struct ParsedQuestion {
  Question source;
  QuestionKind kind = QuestionKind::kWh;
  TokenSpan wh_phrase{};
  Inversion inversion = Inversion::kSubjectWh;
  std::optional<Auxiliary> auxiliary{};
  TokenSpan subject{};
  std::optional<std::size_t> main_verb{};
  TokenSpan remainder{};
  // One past the last non-punctuation token.
  std::size_t content_end = 0;

  std::string SpanText(const TokenSpan& span) const;
};

// Throws NotAQuestion when the text neither starts with a wh-word nor with a
// fronted auxiliary, and UnsupportedStructure when the auxiliary, subject and
// verb slots cannot be identified. The parser refuses rather than guesses.
ParsedQuestion ParseQuestion(const Question& q,
                             const Grammar& grammar = Grammar::Default());

// Throws Error(kInvalidArgument) describing the first violated invariant.
void CheckInvariants(const ParsedQuestion& pq);

bool IsWhWord(std::string_view word);

}  // namespace hintgen

#endif  // HINTGEN_QPARSE_H_

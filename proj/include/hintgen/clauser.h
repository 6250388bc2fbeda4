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

#ifndef HINTGEN_CLAUSER_H_
#define HINTGEN_CLAUSER_H_

#include <optional>
#include <string>
#include <vector>

#include "hintgen/lexicon.h"
#include "hintgen/qparse.h"
#include "hintgen/text.h"

namespace hintgen {

struct ClauseMention {
  TokenSpan span;  // into ContentClause::body
  std::string entity_id;

  bool operator==(const ClauseMention&) const = default;
};

// What invert_clause needs to rebuild the direct question. Dropped whenever a
// later rewrite (person shift, anaphora) changes the body.
struct ClauseStructure {
  QuestionKind kind = QuestionKind::kWh;
  Inversion inversion = Inversion::kSubjectWh;
  std::size_t wh_length = 0;       // body[0, wh_length) is the wh-phrase
  TokenSpan subject;               // into body
  std::optional<std::size_t> verb;  // reinflected verb (DoSupport), into body
  std::optional<std::size_t> aux;   // auxiliary inside the body (AuxInversion)
  std::string aux_surface;         // as written in the question
  std::string verb_surface;        // base form as written in the question
  bool embedded_copula = false;    // copula moved behind the subject material
  std::size_t copula_index = 0;    // where the copula sits when embedded
};

// An interrogative content clause: the reported-speech form of a question.
// Invariants: introducer is non-empty iff the question was yes/no; the body
// holds no fronted do/does/did; mention spans lie within the body.
struct ContentClause {
  std::string introducer;  // "if" for yes/no questions, empty otherwise
  std::vector<std::string> body;
  std::vector<ClauseMention> mentions;
  std::string source_id;
  std::optional<ClauseStructure> structure;

  std::string Text() const;
};

struct ClauseOptions {
  // i -> you, my -> your, me -> you, mine -> yours, am -> are.
  bool person_shift = true;
  // "what X is" instead of the default pass-through "what is X".
  bool embedded_inversion = false;
};

ContentClause ToContentClause(const ParsedQuestion& pq,
                              const ClauseOptions& options = {},
                              const Grammar& grammar = Grammar::Default());

// First-person to second-person mapping over a token sequence. Idempotent.
// Returns true if any token changed.
bool ShiftPerson(std::vector<std::string>& tokens);

// Rebuilds the direct question. Throws NonInvertible when the clause carries
// no structure (it was rewritten after construction).
Question InvertClause(const ContentClause& clause,
                      const Grammar& grammar = Grammar::Default());

}  // namespace hintgen

#endif  // HINTGEN_CLAUSER_H_

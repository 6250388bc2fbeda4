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

#ifndef HINTGEN_ANAPHORA_H_
#define HINTGEN_ANAPHORA_H_

#include <string>
#include <string_view>
#include <vector>

#include "hintgen/clauser.h"
#include "hintgen/lexicon.h"

namespace hintgen {

enum class GenderNumber { kMasculine, kFeminine, kNeuter, kPlural };

std::string_view GenderNumberName(GenderNumber g);
// Throws InvalidArgument for anything outside the closed set.
GenderNumber ParseGenderNumber(std::string_view name);

struct PronounForms {
  std::string_view subject;
  std::string_view object;
  std::string_view possessive;
};

PronounForms PronounsFor(GenderNumber g);
bool IsPronoun(std::string_view word);

// The subject entity e of a hint bundle.
class EntityRef {
 public:
  // Adds the canonical name to the aliases when missing. Throws
  // InvalidArgument for an empty canonical name or a pronoun alias.
  EntityRef(std::string id, std::string canonical, std::vector<std::string> aliases,
            GenderNumber gender_number = GenderNumber::kNeuter,
            std::string domain = "");

  const std::string& id() const { return id_; }
  const std::string& canonical() const { return canonical_; }
  const std::vector<std::string>& aliases() const { return aliases_; }
  GenderNumber gender_number() const { return gender_number_; }
  const std::string& domain() const { return domain_; }

 private:
  std::string id_;
  std::string canonical_;
  std::vector<std::string> aliases_;
  GenderNumber gender_number_;
  std::string domain_;
};

struct MentionSpan {
  std::size_t clause_index = 0;
  TokenSpan token_span;
  std::string surface;
  bool possessive = false;
};

// Alias matches in one token sequence. Longest alias wins at a position;
// matches are maximal and non-overlapping. A match is not a mention when it is
// quoted metalinguistically ("the word horse") or continues into a model
// number ("iphone 8").
std::vector<MentionSpan> FindMentionsInTokens(const std::vector<std::string>& tokens,
                                              const EntityRef& entity);

std::vector<MentionSpan> FindMentions(const std::vector<ContentClause>& clauses,
                                      const EntityRef& entity);

// Loose containment test used by validators: any alias, any inflection of the
// last alias token, no referential filtering.
bool ContainsAlias(const std::vector<std::string>& tokens, const EntityRef& entity);

struct AnaphoraOptions {
  // "the role of Samuel Adams" -> "his role" for non-first mentions.
  bool of_genitive = true;
};

struct Replacement {
  std::size_t clause_index = 0;
  TokenSpan span;                    // replaced tokens of the input clause
  std::vector<std::string> tokens;  // what they were replaced with
};

struct AnaphoraResult {
  std::vector<ContentClause> clauses;
  std::vector<Replacement> replacements;
};

// Keeps the first mention (document order) verbatim and replaces every later
// one by a pronoun chosen from the entity's gender/number and the mention's
// position: possessive, subject (directly before a finite verb) or object.
// A determiner directly before a replaced mention is absorbed
// ("your iphone" -> "it").
AnaphoraResult ApplyAnaphoraDetailed(const std::vector<ContentClause>& clauses,
                                     const EntityRef& entity,
                                     const AnaphoraOptions& options = {},
                                     const Grammar& grammar = Grammar::Default());

std::vector<ContentClause> ApplyAnaphora(const std::vector<ContentClause>& clauses,
                                         const EntityRef& entity,
                                         const AnaphoraOptions& options = {},
                                         const Grammar& grammar = Grammar::Default());

}  // namespace hintgen

#endif  // HINTGEN_ANAPHORA_H_

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

#ifndef HINTGEN_LEXICON_H_
#define HINTGEN_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hintgen {

enum class AuxClass { kDoAux, kBe, kModal, kHaveAux };
enum class Tense { kPresent, kPast };
enum class PersonNumber { kFirstSingular, kThirdSingular, kNonThirdSingular, kSingular, kPlural, kAny };

std::string_view AuxClassName(AuxClass c);
std::string_view TenseName(Tense t);
std::string_view PersonNumberName(PersonNumber pn);

struct AuxEntry {
  std::string lexeme;  // lowercase
  AuxClass cls = AuxClass::kModal;
  Tense tense = Tense::kPresent;
  PersonNumber person_number = PersonNumber::kAny;
};

// Auxiliary/copula lexicon. File format, one entry per line:
//   lexeme<TAB>class<TAB>tense<TAB>person-number
// with class in {do-aux, be, modal, have-aux}. '#' starts a comment line.
class Lexicon {
 public:
  static Lexicon Parse(std::string_view tsv);
  static Lexicon Load(const std::filesystem::path& path);

  // Case-insensitive.
  const AuxEntry* FindAuxiliary(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, AuxEntry> entries_;
};

struct IrregularForms {
  std::string third_singular;
  std::string past;
};

// Irregular-verb exception table: lemma<TAB>3sg<TAB>past per line.
class IrregularVerbs {
 public:
  static IrregularVerbs Parse(std::string_view tsv);
  static IrregularVerbs Load(const std::filesystem::path& path);

  const IrregularForms* Find(std::string_view lemma) const;
  const std::unordered_map<std::string, IrregularForms>& entries() const {
    return entries_;
  }

 private:
  std::unordered_map<std::string, IrregularForms> entries_;
};

enum class VerbTarget { kBase, kThirdSingularPresent, kPast };

struct VerbForm {
  std::string lemma;
  VerbTarget target = VerbTarget::kBase;

  bool operator==(const VerbForm&) const = default;
};

// Rule-based inflection with an irregular lookup in front. Total: unknown
// verbs take the regular rules.
std::string Reinflect(const VerbForm& form, const IrregularVerbs& irregulars);

// Whether the regular past rule doubles the final consonant (plan -> planned).
bool DoublesFinalConsonant(std::string_view lemma);

// Strips common inflectional suffixes (-'s, -s, -es, -ies, -ed, -ing).
// Crude on purpose: both sides of a comparison go through the same function.
std::string LightStem(std::string_view word);

// Everything the rule engine knows about English words: auxiliaries, verb
// lemmas and their inflections.
class Grammar {
 public:
  Grammar(Lexicon lexicon, IrregularVerbs irregulars,
          const std::vector<std::string>& regular_lemmas);

  // Built from the data compiled into the library.
  static const Grammar& Default();
  static Grammar FromFiles(const std::filesystem::path& lexicon,
                           const std::filesystem::path& irregulars,
                           const std::filesystem::path& verbs);

  const Lexicon& lexicon() const { return lexicon_; }
  const IrregularVerbs& irregulars() const { return irregulars_; }

  const AuxEntry* FindAuxiliary(std::string_view word) const {
    return lexicon_.FindAuxiliary(word);
  }
  bool IsVerbLemma(std::string_view word) const;
  // Base, third-singular or past form of a known verb (case-insensitive).
  bool IsVerbForm(std::string_view word) const;
  // Inflected or finite: auxiliary, or 3sg/past form of a known verb.
  bool IsFiniteVerb(std::string_view word) const;
  bool IsPastParticipleLike(std::string_view word) const;
  std::optional<std::string> Lemmatize(std::string_view word) const;
  // Lemma when known, LightStem otherwise.
  std::string Stem(std::string_view word) const;

 private:
  Lexicon lexicon_;
  IrregularVerbs irregulars_;
  std::unordered_set<std::string> lemmas_;
  std::unordered_map<std::string, std::string> form_to_lemma_;
  std::unordered_set<std::string> finite_forms_;
};

// Reads a whole file; throws Error(kIo) on failure.
std::string ReadFile(const std::filesystem::path& path);

// Non-empty, non-comment lines with trailing '\r' removed.
std::vector<std::string> DataLines(std::string_view text);

}  // namespace hintgen

#endif  // HINTGEN_LEXICON_H_

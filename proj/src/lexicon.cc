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

#include "hintgen/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hintgen/embedded_data.h"
#include "hintgen/errors.h"
#include "hintgen/text.h"

namespace hintgen {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

int VowelGroups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    bool v = IsVowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Multi-syllable stems stressed on the final syllable.
const std::unordered_set<std::string>& DoublingExceptions() {
  static const auto* set = new std::unordered_set<std::string>{
      "admit", "commit", "compel", "control", "equip", "occur", "omit",
      "patrol", "permit", "prefer", "propel", "refer", "regret", "submit",
      "transfer", "upset", "confer", "deter", "expel", "incur", "rebel"};
  return *set;
}

const std::unordered_set<std::string>& IrregularParticiples() {
  static const auto* set = new std::unordered_set<std::string>{
      "been",    "done",   "gone",    "seen",    "taken",   "given",
      "eaten",   "written", "known",  "shown",   "born",    "made",
      "won",     "built",  "grown",   "drawn",   "driven",  "broken",
      "chosen",  "spoken", "stolen",  "frozen",  "forgotten", "hidden",
      "ridden",  "risen",  "fallen",  "thrown",  "flown",   "worn",
      "torn",    "sworn",  "beaten",  "bitten",  "begun",   "drunk",
      "sung",    "sunk",   "swum",    "become",  "come",    "run",
      "overcome", "regrown"};
  return *set;
}

AuxClass ParseAuxClass(const std::string& s, int line) {
  if (s == "do-aux") return AuxClass::kDoAux;
  if (s == "be") return AuxClass::kBe;
  if (s == "modal") return AuxClass::kModal;
  if (s == "have-aux") return AuxClass::kHaveAux;
  throw Error(ErrorCode::kInvalidArgument,
              "lexicon line " + std::to_string(line) + ": unknown class '" + s + "'");
}

Tense ParseTense(const std::string& s, int line) {
  if (s == "present") return Tense::kPresent;
  if (s == "past") return Tense::kPast;
  throw Error(ErrorCode::kInvalidArgument,
              "lexicon line " + std::to_string(line) + ": unknown tense '" + s + "'");
}

PersonNumber ParsePersonNumber(const std::string& s, int line) {
  if (s == "1sg") return PersonNumber::kFirstSingular;
  if (s == "3sg") return PersonNumber::kThirdSingular;
  if (s == "non3sg") return PersonNumber::kNonThirdSingular;
  if (s == "sg") return PersonNumber::kSingular;
  if (s == "pl") return PersonNumber::kPlural;
  if (s == "any") return PersonNumber::kAny;
  throw Error(ErrorCode::kInvalidArgument, "lexicon line " + std::to_string(line) +
                                               ": unknown person-number '" + s + "'");
}

}  // namespace

std::string_view AuxClassName(AuxClass c) {
  switch (c) {
    case AuxClass::kDoAux: return "do-aux";
    case AuxClass::kBe: return "be";
    case AuxClass::kModal: return "modal";
    case AuxClass::kHaveAux: return "have-aux";
  }
  return "?";
}

std::string_view TenseName(Tense t) {
  return t == Tense::kPast ? "past" : "present";
}

std::string_view PersonNumberName(PersonNumber pn) {
  switch (pn) {
    case PersonNumber::kFirstSingular: return "1sg";
    case PersonNumber::kThirdSingular: return "3sg";
    case PersonNumber::kNonThirdSingular: return "non3sg";
    case PersonNumber::kSingular: return "sg";
    case PersonNumber::kPlural: return "pl";
    case PersonNumber::kAny: return "any";
  }
  return "?";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> DataLines(std::string_view text) {
  std::vector<std::string> out;
  for (std::string line : Split(text, "\n")) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

Lexicon Lexicon::Parse(std::string_view tsv) {
  Lexicon lex;
  int line_no = 0;
  for (const std::string& line : DataLines(tsv)) {
    ++line_no;
    std::vector<std::string> f = Split(line, "\t");
    if (f.size() != 4) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon entry " + std::to_string(line_no) + ": expected 4 fields");
    }
    AuxEntry e{ToLower(f[0]), ParseAuxClass(f[1], line_no),
               ParseTense(f[2], line_no), ParsePersonNumber(f[3], line_no)};
    lex.entries_[e.lexeme] = e;
  }
  return lex;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const AuxEntry* Lexicon::FindAuxiliary(std::string_view word) const {
  auto it = entries_.find(ToLower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

IrregularVerbs IrregularVerbs::Parse(std::string_view tsv) {
  IrregularVerbs table;
  int line_no = 0;
  for (const std::string& line : DataLines(tsv)) {
    ++line_no;
    std::vector<std::string> f = Split(line, "\t");
    if (f.size() != 3) {
      throw Error(ErrorCode::kInvalidArgument, "irregular verb entry " +
                                                   std::to_string(line_no) +
                                                   ": expected 3 fields");
    }
    table.entries_[ToLower(f[0])] = {ToLower(f[1]), ToLower(f[2])};
  }
  return table;
}

IrregularVerbs IrregularVerbs::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const IrregularForms* IrregularVerbs::Find(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

bool DoublesFinalConsonant(std::string_view lemma) {
  std::string w(lemma);
  if (DoublingExceptions().count(w)) return true;
  if (w.size() < 3) return false;
  char last = w[w.size() - 1];
  char mid = w[w.size() - 2];
  char first = w[w.size() - 3];
  if (IsVowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  if (!IsVowel(mid) || IsVowel(first)) return false;
  return VowelGroups(w) == 1;
}

std::string Reinflect(const VerbForm& form, const IrregularVerbs& irregulars) {
  const std::string& v = form.lemma;
  if (form.target == VerbTarget::kBase || v.empty()) return v;
  const IrregularForms* irr = irregulars.Find(v);
  const char last = v.back();
  const bool consonant_y =
      last == 'y' && v.size() >= 2 && !IsVowel(v[v.size() - 2]);

  if (form.target == VerbTarget::kThirdSingularPresent) {
    if (irr != nullptr) return irr->third_singular;
    if (last == 's' || last == 'x' || last == 'z' || EndsWith(v, "ch") ||
        EndsWith(v, "sh")) {
      return v + "es";
    }
    if (consonant_y) return v.substr(0, v.size() - 1) + "ies";
    return v + "s";
  }

  if (irr != nullptr) return irr->past;
  if (consonant_y) return v.substr(0, v.size() - 1) + "ied";
  if (last == 'e') return v + "d";
  if (DoublesFinalConsonant(v)) return v + last + "ed";
  return v + "ed";
}

std::string LightStem(std::string_view word) {
  std::string w = ToLower(word);
  if (EndsWith(w, "'s")) w.resize(w.size() - 2);
  while (!w.empty() && w.back() == '\'') w.pop_back();

  if (EndsWith(w, "ies") && w.size() > 4) {
    w = w.substr(0, w.size() - 3) + "y";
  } else if (EndsWith(w, "ing") && w.size() > 5) {
    w.resize(w.size() - 3);
  } else if (EndsWith(w, "ed") && w.size() > 4) {
    w.resize(w.size() - 2);
  } else if (EndsWith(w, "es") && w.size() > 4) {
    w.resize(w.size() - 2);
  } else if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 3) {
    w.resize(w.size() - 1);
  }
  if (w.size() > 3 && w.back() == 'e') w.pop_back();
  if (w.size() > 3 && w[w.size() - 1] == w[w.size() - 2] && !IsVowel(w.back())) {
    w.pop_back();
  }
  return w;
}

Grammar::Grammar(Lexicon lexicon, IrregularVerbs irregulars,
                 const std::vector<std::string>& regular_lemmas)
    : lexicon_(std::move(lexicon)), irregulars_(std::move(irregulars)) {
  for (const auto& [lemma, forms] : irregulars_.entries()) lemmas_.insert(lemma);
  for (const std::string& l : regular_lemmas) lemmas_.insert(ToLower(Trim(l)));
  // Sorted so that homographs (lay: lemma, and past of lie) resolve the same
  // way on every platform.
  std::vector<std::string> sorted(lemmas_.begin(), lemmas_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const std::string& lemma : sorted) {
    std::string third = Reinflect({lemma, VerbTarget::kThirdSingularPresent}, irregulars_);
    std::string past = Reinflect({lemma, VerbTarget::kPast}, irregulars_);
    form_to_lemma_.emplace(lemma, lemma);
    form_to_lemma_.emplace(third, lemma);
    form_to_lemma_.emplace(past, lemma);
    finite_forms_.insert(third);
    finite_forms_.insert(past);
  }
}

const Grammar& Grammar::Default() {
  static const Grammar* grammar = new Grammar(
      Lexicon::Parse(embedded::lexicon_tsv()),
      IrregularVerbs::Parse(embedded::irregular_verbs_tsv()),
      DataLines(embedded::verbs_txt()));
  return *grammar;
}

Grammar Grammar::FromFiles(const std::filesystem::path& lexicon,
                           const std::filesystem::path& irregulars,
                           const std::filesystem::path& verbs) {
  return Grammar(Lexicon::Load(lexicon), IrregularVerbs::Load(irregulars),
                 DataLines(ReadFile(verbs)));
}

bool Grammar::IsVerbLemma(std::string_view word) const {
  return lemmas_.count(ToLower(word)) > 0;
}

bool Grammar::IsVerbForm(std::string_view word) const {
  return form_to_lemma_.count(ToLower(word)) > 0;
}

bool Grammar::IsFiniteVerb(std::string_view word) const {
  return FindAuxiliary(word) != nullptr || finite_forms_.count(ToLower(word)) > 0;
}

bool Grammar::IsPastParticipleLike(std::string_view word) const {
  std::string w = ToLower(word);
  if (IrregularParticiples().count(w)) return true;
  auto it = form_to_lemma_.find(w);
  if (it != form_to_lemma_.end() &&
      Reinflect({it->second, VerbTarget::kPast}, irregulars_) == w) {
    return true;
  }
  return EndsWith(w, "ed") && w.size() > 4;
}

std::optional<std::string> Grammar::Lemmatize(std::string_view word) const {
  auto it = form_to_lemma_.find(ToLower(word));
  if (it == form_to_lemma_.end()) return std::nullopt;
  return it->second;
}

std::string Grammar::Stem(std::string_view word) const {
  std::string w = ToLower(word);
  if (auto lemma = Lemmatize(w)) return LightStem(*lemma);
  return LightStem(w);
}

}  // namespace hintgen

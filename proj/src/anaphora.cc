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

#include "hintgen/anaphora.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>
#include <unordered_set>

#include "hintgen/errors.h"

namespace hintgen {
namespace {

const std::unordered_set<std::string>& AllPronouns() {
  static const auto* s = new std::unordered_set<std::string>{
      "he", "him", "his", "she", "her", "hers", "it", "its", "they", "them",
      "their", "theirs", "i", "me", "my", "you", "your", "we", "us", "our"};
  return *s;
}

const std::unordered_set<std::string>& AbsorbableDeterminers() {
  static const auto* s = new std::unordered_set<std::string>{
      "the", "a", "an", "this", "that", "my", "your", "his", "her", "its",
      "our", "their"};
  return *s;
}

const std::unordered_set<std::string>& MetalinguisticNouns() {
  static const auto* s = new std::unordered_set<std::string>{"word", "term", "name"};
  return *s;
}

const std::unordered_set<std::string>& SkippableAdverbs() {
  static const auto* s = new std::unordered_set<std::string>{
      "still", "ever", "really", "also", "even", "not", "never", "already",
      "usually", "often", "actually", "just", "always", "only", "currently"};
  return *s;
}

enum class LastTokenMatch { kNone, kExact, kPossessive };

LastTokenMatch MatchLast(const std::string& token, const std::string& alias_last,
                         bool proper, bool has_next) {
  if (EqualsIgnoreCase(token, alias_last)) return LastTokenMatch::kExact;
  const std::string t = ToLower(token);
  const std::string& a = alias_last;
  if (t == a + "'s" || t == a + "\xE2\x80\x99s") return LastTokenMatch::kPossessive;
  if (!a.empty() && a.back() == 's' && t == a + "'") return LastTokenMatch::kPossessive;
  // Fused possessive without apostrophe ("Ronaldos child"); only for proper
  // names, and only before the possessed noun, so plurals of common nouns
  // ("a group of horses") are not mistaken for possessives.
  if (proper && has_next && t == a + "s") return LastTokenMatch::kPossessive;
  return LastTokenMatch::kNone;
}

bool IsPluralOf(const std::string& word, const std::string& singular) {
  return !singular.empty() && (word == singular + "s" || word == singular + "es");
}

struct AliasTokens {
  std::vector<std::string> words;  // lowercase
  std::size_t chars = 0;
};

std::vector<AliasTokens> SortedAliases(const EntityRef& e) {
  std::vector<AliasTokens> out;
  for (const std::string& a : e.aliases()) {
    AliasTokens at;
    for (const std::string& w : SplitWhitespace(a)) at.words.push_back(ToLower(w));
    at.chars = a.size();
    if (!at.words.empty()) out.push_back(std::move(at));
  }
  std::stable_sort(out.begin(), out.end(), [](const AliasTokens& x, const AliasTokens& y) {
    if (x.words.size() != y.words.size()) return x.words.size() > y.words.size();
    return x.chars > y.chars;
  });
  return out;
}

// Words that can border a standalone noun phrase. Anything else that is
// lowercase next to a mention makes it part of a larger phrase ("a racing
// horse", "the pizza topping"), where a pronoun would be ungrammatical.
const std::unordered_set<std::string>& PhraseBoundaryWords() {
  static const auto* s = new std::unordered_set<std::string>{
      "in",    "on",     "at",      "from",   "to",     "for",    "with",  "near",
      "under", "over",   "inside",  "than",   "like",   "into",   "after", "before",
      "during", "without", "because", "about", "between", "against", "across", "through",
      "of",    "by",     "as",      "and",    "or",     "but",    "if",    "whether",
      "that",  "when",   "where",   "why",    "how",    "what",   "who",   "which",
      "whose", "whom",   "the",     "a",      "an",     "this",   "these", "those",
      "some",  "any",    "every",   "each",   "no",     "so",     "too",   "right",
      "now",   "today",  "again",   "yet",    "all",    "last",   "next",  "not",
      "even",  "still",  "ever",    "also",   "never",  "always", "just",  "only"};
  return *s;
}

bool IsLowerWord(const std::string& w) {
  return !w.empty() && std::islower(static_cast<unsigned char>(w[0]));
}

bool BordersPhrase(const std::string& word, const Grammar& g, bool allow_base_verb) {
  const std::string w = ToLower(word);
  if (!IsLowerWord(word)) return true;
  if (PhraseBoundaryWords().count(w) || IsPronoun(w)) return true;
  if (w.size() > 4 && w.compare(w.size() - 2, 2, "ly") == 0) return true;
  if (g.FindAuxiliary(w) != nullptr || g.IsFiniteVerb(w) || g.IsPastParticipleLike(w)) {
    return true;
  }
  return allow_base_verb && g.IsVerbLemma(w);
}

bool IsIngForm(const std::string& w) {
  return w.size() > 4 && w.compare(w.size() - 3, 3, "ing") == 0;
}

// True when the mention at [s, e) is a noun phrase of its own. `wh_end` is
// where the clause's wh-phrase ends ("how much money | X earns").
bool StandsAlone(const std::vector<std::string>& body, std::size_t s, std::size_t e,
                 std::size_t wh_end, bool plural, const Grammar& g) {
  const bool after_aux = s > 0 && g.FindAuxiliary(body[s - 1]) != nullptr;
  if (e < body.size() && !IsTerminalPunctuation(body[e]) &&
      !BordersPhrase(body[e], g, plural) && !(after_aux && IsIngForm(ToLower(body[e])))) {
    return false;
  }
  if (s > 0 && s != wh_end && !BordersPhrase(body[s - 1], g, true)) return false;
  return true;
}

// "the [adj] N of [det] <mention>": returns the index of "the" and the index
// of "of", or nothing.
std::optional<std::pair<std::size_t, std::size_t>> OfGenitive(
    const std::vector<std::string>& body, std::size_t s, std::size_t cursor) {
  std::size_t of = s;
  if (of > cursor && AbsorbableDeterminers().count(ToLower(body[of - 1]))) --of;
  if (of == cursor || ToLower(body[of - 1]) != "of") return std::nullopt;
  --of;
  // One or two words between "the" and "of".
  for (std::size_t len = 1; len <= 2; ++len) {
    if (of < cursor + len + 1) break;
    const std::size_t the = of - len - 1;
    if (ToLower(body[the]) != "the") continue;
    bool ok = true;
    for (std::size_t k = the + 1; k < of; ++k) {
      const std::string w = ToLower(body[k]);
      if (AbsorbableDeterminers().count(w) || IsPronoun(w) || PhraseBoundaryWords().count(w) ||
          !IsLowerWord(body[k])) {
        ok = false;
      }
    }
    if (ok) return std::make_pair(the, of);
  }
  return std::nullopt;
}

bool StartsWithDigit(const std::string& s) {
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0]));
}

}  // namespace

std::string_view GenderNumberName(GenderNumber g) {
  switch (g) {
    case GenderNumber::kMasculine: return "masculine";
    case GenderNumber::kFeminine: return "feminine";
    case GenderNumber::kNeuter: return "neuter";
    case GenderNumber::kPlural: return "plural";
  }
  return "neuter";
}

GenderNumber ParseGenderNumber(std::string_view name) {
  if (name == "masculine") return GenderNumber::kMasculine;
  if (name == "feminine") return GenderNumber::kFeminine;
  if (name == "neuter") return GenderNumber::kNeuter;
  if (name == "plural") return GenderNumber::kPlural;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown gender_number '" + std::string(name) + "'");
}

PronounForms PronounsFor(GenderNumber g) {
  switch (g) {
    case GenderNumber::kMasculine: return {"he", "him", "his"};
    case GenderNumber::kFeminine: return {"she", "her", "her"};
    case GenderNumber::kNeuter: return {"it", "it", "its"};
    case GenderNumber::kPlural: return {"they", "them", "their"};
  }
  return {"it", "it", "its"};
}

bool IsPronoun(std::string_view word) {
  return AllPronouns().count(ToLower(word)) > 0;
}

EntityRef::EntityRef(std::string id, std::string canonical,
                     std::vector<std::string> aliases, GenderNumber gender_number,
                     std::string domain)
    : id_(std::move(id)),
      canonical_(Trim(canonical)),
      aliases_(std::move(aliases)),
      gender_number_(gender_number),
      domain_(std::move(domain)) {
  if (canonical_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "entity canonical name is empty");
  }
  if (std::find(aliases_.begin(), aliases_.end(), canonical_) == aliases_.end()) {
    aliases_.insert(aliases_.begin(), canonical_);
  }
  for (const std::string& a : aliases_) {
    if (Trim(a).empty()) throw Error(ErrorCode::kInvalidArgument, "empty alias");
    if (IsPronoun(Trim(a))) {
      throw Error(ErrorCode::kInvalidArgument, "alias '" + a + "' is a pronoun");
    }
  }
}

std::vector<MentionSpan> FindMentionsInTokens(const std::vector<std::string>& tokens,
                                              const EntityRef& entity) {
  const std::vector<AliasTokens> aliases = SortedAliases(entity);
  const bool proper = StartsWithUpper(entity.canonical());
  std::vector<MentionSpan> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    bool possessive = false;
    for (const AliasTokens& a : aliases) {
      const std::size_t len = a.words.size();
      if (i + len > tokens.size()) continue;
      bool prefix_ok = true;
      for (std::size_t k = 0; k + 1 < len && prefix_ok; ++k) {
        prefix_ok = EqualsIgnoreCase(tokens[i + k], a.words[k]);
      }
      if (!prefix_ok) continue;
      const bool has_next =
          i + len < tokens.size() && !IsTerminalPunctuation(tokens[i + len]);
      LastTokenMatch m = MatchLast(tokens[i + len - 1], a.words.back(), proper, has_next);
      if (m == LastTokenMatch::kNone) continue;
      matched = len;
      possessive = m == LastTokenMatch::kPossessive;
      break;
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    const bool metalinguistic =
        i > 0 && MetalinguisticNouns().count(ToLower(tokens[i - 1])) > 0;
    const bool model_number =
        i + matched < tokens.size() && StartsWithDigit(tokens[i + matched]);
    if (!metalinguistic && !model_number) {
      MentionSpan m;
      m.token_span = {i, i + matched};
      std::vector<std::string> words(tokens.begin() + i, tokens.begin() + i + matched);
      m.surface = Join(words, " ");
      m.possessive = possessive;
      out.push_back(std::move(m));
    }
    i += matched;
  }
  return out;
}

std::vector<MentionSpan> FindMentions(const std::vector<ContentClause>& clauses,
                                      const EntityRef& entity) {
  std::vector<MentionSpan> out;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (MentionSpan m : FindMentionsInTokens(clauses[c].body, entity)) {
      m.clause_index = c;
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool ContainsAlias(const std::vector<std::string>& tokens, const EntityRef& entity) {
  for (const AliasTokens& a : SortedAliases(entity)) {
    const std::size_t len = a.words.size();
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      bool ok = true;
      for (std::size_t k = 0; k + 1 < len && ok; ++k) {
        ok = EqualsIgnoreCase(tokens[i + k], a.words[k]);
      }
      if (!ok) continue;
      const std::string last = ToLower(tokens[i + len - 1]);
      const std::string& want = a.words.back();
      if (last == want || last == want + "s" || last == want + "es" ||
          last == want + "'s" || last == want + "'") {
        return true;
      }
    }
  }
  return false;
}

AnaphoraResult ApplyAnaphoraDetailed(const std::vector<ContentClause>& clauses,
                                     const EntityRef& entity,
                                     const AnaphoraOptions& options,
                                     const Grammar& grammar) {
  AnaphoraResult result;
  result.clauses = clauses;
  const std::vector<MentionSpan> mentions = FindMentions(clauses, entity);
  const PronounForms pronouns = PronounsFor(entity.gender_number());
  const bool plural = entity.gender_number() == GenderNumber::kPlural;
  const std::vector<std::string> canonical_words = SplitWhitespace(entity.canonical());
  const std::string canonical_last =
      canonical_words.empty() ? std::string() : ToLower(canonical_words.back());

  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const std::vector<std::string>& body = clauses[c].body;
    std::vector<std::string> out;
    std::vector<ClauseMention> out_mentions;
    std::size_t cursor = 0;
    bool changed = false;
    const std::size_t wh_end =
        clauses[c].structure ? clauses[c].structure->wh_length : std::size_t{0};

    for (std::size_t m = 0; m < mentions.size(); ++m) {
      const MentionSpan& mention = mentions[m];
      if (mention.clause_index != c) continue;
      const std::size_t s = mention.token_span.begin;
      const std::size_t e = mention.token_span.end;
      if (m == 0 || mentions.size() == 1) {
        out.insert(out.end(), body.begin() + cursor, body.begin() + e);
        out_mentions.push_back({{out.size() - (e - s), out.size()}, entity.id()});
        cursor = e;
        continue;
      }

      auto absorbs = [&](std::size_t pos) {
        return pos > cursor && AbsorbableDeterminers().count(ToLower(body[pos - 1])) > 0;
      };
      std::size_t rs = s;
      std::vector<std::string> repl;
      if (mention.possessive) {
        repl = {std::string(pronouns.possessive)};
        if (absorbs(s)) rs = s - 1;
      } else if (auto gen = options.of_genitive ? OfGenitive(body, s, cursor) : std::nullopt;
                 gen && StandsAlone(body, s, e, s, plural, grammar)) {
        rs = gen->first;
        repl = {std::string(pronouns.possessive)};
        repl.insert(repl.end(), body.begin() + gen->first + 1, body.begin() + gen->second);
      } else {
        if (!StandsAlone(body, s, e, wh_end, plural, grammar)) continue;
        // A plural alias of a singular entity names the kind, not the entity
        // ("a group of horses"); "it" would not agree.
        if (!plural && IsPluralOf(ToLower(body[e - 1]), canonical_last)) continue;
        std::size_t next = e;
        while (next < body.size() && SkippableAdverbs().count(ToLower(body[next]))) ++next;
        if (absorbs(s)) rs = s - 1;
        // Subject either before its verb or right after an inverted auxiliary
        // ("how tall is he").
        const bool subject =
            (next < body.size() &&
             (grammar.IsFiniteVerb(body[next]) || (plural && grammar.IsVerbLemma(body[next])))) ||
            (rs > cursor && grammar.FindAuxiliary(body[rs - 1]) != nullptr);
        repl = {std::string(subject ? pronouns.subject : pronouns.object)};
      }

      out.insert(out.end(), body.begin() + cursor, body.begin() + rs);
      out_mentions.push_back({{out.size(), out.size() + 1}, entity.id()});
      out.insert(out.end(), repl.begin(), repl.end());
      result.replacements.push_back({c, {rs, e}, repl});
      cursor = e;
      changed = true;
    }
    out.insert(out.end(), body.begin() + cursor, body.end());

    ContentClause& clause = result.clauses[c];
    if (changed) {
      clause.body = std::move(out);
      clause.structure.reset();
    }
    clause.mentions = std::move(out_mentions);
  }
  return result;
}

std::vector<ContentClause> ApplyAnaphora(const std::vector<ContentClause>& clauses,
                                         const EntityRef& entity,
                                         const AnaphoraOptions& options,
                                         const Grammar& grammar) {
  return ApplyAnaphoraDetailed(clauses, entity, options, grammar).clauses;
}

}  // namespace hintgen

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

#include "hintgen/clauser.h"

#include "hintgen/errors.h"

namespace hintgen {
namespace {

VerbTarget TargetFor(const AuxEntry& do_aux) {
  if (do_aux.tense == Tense::kPast) return VerbTarget::kPast;
  if (do_aux.person_number == PersonNumber::kThirdSingular) {
    return VerbTarget::kThirdSingularPresent;
  }
  return VerbTarget::kBase;
}

std::string_view DoFor(VerbTarget target) {
  switch (target) {
    case VerbTarget::kPast: return "did";
    case VerbTarget::kThirdSingularPresent: return "does";
    case VerbTarget::kBase: return "do";
  }
  return "do";
}

bool IsIngOrParticiple(const std::string& w, const Grammar& g) {
  std::string lower = ToLower(w);
  bool ing = lower.size() > 4 && lower.compare(lower.size() - 3, 3, "ing") == 0;
  return ing || g.IsPastParticipleLike(lower);
}

void Append(std::vector<std::string>& out, const std::vector<std::string>& src,
            std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) out.push_back(src[i]);
}

}  // namespace

std::string ContentClause::Text() const {
  std::string body_text = JoinTokens(body);
  if (introducer.empty()) return body_text;
  return introducer + " " + body_text;
}

bool ShiftPerson(std::vector<std::string>& tokens) {
  const std::vector<std::string> original = tokens;
  auto is_i = [&](std::size_t i) {
    return i < original.size() && ToLower(original[i]) == "i";
  };
  bool changed = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string w = ToLower(original[i]);
    std::string repl;
    if (w == "i" || w == "me") {
      repl = "you";
    } else if (w == "my") {
      repl = "your";
    } else if (w == "mine") {
      repl = "yours";
    } else if (w == "myself") {
      repl = "yourself";
    } else if (w == "i'm") {
      repl = "you're";
    } else if (w == "i've") {
      repl = "you've";
    } else if (w == "i'd") {
      repl = "you'd";
    } else if (w == "i'll") {
      repl = "you'll";
    } else if (w == "am") {
      repl = "are";
    } else if (w == "was" && ((i > 0 && is_i(i - 1)) || is_i(i + 1))) {
      repl = "were";
    }
    if (!repl.empty()) {
      tokens[i] = repl;
      changed = true;
    }
  }
  return changed;
}

ContentClause ToContentClause(const ParsedQuestion& pq, const ClauseOptions& options,
                              const Grammar& g) {
  const std::vector<Token>& t = pq.source.tokens();
  std::vector<std::string> src;
  src.reserve(pq.content_end);
  for (std::size_t i = 0; i < pq.content_end; ++i) src.push_back(t[i].text);
  // The question-initial token is a wh-word or an auxiliary; mid-clause it is
  // lowercase.
  src[0] = ToLower(src[0]);

  ContentClause clause;
  clause.source_id = pq.source.id();
  clause.introducer = pq.kind == QuestionKind::kYesNo ? "if" : "";

  ClauseStructure s;
  s.kind = pq.kind;
  s.inversion = pq.inversion;
  s.wh_length = pq.wh_phrase.size();
  if (pq.auxiliary) s.aux_surface = pq.auxiliary->surface;

  std::vector<std::string>& body = clause.body;
  Append(body, src, pq.wh_phrase.begin, pq.wh_phrase.end);

  switch (pq.inversion) {
    case Inversion::kDoSupport: {
      s.subject = {body.size(), body.size() + pq.subject.size()};
      Append(body, src, pq.subject.begin, pq.subject.end);
      const std::size_t v = *pq.main_verb;
      s.verb = body.size();
      s.verb_surface = t[v].text;
      body.push_back(Reinflect({ToLower(t[v].text), TargetFor(pq.auxiliary->entry)},
                               g.irregulars()));
      Append(body, src, pq.remainder.begin, pq.remainder.end);
      break;
    }
    case Inversion::kAuxInversion: {
      s.subject = {body.size(), body.size() + pq.subject.size()};
      Append(body, src, pq.subject.begin, pq.subject.end);
      s.aux = body.size();
      body.push_back(src[pq.auxiliary->position]);
      Append(body, src, pq.remainder.begin, pq.remainder.end);
      break;
    }
    case Inversion::kCopula: {
      const std::string& copula = src[pq.auxiliary->position];
      if (!options.embedded_inversion || pq.remainder.empty()) {
        body.push_back(copula);
        Append(body, src, pq.remainder.begin, pq.remainder.end);
        break;
      }
      s.embedded_copula = true;
      std::size_t last = pq.remainder.end - 1;
      bool before_last = pq.remainder.size() > 1 && IsIngOrParticiple(src[last], g);
      std::size_t stop = before_last ? last : pq.remainder.end;
      Append(body, src, pq.remainder.begin, stop);
      s.copula_index = body.size();
      body.push_back(copula);
      Append(body, src, stop, pq.remainder.end);
      break;
    }
    case Inversion::kSubjectWh:
      Append(body, src, pq.remainder.begin, pq.remainder.end);
      break;
  }

  clause.structure = s;
  if (options.person_shift && ShiftPerson(body)) clause.structure.reset();
  return clause;
}

Question InvertClause(const ContentClause& clause, const Grammar& g) {
  if (!clause.structure) {
    throw Error(ErrorCode::kNonInvertible,
                "clause was rewritten after construction: \"" + clause.Text() + "\"");
  }
  const ClauseStructure& s = *clause.structure;
  const std::vector<std::string>& b = clause.body;
  std::vector<std::string> out;
  Append(out, b, 0, s.wh_length);

  switch (s.inversion) {
    case Inversion::kDoSupport: {
      const std::size_t v = *s.verb;
      const std::string lemma = ToLower(s.verb_surface);
      const std::string& inflected = b[v];
      std::vector<VerbTarget> implied;
      for (VerbTarget target : {VerbTarget::kBase, VerbTarget::kThirdSingularPresent,
                                VerbTarget::kPast}) {
        if (Reinflect({lemma, target}, g.irregulars()) == inflected) {
          implied.push_back(target);
        }
      }
      std::string aux;
      if (implied.size() == 1 &&
          !EqualsIgnoreCase(DoFor(implied[0]), s.aux_surface)) {
        aux = std::string(DoFor(implied[0]));
      } else if (implied.empty()) {
        throw Error(ErrorCode::kNonInvertible,
                    "verb '" + inflected + "' is not an inflection of '" + lemma + "'");
      } else {
        // Agreeing or ambiguous (cut/cut/cut): keep the surface we parsed.
        aux = s.aux_surface;
      }
      out.push_back(aux);
      Append(out, b, s.subject.begin, s.subject.end);
      out.push_back(s.verb_surface);
      Append(out, b, v + 1, b.size());
      break;
    }
    case Inversion::kAuxInversion: {
      const std::size_t a = *s.aux;
      out.push_back(s.kind == QuestionKind::kYesNo ? s.aux_surface : b[a]);
      Append(out, b, s.subject.begin, s.subject.end);
      Append(out, b, a + 1, b.size());
      break;
    }
    case Inversion::kCopula:
      if (s.embedded_copula) {
        out.push_back(b[s.copula_index]);
        Append(out, b, s.wh_length, s.copula_index);
        Append(out, b, s.copula_index + 1, b.size());
      } else {
        Append(out, b, s.wh_length, b.size());
      }
      break;
    case Inversion::kSubjectWh:
      Append(out, b, s.wh_length, b.size());
      break;
  }

  if (out.empty()) {
    throw Error(ErrorCode::kNonInvertible, "empty clause");
  }
  out[0] = CapitalizeFirst(out[0]);
  out.push_back("?");
  return Question(clause.source_id, JoinTokens(out));
}

}  // namespace hintgen

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

#include "hintgen/validate.h"

#include <cmath>
#include <cstdlib>
#include <map>

#include "hintgen/embedded_data.h"
#include "hintgen/errors.h"
#include "hintgen/qparse.h"

namespace hintgen {
namespace {

std::map<std::string, double> TermFrequencies(const std::vector<std::string>& tokens) {
  std::map<std::string, double> tf;
  for (const std::string& t : tokens) tf[t] += 1.0;
  return tf;
}

// Whitespace words with surrounding punctuation removed; apostrophes kept so
// possessives stay recognizable.
std::vector<std::string> WordTokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string w : SplitWhitespace(text)) {
    auto is_trim = [](char c) {
      return c == ',' || c == '.' || c == '?' || c == '!' || c == ';' || c == ':' ||
             c == '"' || c == '(' || c == ')';
    };
    std::size_t b = 0;
    std::size_t e = w.size();
    while (b < e && is_trim(w[b])) ++b;
    while (e > b && is_trim(w[e - 1])) --e;
    if (e > b) out.push_back(w.substr(b, e - b));
  }
  return out;
}

const std::unordered_set<std::string>& AnaphoraWords() {
  static const auto* s = new std::unordered_set<std::string>{
      "he", "she", "it", "they", "his", "her", "its", "their", "him", "them",
      "you", "your"};
  return *s;
}

bool ParseBool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorCode::kInvalidArgument, "config " + key + ": expected true/false");
}

double ParseDouble(const std::string& v, const std::string& key) {
  char* end = nullptr;
  double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') {
    throw Error(ErrorCode::kInvalidArgument, "config " + key + ": not a number");
  }
  return d;
}

std::size_t ParseCount(const std::string& v, const std::string& key) {
  double d = ParseDouble(v, key);
  if (d < 0 || d != std::floor(d)) {
    throw Error(ErrorCode::kInvalidArgument, "config " + key + ": not a count");
  }
  return static_cast<std::size_t>(d);
}

std::string FormatDouble(double d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", d);
  return buf;
}

}  // namespace

Stopwords Stopwords::Parse(std::string_view text) {
  Stopwords s;
  for (const std::string& line : DataLines(text)) s.words_.insert(ToLower(Trim(line)));
  return s;
}

Stopwords Stopwords::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const Stopwords& Stopwords::Default() {
  static const auto* s = new Stopwords(Parse(embedded::stopwords_txt()));
  return *s;
}

std::vector<std::string> Stopwords::ContentWords(std::string_view text) const {
  std::vector<std::string> out;
  for (std::string& t : MetricTokens(text)) {
    if (!Contains(t)) out.push_back(std::move(t));
  }
  return out;
}

ValidatorConfig ValidatorConfig::Parse(std::string_view text) {
  ValidatorConfig cfg;
  for (const std::string& raw : DataLines(text)) {
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "config line without '=': " + raw);
    }
    const std::string key = Trim(raw.substr(0, eq));
    const std::string value = Trim(raw.substr(eq + 1));
    if (key == "min_chars") {
      cfg.min_chars = ParseCount(value, key);
    } else if (key == "max_chars_factor") {
      cfg.max_chars_factor = ParseDouble(value, key);
    } else if (key == "min_words") {
      cfg.min_words = ParseCount(value, key);
    } else if (key == "max_words") {
      cfg.max_words = ParseCount(value, key);
    } else if (key == "similarity_threshold") {
      cfg.similarity_threshold = ParseDouble(value, key);
    } else if (key == "coverage_recall_threshold") {
      cfg.coverage_recall_threshold = ParseDouble(value, key);
    } else if (key == "require_pattern") {
      cfg.require_pattern = ParseBool(value, key);
    } else if (key == "require_entity") {
      cfg.require_entity = ParseBool(value, key);
    } else if (key == "require_anaphora") {
      cfg.require_anaphora = ParseBool(value, key);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
    }
  }
  cfg.Check();
  return cfg;
}

ValidatorConfig ValidatorConfig::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

void ValidatorConfig::Check() const {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!unit(similarity_threshold) || !unit(coverage_recall_threshold)) {
    throw Error(ErrorCode::kInvalidArgument, "thresholds must lie in [0,1]");
  }
  if (!(max_chars_factor > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_chars_factor must be positive");
  }
  if (min_words > max_words) {
    throw Error(ErrorCode::kInvalidArgument, "min_words exceeds max_words");
  }
}

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kMinLength: return "MinLength";
    case ViolationCode::kMaxLength: return "MaxLength";
    case ViolationCode::kNoStartPattern: return "NoStartPattern";
    case ViolationCode::kNoEntity: return "NoEntity";
    case ViolationCode::kNoAnaphora: return "NoAnaphora";
    case ViolationCode::kLowSimilarity: return "LowSimilarity";
    case ViolationCode::kMissingQuestion: return "MissingQuestion";
    case ViolationCode::kNotEnglishChars: return "NotEnglishChars";
  }
  return "?";
}

double Similarity(std::string_view a, std::string_view b) {
  if (Trim(a).empty() || Trim(b).empty()) {
    throw Error(ErrorCode::kEmptyInput, "similarity of blank text");
  }
  const auto ta = TermFrequencies(MetricTokens(a));
  const auto tb = TermFrequencies(MetricTokens(b));
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [term, f] : ta) {
    na += f * f;
    auto it = tb.find(term);
    if (it != tb.end()) dot += f * it->second;
  }
  for (const auto& [term, f] : tb) nb += f * f;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::min(1.0, dot / std::sqrt(na * nb));
}

std::vector<QuestionCoverage> CoverageCheck(std::string_view hint_text,
                                            const std::vector<Question>& related,
                                            const ValidatorConfig& cfg,
                                            const EntityRef* entity,
                                            const Stopwords& stopwords,
                                            const Grammar& grammar) {
  const std::vector<std::string> hint_tokens = MetricTokens(hint_text);
  std::unordered_set<std::string> hint_stems;
  for (const std::string& t : hint_tokens) hint_stems.insert(grammar.Stem(t));

  std::unordered_set<std::string> entity_stems;
  bool entity_present = false;
  if (entity != nullptr) {
    for (const std::string& alias : entity->aliases()) {
      for (const std::string& w : MetricTokens(alias)) entity_stems.insert(grammar.Stem(w));
    }
    const PronounForms p = PronounsFor(entity->gender_number());
    const std::vector<std::string> words = WordTokens(hint_text);
    entity_present = ContainsAlias(words, *entity);
    for (const std::string& w : words) {
      const std::string lw = ToLower(w);
      if (lw == p.subject || lw == p.object || lw == p.possessive) entity_present = true;
    }
  }

  std::vector<QuestionCoverage> out;
  for (const Question& q : related) {
    std::size_t total = 0;
    std::size_t present = 0;
    for (const std::string& w : stopwords.ContentWords(q.text())) {
      if (IsWhWord(w) || grammar.FindAuxiliary(w) != nullptr) continue;
      ++total;
      const std::string stem = grammar.Stem(w);
      if (hint_stems.count(stem) || (entity_present && entity_stems.count(stem))) {
        ++present;
      }
    }
    QuestionCoverage c;
    c.question_id = q.id();
    c.recall = total == 0 ? 1.0 : static_cast<double>(present) / static_cast<double>(total);
    c.covered = c.recall >= cfg.coverage_recall_threshold;
    out.push_back(std::move(c));
  }
  return out;
}

double AsciiLetterRatio(std::string_view utf8) {
  std::size_t ascii = 0;
  std::size_t other = 0;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto b = static_cast<unsigned char>(utf8[i]);
    std::size_t len = 1;
    char32_t cp = b;
    if (b >= 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else if (b >= 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if (b >= 0xC0) {
      len = 2;
      cp = b & 0x1F;
    }
    for (std::size_t k = 1; k < len && i + k < utf8.size(); ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
    }
    i += len;
    if (cp < 0x80) {
      if (std::isalpha(static_cast<int>(cp))) ++ascii;
    } else if (!(cp >= 0x2000 && cp <= 0x206F) && !(cp >= 0xA0 && cp <= 0xBF)) {
      // Non-ASCII code points outside punctuation blocks count as letters.
      ++other;
    }
  }
  const std::size_t total = ascii + other;
  return total == 0 ? 1.0 : static_cast<double>(ascii) / static_cast<double>(total);
}

std::vector<Violation> ValidateHint(const Hint& hint, const HintBundle& bundle,
                                    const ValidatorConfig& cfg, const Stopwords& stopwords,
                                    const Grammar& grammar) {
  std::vector<Violation> out;
  const std::string& text = hint.text;

  if (hint.char_len < cfg.min_chars) {
    out.push_back({ViolationCode::kMinLength, "",
                   std::to_string(hint.char_len) + " chars < " + std::to_string(cfg.min_chars)});
  } else if (hint.word_len < cfg.min_words) {
    out.push_back({ViolationCode::kMinLength, "",
                   std::to_string(hint.word_len) + " words < " + std::to_string(cfg.min_words)});
  }

  std::size_t input_chars = 0;
  for (const Question& r : bundle.related) input_chars += CountCodePoints(Trim(r.text()));
  const double max_chars = cfg.max_chars_factor * static_cast<double>(input_chars);
  if (static_cast<double>(hint.char_len) > max_chars) {
    out.push_back({ViolationCode::kMaxLength, "",
                   std::to_string(hint.char_len) + " chars > " + FormatDouble(max_chars)});
  } else if (hint.word_len > cfg.max_words) {
    out.push_back({ViolationCode::kMaxLength, "",
                   std::to_string(hint.word_len) + " words > " + std::to_string(cfg.max_words)});
  }

  if (cfg.require_pattern) {
    const bool ok = hint.pattern.has_value() && text.size() >= hint.pattern->text.size() &&
                    EqualsIgnoreCase(std::string_view(text).substr(0, hint.pattern->text.size()),
                                     hint.pattern->text);
    if (!ok) out.push_back({ViolationCode::kNoStartPattern, "", "no known start pattern"});
  }

  const std::vector<std::string> words = WordTokens(text);
  if (cfg.require_entity && !ContainsAlias(words, bundle.entity)) {
    out.push_back({ViolationCode::kNoEntity, "",
                   "entity '" + bundle.entity.canonical() + "' not named"});
  }

  if (cfg.require_anaphora && bundle.related.size() >= 2) {
    std::size_t mentions = 0;
    for (const Question& r : bundle.related) {
      std::vector<std::string> toks;
      for (const Token& t : r.tokens()) toks.push_back(t.text);
      mentions += FindMentionsInTokens(toks, bundle.entity).size();
    }
    if (mentions >= 2) {
      const std::size_t start = hint.pattern ? hint.pattern->text.size() : 0;
      const std::size_t boundary = text.find(", ", start);
      bool found = false;
      if (boundary != std::string::npos) {
        for (const std::string& w : WordTokens(text.substr(boundary + 2))) {
          if (AnaphoraWords().count(ToLower(w))) found = true;
        }
      }
      if (!found) {
        out.push_back({ViolationCode::kNoAnaphora, "",
                       "entity repeated " + std::to_string(mentions) +
                           " times in the input, no anaphora after the first clause"});
      }
    }
  }

  std::vector<std::string> related_texts;
  for (const Question& r : bundle.related) related_texts.push_back(r.text());
  const double sim = Similarity(text, Join(related_texts, " "));
  if (sim < cfg.similarity_threshold) {
    out.push_back({ViolationCode::kLowSimilarity, "",
                   "similarity " + FormatDouble(sim) + " < " +
                       FormatDouble(cfg.similarity_threshold)});
  }

  for (const QuestionCoverage& c :
       CoverageCheck(text, bundle.related, cfg, &bundle.entity, stopwords, grammar)) {
    if (!c.covered) {
      out.push_back({ViolationCode::kMissingQuestion, c.question_id,
                     "recall " + FormatDouble(c.recall)});
    }
  }

  const double ratio = AsciiLetterRatio(text);
  if (ratio < 0.9) {
    out.push_back({ViolationCode::kNotEnglishChars, "",
                   "ASCII letter ratio " + FormatDouble(ratio)});
  }
  return out;
}

}  // namespace hintgen

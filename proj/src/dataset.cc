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

#include "hintgen/dataset.h"

#include <cmath>
#include <istream>
#include <random>

#include "hintgen/clauser.h"
#include "hintgen/errors.h"
#include "hintgen/qbank.h"
#include "hintgen/qparse.h"
#include "json.hpp"

namespace hintgen {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Malformed(std::size_t line_no, const std::string& reason) {
  throw Error(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": " + reason);
}

std::string StringField(const json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) Malformed(line_no, std::string("missing field '") + key + "'");
  if (!it->is_string()) Malformed(line_no, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::string CheckedText(const std::string& text, std::size_t line_no) {
  if (text.find_first_of("\t\n\r") != std::string::npos) {
    Malformed(line_no, "question text contains a tab or newline");
  }
  return text;
}

Question QuestionField(const json& v, const std::string& default_id, std::size_t line_no) {
  if (v.is_string()) return Question(default_id, CheckedText(v.get<std::string>(), line_no));
  if (!v.is_object()) Malformed(line_no, "question must be a string or an object");
  std::string id = default_id;
  if (v.contains("id")) id = StringField(v, "id", line_no);
  if (id.empty()) Malformed(line_no, "empty question id");
  return Question(id, CheckedText(StringField(v, "text", line_no), line_no));
}

EntityRef EntityField(const json& v, std::size_t line_no) {
  if (!v.is_object()) Malformed(line_no, "entity must be an object");
  const std::string canonical = StringField(v, "canonical", line_no);
  const std::string id = v.contains("id") ? StringField(v, "id", line_no) : canonical;
  std::vector<std::string> aliases;
  if (v.contains("aliases")) {
    const json& a = v.at("aliases");
    if (!a.is_array()) Malformed(line_no, "entity aliases must be an array");
    for (const json& s : a) {
      if (!s.is_string()) Malformed(line_no, "entity aliases must be strings");
      aliases.push_back(s.get<std::string>());
    }
  }
  GenderNumber g = GenderNumber::kNeuter;
  if (v.contains("gender_number")) g = ParseGenderNumber(StringField(v, "gender_number", line_no));
  return EntityRef(id, canonical, aliases, g);
}

}  // namespace

HintBundle ParseRecord(std::string_view line, std::size_t line_no) {
  const json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) Malformed(line_no, "not a JSON object");
  try {
    const std::string id = StringField(obj, "id", line_no);
    if (id.empty()) Malformed(line_no, "empty record id");
    std::string domain;
    if (obj.contains("domain")) {
      domain = StringField(obj, "domain", line_no);
      if (!domain.empty()) ParseDomain(domain);
    }
    if (!obj.contains("question")) Malformed(line_no, "missing field 'question'");
    Question q = QuestionField(obj.at("question"), id + "/q", line_no);
    if (!obj.contains("related") || !obj.at("related").is_array()) {
      Malformed(line_no, "field 'related' must be an array");
    }
    std::vector<Question> related;
    for (std::size_t i = 0; i < obj.at("related").size(); ++i) {
      related.push_back(
          QuestionField(obj.at("related")[i], id + "/r" + std::to_string(i + 1), line_no));
    }
    if (!obj.contains("entity")) Malformed(line_no, "missing field 'entity'");
    HintBundle b{id, std::move(q), std::move(related), EntityField(obj.at("entity"), line_no),
                 std::nullopt, domain};
    if (obj.contains("gold") && !obj.at("gold").is_null()) {
      b.gold = CheckedText(StringField(obj, "gold", line_no), line_no);
    }
    b.Validate();
    return b;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedRecord) throw;
    Malformed(line_no, e.what());
  }
}

std::vector<HintBundle> ReadRecords(std::istream& in) {
  std::vector<HintBundle> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    out.push_back(ParseRecord(line, line_no));
  }
  return out;
}

std::vector<HintBundle> ParseRecords(std::string_view text) {
  std::vector<HintBundle> out;
  std::size_t line_no = 0;
  for (const std::string& line : Split(text, "\n")) {
    ++line_no;
    if (Trim(line).empty()) continue;
    out.push_back(ParseRecord(line, line_no));
  }
  return out;
}

std::vector<HintBundle> LoadRecords(const std::filesystem::path& path) {
  return ParseRecords(ReadFile(path));
}

std::string FormatRecord(const HintBundle& b) {
  auto question = [](const Question& q) {
    ordered_json o;
    o["id"] = q.id();
    o["text"] = q.text();
    return o;
  };
  ordered_json o;
  o["id"] = b.id;
  o["domain"] = b.domain;
  o["question"] = question(b.q);
  o["related"] = ordered_json::array();
  for (const Question& r : b.related) o["related"].push_back(question(r));
  ordered_json e;
  e["id"] = b.entity.id();
  e["canonical"] = b.entity.canonical();
  e["aliases"] = b.entity.aliases();
  e["gender_number"] = GenderNumberName(b.entity.gender_number());
  o["entity"] = e;
  if (b.gold) o["gold"] = *b.gold;
  return o.dump();
}

std::string FormatRecords(const std::vector<HintBundle>& bundles) {
  std::string out;
  for (const HintBundle& b : bundles) out += FormatRecord(b) + "\n";
  return out;
}

void SplitSpec::Check() const {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "split ratios must lie in (0,1)");
    }
    sum += r;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "split ratios must sum to 1");
  }
}

SplitIndices SplitIndicesFor(std::size_t n, const SplitSpec& spec) {
  spec.Check();
  if (n < 10) {
    throw Error(ErrorCode::kTooFewRecords,
                "need at least 10 records to split, got " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Explicit Fisher-Yates so the permutation does not depend on the standard
  // library's shuffle implementation.
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }
  const auto take = [n](double ratio) {
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) * ratio + 1e-9));
  };
  const std::size_t n_train = take(spec.ratios[0]);
  const std::size_t n_dev = take(spec.ratios[1]);
  SplitIndices s;
  s.train.assign(order.begin(), order.begin() + n_train);
  s.dev.assign(order.begin() + n_train, order.begin() + n_train + n_dev);
  s.test.assign(order.begin() + n_train + n_dev, order.end());
  return s;
}

DatasetSplit SplitDataset(const std::vector<HintBundle>& bundles, const SplitSpec& spec) {
  const SplitIndices idx = SplitIndicesFor(bundles.size(), spec);
  DatasetSplit out;
  for (std::size_t i : idx.train) out.train.push_back(bundles[i]);
  for (std::size_t i : idx.dev) out.dev.push_back(bundles[i]);
  for (std::size_t i : idx.test) out.test.push_back(bundles[i]);
  return out;
}

Seq2SeqOutput EmitSeq2Seq(const std::vector<HintBundle>& bundles, Seq2SeqMode mode,
                          bool with_targets, PatternStrategy strategy,
                          const PatternInventory& inventory, const Grammar& grammar) {
  Seq2SeqOutput out;
  if (mode == Seq2SeqMode::kFinetune) {
    for (const HintBundle& b : bundles) {
      std::string line = EncodeSeq2SeqInput(b);
      if (with_targets && b.gold) line += "\t" + *b.gold;
      out.lines.push_back(std::move(line));
    }
    return out;
  }
  PatternChooser chooser(inventory, strategy);
  auto emit = [&](const Question& q) {
    ContentClause clause;
    try {
      clause = ToContentClause(ParseQuestion(q, grammar), ClauseOptions{}, grammar);
    } catch (const Error&) {
      ++out.skipped;
      return;
    }
    out.lines.push_back(q.text() + "\t" + chooser.Next().text + " " + clause.Text() + ".");
  };
  for (const HintBundle& b : bundles) {
    emit(b.q);
    for (const Question& r : b.related) emit(r);
  }
  return out;
}

}  // namespace hintgen

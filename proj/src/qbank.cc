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

#include "hintgen/qbank.h"

#include <algorithm>
#include <cmath>

#include "hintgen/errors.h"
#include "hintgen/embedded_data.h"
#include "hintgen/lexicon.h"
#include "json.hpp"

namespace hintgen {
namespace {

constexpr std::string_view kDomainNames[] = {
    "Animal", "Athlete", "Food", "Holiday", "Place", "Politician", "Technology", "Wearables",
    "Video Game",
};

std::map<std::string, double> StemVector(std::string_view text, const Stopwords& stopwords,
                                         const TopicStems& stems) {
  std::map<std::string, double> v;
  for (const std::string& w : stopwords.ContentWords(text)) v[stems.Stem(w)] += 1.0;
  return v;
}

std::string RequireString(const nlohmann::json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedRecord,
                "line " + std::to_string(line) + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view DomainName(Domain d) { return kDomainNames[static_cast<int>(d)]; }

Domain ParseDomain(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kDomainNames); ++i) {
    if (kDomainNames[i] == name) return static_cast<Domain>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown domain '" + std::string(name) + "'");
}

const std::vector<Domain>& AllDomains() {
  static const auto* all = [] {
    auto* v = new std::vector<Domain>;
    for (std::size_t i = 0; i < std::size(kDomainNames); ++i) {
      v->push_back(static_cast<Domain>(i));
    }
    return v;
  }();
  return *all;
}

QuestionBank::QuestionBank(std::vector<QuestionBankRecord> records)
    : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const QuestionBankRecord& r = records_[i];
    if (r.entity_id.empty() || Trim(r.topic).empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "record " + r.question.id() + ": empty entity or topic");
    }
    if (!by_id_.emplace(r.question.id(), i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate record id '" + r.question.id() + "'");
    }
    by_entity_[r.entity_id].push_back(i);
    ++topic_frequency_[r.topic];
  }
}

QuestionBank QuestionBank::Parse(std::string_view jsonl) {
  std::vector<QuestionBankRecord> records;
  std::size_t line_no = 0;
  for (const std::string& line : Split(jsonl, "\n")) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "line " + std::to_string(line_no) + ": not a JSON object");
    }
    try {
      records.push_back({Question(RequireString(obj, "id", line_no),
                                  RequireString(obj, "text", line_no)),
                         RequireString(obj, "entity", line_no),
                         ParseDomain(RequireString(obj, "domain", line_no)),
                         RequireString(obj, "topic", line_no)});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kMalformedRecord) throw;
      throw Error(ErrorCode::kMalformedRecord,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  try {
    return QuestionBank(std::move(records));
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedRecord, e.what());
  }
}

QuestionBank QuestionBank::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const QuestionBankRecord* QuestionBank::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

bool QuestionBank::HasEntity(std::string_view entity_id) const {
  return by_entity_.count(std::string(entity_id)) > 0;
}

const std::vector<std::size_t>& QuestionBank::EntityRecords(std::string_view entity_id) const {
  static const std::vector<std::size_t> kNone;
  auto it = by_entity_.find(std::string(entity_id));
  return it == by_entity_.end() ? kNone : it->second;
}

std::size_t QuestionBank::TopicFrequency(std::string_view topic) const {
  auto it = topic_frequency_.find(topic);
  return it == topic_frequency_.end() ? 0 : it->second;
}

std::vector<TopicLabel> QuestionBank::Topics() const {
  std::vector<TopicLabel> out;
  for (const auto& [name, freq] : topic_frequency_) out.push_back({name, freq});
  return out;
}

TopicStems TopicStems::Parse(std::string_view tsv) {
  TopicStems s;
  for (const std::string& line : DataLines(tsv)) {
    const std::vector<std::string> f = Split(line, "\t");
    if (f.size() != 2 || Trim(f[0]).empty() || Trim(f[1]).empty()) {
      throw Error(ErrorCode::kInvalidArgument, "bad topic stem line: " + line);
    }
    s.stems_[ToLower(Trim(f[0]))] = ToLower(Trim(f[1]));
  }
  return s;
}

TopicStems TopicStems::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

const TopicStems& TopicStems::Default() {
  static const auto* s = new TopicStems(Parse(embedded::topic_stems_tsv()));
  return *s;
}

std::string TopicStems::Stem(std::string_view word) const {
  const std::string w = ToLower(word);
  auto it = stems_.find(w);
  return it != stems_.end() ? it->second : LightStem(w);
}

double TopicSimilarity(const Question& q, std::string_view topic, const Stopwords& stopwords,
                       const TopicStems& stems) {
  const auto a = StemVector(q.text(), stopwords, stems);
  const auto b = StemVector(topic, stopwords, stems);
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [s, f] : a) {
    na += f * f;
    auto it = b.find(s);
    if (it != b.end()) dot += f * it->second;
  }
  for (const auto& [s, f] : b) nb += f * f;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::min(1.0, dot / std::sqrt(na * nb));
}

std::optional<TopicLabel> AssignTopic(const Question& q, const std::vector<TopicLabel>& candidates,
                                      double threshold, const Stopwords& stopwords,
                                      const TopicStems& stems) {
  if (candidates.empty()) throw Error(ErrorCode::kInvalidArgument, "no candidate topics");
  const TopicLabel* best = nullptr;
  double best_score = -1.0;
  for (const TopicLabel& t : candidates) {
    const double s = TopicSimilarity(q, t.name, stopwords, stems);
    if (s > best_score || (s == best_score && t.name < best->name)) {
      best = &t;
      best_score = s;
    }
  }
  if (best_score < threshold || best_score <= 0.0) return std::nullopt;
  return *best;
}

std::vector<QuestionBankRecord> RetrieveRelated(const QuestionBank& bank,
                                                const QuestionBankRecord& query, std::size_t k) {
  if (k < 1 || k > 3) {
    throw Error(ErrorCode::kInvalidArgument, "k must be 1..3, got " + std::to_string(k));
  }
  if (!bank.HasEntity(query.entity_id)) {
    throw Error(ErrorCode::kEntityNotInBank, "entity '" + query.entity_id + "' not in bank");
  }
  // First record per topic, bank order.
  std::map<std::string, std::size_t> first_by_topic;
  for (std::size_t i : bank.EntityRecords(query.entity_id)) {
    const QuestionBankRecord& r = bank.records()[i];
    if (r.topic == query.topic) continue;
    first_by_topic.emplace(r.topic, i);
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(first_by_topic.begin(),
                                                          first_by_topic.end());
  std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    const std::size_t fa = bank.TopicFrequency(a.first);
    const std::size_t fb = bank.TopicFrequency(b.first);
    if (fa != fb) return fa > fb;
    return a.first < b.first;
  });
  std::vector<QuestionBankRecord> out;
  for (std::size_t i = 0; i < ranked.size() && out.size() < k; ++i) {
    out.push_back(bank.records()[ranked[i].second]);
  }
  return out;
}

}  // namespace hintgen

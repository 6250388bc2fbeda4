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

#ifndef HINTGEN_QBANK_H_
#define HINTGEN_QBANK_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hintgen/text.h"
#include "hintgen/validate.h"

namespace hintgen {

enum class Domain {
  kAnimal,
  kAthlete,
  kFood,
  kHoliday,
  kPlace,
  kPolitician,
  kTechnology,
  kWearables,
  kVideoGame,
};

std::string_view DomainName(Domain d);
// Exact names, e.g. "Video Game". Throws InvalidArgument otherwise.
Domain ParseDomain(std::string_view name);
const std::vector<Domain>& AllDomains();

struct TopicLabel {
  std::string name;
  std::size_t frequency = 0;

  bool operator==(const TopicLabel&) const = default;
};

struct QuestionBankRecord {
  Question question;
  std::string entity_id;
  Domain domain = Domain::kAnimal;
  std::string topic;
};

// Immutable after construction; safe for concurrent readers.
class QuestionBank {
 public:
  // Throws InvalidArgument on duplicate ids or empty entity/topic.
  explicit QuestionBank(std::vector<QuestionBankRecord> records);

  // One JSON object per line: {"id","text","entity","domain","topic"}.
  // Throws MalformedRecord with the 1-based line number.
  static QuestionBank Parse(std::string_view jsonl);
  static QuestionBank Load(const std::filesystem::path& path);

  const std::vector<QuestionBankRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const QuestionBankRecord* Find(std::string_view id) const;
  bool HasEntity(std::string_view entity_id) const;
  // Indices into records(), in bank order.
  const std::vector<std::size_t>& EntityRecords(std::string_view entity_id) const;
  // Number of records with this topic across the whole bank.
  std::size_t TopicFrequency(std::string_view topic) const;
  // All topics, sorted by name.
  std::vector<TopicLabel> Topics() const;

 private:
  std::vector<QuestionBankRecord> records_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_entity_;
  std::map<std::string, std::size_t, std::less<>> topic_frequency_;
};

// Maps surface forms onto shared stems ("born" and "birth" both to "birth")
// before falling back to the light suffix stemmer.
class TopicStems {
 public:
  static TopicStems Parse(std::string_view tsv);
  static TopicStems Load(const std::filesystem::path& path);
  static const TopicStems& Default();

  std::string Stem(std::string_view word) const;

 private:
  std::unordered_map<std::string, std::string> stems_;
};

// TF cosine between the stemmed content words of `q` and of a topic name.
double TopicSimilarity(const Question& q, std::string_view topic,
                       const Stopwords& stopwords = Stopwords::Default(),
                       const TopicStems& stems = TopicStems::Default());

// Best-scoring topic if its score reaches `threshold`; ties go to the
// lexicographically smaller name. Throws InvalidArgument on no candidates.
std::optional<TopicLabel> AssignTopic(const Question& q,
                                      const std::vector<TopicLabel>& candidates,
                                      double threshold = 0.1,
                                      const Stopwords& stopwords = Stopwords::Default(),
                                      const TopicStems& stems = TopicStems::Default());

// Up to k records about the query's entity, one per topic other than the
// query's, ordered by descending topic frequency then topic name. Within a
// topic the first record in bank order is used. Throws EntityNotInBank, and
// InvalidArgument for k outside 1..3.
std::vector<QuestionBankRecord> RetrieveRelated(const QuestionBank& bank,
                                                const QuestionBankRecord& query,
                                                std::size_t k);

}  // namespace hintgen

#endif  // HINTGEN_QBANK_H_

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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hintgen/errors.h"
#include "test_util.h"

namespace hintgen {
namespace {

ErrorCode CodeOf(std::string_view line) {
  try {
    ParseRecord(line, 7);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << line;
  return ErrorCode::kIo;
}

TEST(ReadRecordsTest, FullRecord) {
  const HintBundle b = testing::RonaldoBundle();
  EXPECT_EQ(b.id, "ronaldo");
  EXPECT_EQ(b.related.size(), 3u);
  EXPECT_EQ(b.entity.id(), "cristiano_ronaldo");
  EXPECT_EQ(b.entity.gender_number(), GenderNumber::kMasculine);
  ASSERT_TRUE(b.gold.has_value());
  EXPECT_EQ(b.domain, "Athlete");
}

TEST(ReadRecordsTest, DefaultsForShortForm) {
  const HintBundle b = ParseRecord(
      R"({"id":"x","question":"Where is it?","related":["How big is it?"],)"
      R"("entity":{"canonical":"Big Ben"}})");
  EXPECT_EQ(b.q.id(), "x/q");
  EXPECT_EQ(b.related[0].id(), "x/r1");
  EXPECT_EQ(b.entity.id(), "Big Ben");
  EXPECT_EQ(b.entity.gender_number(), GenderNumber::kNeuter);
  EXPECT_FALSE(b.gold.has_value());
  EXPECT_EQ(b.domain, "");
}

TEST(ReadRecordsTest, RejectsInvalidRecords) {
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":["a?","b?","c?","d?"],"entity":{"canonical":"E"}})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":[],"entity":{"canonical":"E"}})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":["a?"]})"), ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":["a?"],"entity":{"canonical":"E"},"domain":"Music"})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":["a\tb?"],"entity":{"canonical":"E"}})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf(R"({"id":"x","question":"Q?","related":["a?"],"entity":{"canonical":"E","gender_number":"dual"}})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf("not json"), ErrorCode::kMalformedRecord);
}

TEST(ReadRecordsTest, StreamReportsLineNumbers) {
  std::istringstream in(testing::ReadFixture("ronaldo.jsonl") + "\n{\"id\":\"bad\"}\n");
  try {
    ReadRecords(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

// read -> write -> read -> write is byte-identical from the first write on.
TEST(FormatRecordTest, RoundTripIsFixedPoint) {
  for (const char* name : {"corpus.jsonl", "gold20.jsonl", "ronaldo.jsonl", "table9.jsonl"}) {
    const std::string first = FormatRecords(testing::LoadFixtureRecords(name));
    const std::string second = FormatRecords(ParseRecords(first));
    EXPECT_EQ(first, second) << name;
  }
  const HintBundle shorthand = ParseRecord(
      R"({"id":"x","question":"Where is it?","related":["How big is it?"],"entity":{"canonical":"Big Ben"}})");
  const std::string once = FormatRecord(shorthand);
  EXPECT_EQ(FormatRecord(ParseRecord(once)), once);
  EXPECT_EQ(once.find('\n'), std::string::npos);
}

TEST(SplitTest, PaperRatios) {
  const SplitSpec spec{{0.6, 0.1, 0.3}, 42};
  const SplitIndices s100 = SplitIndicesFor(100, spec);
  EXPECT_EQ(s100.train.size(), 60u);
  EXPECT_EQ(s100.dev.size(), 10u);
  EXPECT_EQ(s100.test.size(), 30u);
  const SplitIndices s101 = SplitIndicesFor(101, spec);
  EXPECT_EQ(s101.train.size(), 60u);
  EXPECT_EQ(s101.dev.size(), 10u);
  EXPECT_EQ(s101.test.size(), 31u);
}

TEST(SplitTest, DisjointExhaustiveDeterministic) {
  for (std::size_t n : {10u, 11u, 57u, 108u, 999u}) {
    for (std::uint64_t seed : {0ull, 1ull, 123456789ull}) {
      const SplitSpec spec{{0.6, 0.1, 0.3}, seed};
      const SplitIndices a = SplitIndicesFor(n, spec);
      const SplitIndices b = SplitIndicesFor(n, spec);
      EXPECT_EQ(a.train, b.train);
      EXPECT_EQ(a.dev, b.dev);
      EXPECT_EQ(a.test, b.test);
      std::vector<std::size_t> all = a.train;
      all.insert(all.end(), a.dev.begin(), a.dev.end());
      all.insert(all.end(), a.test.begin(), a.test.end());
      std::sort(all.begin(), all.end());
      std::vector<std::size_t> want(n);
      std::iota(want.begin(), want.end(), 0);
      EXPECT_EQ(all, want);
    }
  }
  EXPECT_NE(SplitIndicesFor(100, {{0.6, 0.1, 0.3}, 1}).train,
            SplitIndicesFor(100, {{0.6, 0.1, 0.3}, 2}).train);
}

TEST(SplitTest, Errors) {
  try {
    SplitIndicesFor(9, SplitSpec{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewRecords);
  }
  EXPECT_THROW(SplitSpec({{0.5, 0.1, 0.3}, 0}).Check(), Error);
  EXPECT_THROW(SplitSpec({{0.0, 0.7, 0.3}, 0}).Check(), Error);
  EXPECT_THROW(SplitSpec({{1.0, 0.0, 0.0}, 0}).Check(), Error);
  EXPECT_NO_THROW(SplitSpec({{0.8, 0.1, 0.1}, 0}).Check());
}

TEST(SplitTest, SplitDatasetFollowsIndices) {
  const std::vector<HintBundle> bundles = testing::LoadFixtureRecords("corpus.jsonl");
  const SplitSpec spec{{0.6, 0.1, 0.3}, 5};
  const DatasetSplit d = SplitDataset(bundles, spec);
  const SplitIndices idx = SplitIndicesFor(bundles.size(), spec);
  ASSERT_EQ(d.train.size(), idx.train.size());
  for (std::size_t i = 0; i < idx.train.size(); ++i) EXPECT_EQ(d.train[i].id, bundles[idx.train[i]].id);
  std::set<std::string> ids;
  for (const auto* part : {&d.train, &d.dev, &d.test}) {
    for (const HintBundle& b : *part) EXPECT_TRUE(ids.insert(b.id).second);
  }
  EXPECT_EQ(ids.size(), bundles.size());
}

TEST(EmitSeq2SeqTest, FinetuneWithTargets) {
  const Seq2SeqOutput out = EmitSeq2Seq({testing::RonaldoBundle()}, Seq2SeqMode::kFinetune, true);
  ASSERT_EQ(out.lines.size(), 1u);
  EXPECT_EQ(out.lines[0],
            "Who is Cristiano Ronaldo? [SEP] How much money does Cristiano Ronaldo earn? [SEP] How "
            "many children does Cristiano Ronaldo have? [SEP] Who is the mother of Cristiano "
            "Ronaldos child?\tYou may want to know how much money Cristiano Ronaldo earns, or how "
            "many children he has, or who is the mother of his child.");
}

TEST(EmitSeq2SeqTest, GoldlessBundleEmitsInputOnly) {
  const std::vector<HintBundle> bundles = testing::LoadFixtureRecords("corpus.jsonl");
  const Seq2SeqOutput out = EmitSeq2Seq(bundles, Seq2SeqMode::kFinetune, true);
  ASSERT_EQ(out.lines.size(), bundles.size());
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    EXPECT_EQ(out.lines[i].find('\t'), std::string::npos);
    const std::vector<std::string> parts = Split(out.lines[i], " [SEP] ");
    ASSERT_EQ(parts.size(), 1 + bundles[i].related.size());
    EXPECT_EQ(parts[0], bundles[i].q.text());
    for (std::size_t j = 0; j < bundles[i].related.size(); ++j) {
      EXPECT_EQ(parts[j + 1], bundles[i].related[j].text());
    }
  }
}

TEST(EmitSeq2SeqTest, PretrainPairs) {
  HintBundle b = testing::RonaldoBundle();
  b.q = Question("q", "Did Samuel Adams plan the Boston Tea Party?");
  const Seq2SeqOutput out = EmitSeq2Seq({b}, Seq2SeqMode::kPretrain, false);
  ASSERT_EQ(out.lines.size(), 4u);
  EXPECT_EQ(out.skipped, 0u);
  EXPECT_EQ(out.lines[0],
            "Did Samuel Adams plan the Boston Tea Party?\tYou may want to know if Samuel Adams "
            "planned the Boston Tea Party.");
  EXPECT_EQ(out.lines[1],
            "How much money does Cristiano Ronaldo earn?\tYou may want to know how much money "
            "Cristiano Ronaldo earns.");
}

TEST(EmitSeq2SeqTest, PretrainSkipsUnparseable) {
  HintBundle b = testing::RonaldoBundle();
  b.q = Question("q", "Tell me about Ronaldo.");
  const Seq2SeqOutput out = EmitSeq2Seq({b}, Seq2SeqMode::kPretrain, false);
  EXPECT_EQ(out.lines.size(), 3u);
  EXPECT_EQ(out.skipped, 1u);
}

}  // namespace
}  // namespace hintgen

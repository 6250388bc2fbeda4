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


#include "hintgen/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hintgen/errors.h"
#include "json.hpp"
#include "test_util.h"

namespace hintgen {
namespace {

constexpr double kOracleTolerance = 1e-12;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

// Question and gold texts from the fixtures, deduplicated.
std::vector<std::string> FixtureTexts() {
  std::vector<std::string> out;
  for (const Question& q : testing::CorpusQuestions()) out.push_back(q.text());
  for (const HintBundle& b : testing::LoadFixtureRecords("gold20.jsonl")) out.push_back(*b.gold);
  return out;
}

std::vector<std::string> HundredRandomTexts() {
  std::vector<std::string> texts = FixtureTexts();
  std::mt19937_64 rng(5);
  std::shuffle(texts.begin(), texts.end(), rng);
  texts.resize(100);
  return texts;
}

TEST(BleuTest, Examples) {
  const std::string h = "you may want to know how much money he earns";
  EXPECT_DOUBLE_EQ(BleuN(h, {h}, 4), 1.0);
  EXPECT_NEAR(BleuN("you can ask a b", {"you can ask a c"}, 1), 0.8, kOracleTolerance);
  EXPECT_DOUBLE_EQ(BleuN("alpha beta", {"gamma delta"}, 1, Smoothing::kNone), 0.0);
}

TEST(BleuTest, Errors) {
  EXPECT_EQ(CodeOf([] { BleuN("", {"a"}, 1); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([] { BleuN("a", {"?!"}, 1); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([] { BleuN("a", {}, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { BleuN("a", {"a"}, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { BleuN("a", {"a"}, 5); }), ErrorCode::kInvalidArgument);
}

TEST(BleuTest, MultipleReferencesClipAndPickClosestLength) {
  // Clipping uses the largest count in any single reference.
  EXPECT_NEAR(BleuN("the the the", {"the cat", "the the dog"}, 1), 2.0 / 3.0, kOracleTolerance);
  // c=2; references of 3 and 1 tokens are equally close, the shorter wins.
  EXPECT_NEAR(BleuN("a b", {"a b c", "a"}, 1), 1.0, kOracleTolerance);
  EXPECT_NEAR(BleuN("a b", {"a b c"}, 1), std::exp(1.0 - 3.0 / 2.0), kOracleTolerance);
}

TEST(RougeTest, Examples) {
  const std::string h = "how many children he has";
  EXPECT_DOUBLE_EQ(RougeN(h, h, 2), 1.0);
  EXPECT_NEAR(RougeN("you can ask a b", "you can ask a c", 1), 0.8, kOracleTolerance);
  EXPECT_EQ(CodeOf([] { RougeN("a b c d", "a b c", 4); }), ErrorCode::kUndefinedForShortText);
  EXPECT_EQ(CodeOf([] { RougeN("", "a b c", 1); }), ErrorCode::kEmptyInput);
}

// Values computed once by tests/oracles/metrics_oracle.py with exact
// fractions.
TEST(MetricsOracleTest, FrozenPairs) {
  const auto rows = testing::ReadTsvFixture("oracle/frozen_pairs.tsv");
  ASSERT_EQ(rows.size(), 11u);  // header + 10 pairs
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ASSERT_EQ(r.size(), 15u);
    const std::string& cand = r[1];
    const std::string& ref = r[2];
    for (int n = 1; n <= 4; ++n) {
      EXPECT_NEAR(BleuN(cand, {ref}, n, Smoothing::kNone), std::stod(r[2 + n]), kOracleTolerance)
          << r[0] << " bleu" << n;
      EXPECT_NEAR(BleuN(cand, {ref}, n, Smoothing::kAddOne), std::stod(r[6 + n]),
                  kOracleTolerance)
          << r[0] << " bleu" << n << " add-one";
      const std::string& want = r[10 + n];
      if (want == "NA") {
        EXPECT_EQ(CodeOf([&] { RougeN(cand, ref, n); }), ErrorCode::kUndefinedForShortText);
      } else {
        EXPECT_NEAR(RougeN(cand, ref, n), std::stod(want), kOracleTolerance)
            << r[0] << " rouge" << n;
      }
    }
  }
}

TEST(MetricsPropertyTest, IdentityOverFixtureTexts) {
  for (const std::string& x : HundredRandomTexts()) {
    const std::size_t len = MetricTokens(x).size();
    for (int n = 1; n <= 4; ++n) {
      if (len < static_cast<std::size_t>(n)) continue;
      EXPECT_DOUBLE_EQ(BleuN(x, {x}, n), 1.0) << x;
      EXPECT_DOUBLE_EQ(RougeN(x, x, n), 1.0) << x;
    }
  }
}

TEST(MetricsPropertyTest, CaseInvariance) {
  const std::vector<std::string> texts = HundredRandomTexts();
  for (std::size_t i = 0; i + 1 < texts.size(); i += 2) {
    std::string upper = texts[i];
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    for (int n = 1; n <= 4; ++n) {
      EXPECT_DOUBLE_EQ(BleuN(texts[i], {texts[i + 1]}, n, Smoothing::kAddOne),
                       BleuN(upper, {ToLower(texts[i + 1])}, n, Smoothing::kAddOne));
      if (MetricTokens(texts[i + 1]).size() >= static_cast<std::size_t>(n)) {
        EXPECT_DOUBLE_EQ(RougeN(texts[i], texts[i + 1], n), RougeN(upper, texts[i + 1], n));
      }
    }
  }
}

TEST(MetricsPropertyTest, AppendingReferenceNgramNeverLowersRouge) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> texts = HundredRandomTexts();
  for (std::size_t i = 0; i + 1 < texts.size(); ++i) {
    const std::vector<std::string> ref = MetricTokens(texts[i + 1]);
    for (int n = 1; n <= 4; ++n) {
      if (ref.size() < static_cast<std::size_t>(n)) continue;
      const std::size_t at = rng() % (ref.size() - n + 1);
      std::string extended = texts[i];
      for (int k = 0; k < n; ++k) extended += " " + ref[at + k];
      EXPECT_GE(RougeN(extended, texts[i + 1], n), RougeN(texts[i], texts[i + 1], n));
    }
  }
}

// With one reference of the same length, BLEU-1 is the clipped unigram
// precision, counted here without any shared code.
TEST(MetricsPropertyTest, Bleu1EqualLengthIsUnigramPrecision) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> vocab{"you", "may", "want", "to", "know", "how", "it", "is"};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 9;
    std::vector<std::string> c, r;
    for (std::size_t i = 0; i < len; ++i) {
      c.push_back(vocab[rng() % vocab.size()]);
      r.push_back(vocab[rng() % vocab.size()]);
    }
    std::size_t match = 0;
    std::vector<std::string> pool = r;
    for (const std::string& w : c) {
      auto it = std::find(pool.begin(), pool.end(), w);
      if (it != pool.end()) {
        ++match;
        pool.erase(it);
      }
    }
    EXPECT_NEAR(BleuN(Join(c, " "), {Join(r, " ")}, 1),
                static_cast<double>(match) / static_cast<double>(len), kOracleTolerance);
  }
}

std::vector<ScorePair> Gold20TbPairs() {
  const std::vector<HintBundle> bundles = testing::LoadFixtureRecords("gold20.jsonl");
  const std::vector<std::string> cands = DataLines(testing::ReadFixture("golden/gold20_tb.txt"));
  std::vector<ScorePair> pairs;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    pairs.push_back({std::to_string(i + 1), cands.at(i), *bundles[i].gold});
  }
  return pairs;
}

TEST(ScoreCorpusTest, GoldenReportIsByteExact) {
  const std::vector<ScorePair> pairs = Gold20TbPairs();
  ASSERT_EQ(pairs.size(), 20u);
  EXPECT_EQ(FormatReportTsv(ScoreCorpus(pairs)),
            testing::ReadFixture("golden/gold20_tb_report.tsv"));
}

TEST(ScoreCorpusTest, TbCandidatesAreTheComposerOutput) {
  const std::vector<HintBundle> bundles = testing::LoadFixtureRecords("gold20.jsonl");
  const std::vector<std::string> cands = DataLines(testing::ReadFixture("golden/gold20_tb.txt"));
  ASSERT_EQ(cands.size(), bundles.size());
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    EXPECT_EQ(ComposeTb(bundles[i], PatternInventory::Default().at(0)).text, cands[i]);
  }
}

TEST(ScoreCorpusTest, PermutationAndJobsInvariance) {
  std::vector<ScorePair> pairs = Gold20TbPairs();
  const ScoreReport base = ScoreCorpus(pairs);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const ScoreReport r = ScoreCorpus(pairs, 1 + trial);
    for (int n = 0; n < 4; ++n) {
      EXPECT_NEAR(r.corpus_bleu[n], base.corpus_bleu[n], 1e-12);
      EXPECT_NEAR(*r.corpus_rouge[n], *base.corpus_rouge[n], 1e-12);
    }
    EXPECT_NEAR(r.length_mean, base.length_mean, 1e-9);
    EXPECT_NEAR(r.length_stddev, base.length_stddev, 1e-9);
  }
  const ScoreReport serial = ScoreCorpus(Gold20TbPairs(), 1);
  const ScoreReport parallel = ScoreCorpus(Gold20TbPairs(), 4);
  EXPECT_EQ(FormatReportTsv(serial), FormatReportTsv(parallel));
}

TEST(ScoreCorpusTest, IdenticalPairsScoreOne) {
  std::vector<ScorePair> pairs;
  for (const HintBundle& b : testing::LoadFixtureRecords("gold20.jsonl")) {
    pairs.push_back({b.id, *b.gold, *b.gold});
  }
  const ScoreReport r = ScoreCorpus(pairs);
  for (int n = 0; n < 4; ++n) {
    EXPECT_DOUBLE_EQ(r.corpus_bleu[n], 1.0);
    EXPECT_DOUBLE_EQ(*r.corpus_rouge[n], 1.0);
  }
  for (const PairScores& p : r.per_pair) {
    for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(p.bleu[n], 1.0);
  }
}

TEST(ScoreCorpusTest, SinglePairCorpusEqualsPair) {
  const ScoreReport r = ScoreCorpus(
      {{"x", "how much money does Cristiano Ronaldo earn today",
        "how much money does Cristiano Ronaldo earn"}});
  ASSERT_EQ(r.per_pair.size(), 1u);
  for (int n = 0; n < 4; ++n) {
    EXPECT_NEAR(r.corpus_bleu[n], r.per_pair[0].bleu[n], 1e-12) << n;
    EXPECT_NEAR(*r.corpus_rouge[n], *r.per_pair[0].rouge[n], 1e-12) << n;
  }
  EXPECT_DOUBLE_EQ(r.length_stddev, 0.0);
}

TEST(ScoreCorpusTest, EmptyCorpusAndShortReferences) {
  EXPECT_EQ(CodeOf([] { ScoreCorpus({}); }), ErrorCode::kEmptyCorpus);
  const ScoreReport r = ScoreCorpus({{"a", "x y z", "x y"}, {"b", "p q r s", "p q r s"}});
  EXPECT_FALSE(r.per_pair[0].rouge[2].has_value());
  EXPECT_TRUE(r.per_pair[1].rouge[2].has_value());
  EXPECT_DOUBLE_EQ(*r.corpus_rouge[2], 1.0);  // only the defined pair counts
  EXPECT_NE(FormatReportTsv(r).find("\tNA\t"), std::string::npos);
}

TEST(ScoreCorpusTest, JsonlMirrorsReport) {
  const ScoreReport r = ScoreCorpus(Gold20TbPairs());
  const std::vector<std::string> lines = Split(FormatReportJsonl(r), "\n");
  ASSERT_EQ(lines.size(), 22u);  // 20 pairs, corpus, trailing empty
  const auto first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["id"], "1");
  EXPECT_EQ(first["bleu"].size(), 4u);
  EXPECT_EQ(first["chars"], r.per_pair[0].candidate_chars);
  const auto corpus = nlohmann::json::parse(lines[20])["corpus"];
  EXPECT_EQ(corpus["pairs"], 20);
  EXPECT_NEAR(corpus["bleu"][0].get<double>(), r.corpus_bleu[0], 5e-7);
}

}  // namespace
}  // namespace hintgen

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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "hintgen/composer.h"
#include "hintgen/errors.h"
#include "hintgen/parallel.h"
#include "hintgen/text.h"
#include "json.hpp"

namespace hintgen {
namespace {

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

Tokens MetricTokensOrThrow(std::string_view text, const char* what) {
  Tokens t = MetricTokens(text);
  if (t.empty()) throw Error(ErrorCode::kEmptyInput, std::string(what) + " has no tokens");
  return t;
}

void CheckOrder(int n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::kInvalidArgument, "n-gram order must be 1..4, got " + std::to_string(n));
  }
}

NgramCounts Ngrams(const Tokens& tokens, int k) {
  NgramCounts counts;
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + uk <= tokens.size(); ++i) {
    ++counts[Tokens(tokens.begin() + i, tokens.begin() + i + uk)];
  }
  return counts;
}

std::size_t Total(std::size_t len, int k) {
  const auto uk = static_cast<std::size_t>(k);
  return len >= uk ? len - uk + 1 : 0;
}

// Candidate k-grams clipped by the maximum count in any single reference.
std::size_t ClippedMatches(const Tokens& cand, const std::vector<Tokens>& refs, int k) {
  NgramCounts max_ref;
  for (const Tokens& r : refs) {
    for (const auto& [gram, c] : Ngrams(r, k)) max_ref[gram] = std::max(max_ref[gram], c);
  }
  std::size_t matches = 0;
  for (const auto& [gram, c] : Ngrams(cand, k)) {
    auto it = max_ref.find(gram);
    if (it != max_ref.end()) matches += std::min(c, it->second);
  }
  return matches;
}

std::size_t ClosestRefLength(std::size_t c, const std::vector<Tokens>& refs) {
  std::size_t best = refs.front().size();
  for (const Tokens& r : refs) {
    const std::size_t len = r.size();
    const auto d = [c](std::size_t l) { return l > c ? l - c : c - l; };
    if (d(len) < d(best) || (d(len) == d(best) && len < best)) best = len;
  }
  return best;
}

double BrevityPenalty(std::size_t c, std::size_t r) {
  if (c >= r) return 1.0;
  if (c == 0) return 0.0;
  return std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
}

// Geometric mean of precisions m[k]/d[k], k < n, times bp.
double Combine(const std::array<std::size_t, 4>& m, const std::array<std::size_t, 4>& d, int n,
               double bp, Smoothing smoothing) {
  double log_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double num = static_cast<double>(m[k]);
    double den = static_cast<double>(d[k]);
    if (m[k] == 0) {
      if (smoothing == Smoothing::kNone) return 0.0;
      num += 1.0;
      den += 1.0;
    }
    log_sum += std::log(num / den);
  }
  return bp * std::exp(log_sum / n);
}

double RougeTokens(const Tokens& cand, const Tokens& ref, int n) {
  if (ref.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kUndefinedForShortText,
                "reference has " + std::to_string(ref.size()) + " tokens, fewer than n=" +
                    std::to_string(n));
  }
  const std::size_t matches = ClippedMatches(ref, {cand}, n);
  return static_cast<double>(matches) / static_cast<double>(Total(ref.size(), n));
}

struct PairCounts {
  PairScores scores;
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  std::size_t cand_len = 0;
  std::size_t ref_len = 0;
};

PairCounts ScorePairCounts(const ScorePair& p) {
  PairCounts out;
  const Tokens cand = MetricTokensOrThrow(p.candidate, "candidate");
  const Tokens ref = MetricTokensOrThrow(p.reference, "reference");
  const std::vector<Tokens> refs{ref};
  for (int k = 1; k <= 4; ++k) {
    out.matches[k - 1] = ClippedMatches(cand, refs, k);
    out.totals[k - 1] = Total(cand.size(), k);
  }
  out.cand_len = cand.size();
  out.ref_len = ref.size();
  const double bp = BrevityPenalty(cand.size(), ref.size());
  out.scores.id = p.id;
  out.scores.candidate_chars = CountCodePoints(p.candidate);
  for (int n = 1; n <= 4; ++n) {
    out.scores.bleu[n - 1] = Combine(out.matches, out.totals, n, bp, Smoothing::kAddOne);
    if (ref.size() >= static_cast<std::size_t>(n)) {
      out.scores.rouge[n - 1] = RougeTokens(cand, ref, n);
    }
  }
  return out;
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string FixedOr(const std::optional<double>& v, const char* missing) {
  return v ? Fixed(*v) : std::string(missing);
}

}  // namespace

double BleuN(std::string_view candidate, const std::vector<std::string>& references, int n,
             Smoothing smoothing) {
  CheckOrder(n);
  if (references.empty()) throw Error(ErrorCode::kInvalidArgument, "no references");
  const Tokens cand = MetricTokensOrThrow(candidate, "candidate");
  std::vector<Tokens> refs;
  for (const std::string& r : references) refs.push_back(MetricTokensOrThrow(r, "reference"));
  std::array<std::size_t, 4> m{};
  std::array<std::size_t, 4> d{};
  for (int k = 1; k <= n; ++k) {
    m[k - 1] = ClippedMatches(cand, refs, k);
    d[k - 1] = Total(cand.size(), k);
  }
  const double bp = BrevityPenalty(cand.size(), ClosestRefLength(cand.size(), refs));
  return Combine(m, d, n, bp, smoothing);
}

double RougeN(std::string_view candidate, std::string_view reference, int n) {
  CheckOrder(n);
  const Tokens cand = MetricTokensOrThrow(candidate, "candidate");
  const Tokens ref = MetricTokensOrThrow(reference, "reference");
  return RougeTokens(cand, ref, n);
}

ScoreReport ScoreCorpus(const std::vector<ScorePair>& pairs, std::size_t jobs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no candidate/reference pairs");
  const std::vector<PairCounts> counts = ParallelMap(pairs, jobs, ScorePairCounts);

  ScoreReport report;
  report.pair_count = pairs.size();
  std::array<std::size_t, 4> m{};
  std::array<std::size_t, 4> d{};
  std::size_t c = 0;
  std::size_t r = 0;
  std::array<double, 4> rouge_sum{};
  std::array<std::size_t, 4> rouge_n{};
  double len_sum = 0.0;
  for (const PairCounts& pc : counts) {
    for (int k = 0; k < 4; ++k) {
      m[k] += pc.matches[k];
      d[k] += pc.totals[k];
      if (pc.scores.rouge[k]) {
        rouge_sum[k] += *pc.scores.rouge[k];
        ++rouge_n[k];
      }
    }
    c += pc.cand_len;
    r += pc.ref_len;
    len_sum += static_cast<double>(pc.scores.candidate_chars);
    report.per_pair.push_back(pc.scores);
  }
  const double bp = BrevityPenalty(c, r);
  for (int n = 1; n <= 4; ++n) {
    report.corpus_bleu[n - 1] = Combine(m, d, n, bp, Smoothing::kNone);
    if (rouge_n[n - 1] > 0) {
      report.corpus_rouge[n - 1] = rouge_sum[n - 1] / static_cast<double>(rouge_n[n - 1]);
    }
  }
  const double count = static_cast<double>(pairs.size());
  report.length_mean = len_sum / count;
  if (pairs.size() > 1) {
    double ss = 0.0;
    for (const PairScores& s : report.per_pair) {
      const double dev = static_cast<double>(s.candidate_chars) - report.length_mean;
      ss += dev * dev;
    }
    report.length_stddev = std::sqrt(ss / (count - 1.0));
  }
  return report;
}

std::string FormatReportTsv(const ScoreReport& report) {
  std::string out =
      "kind\tid\tbleu1\tbleu2\tbleu3\tbleu4\trouge1\trouge2\trouge3\trouge4\tchars\tchars_sd\n";
  for (const PairScores& p : report.per_pair) {
    out += "pair\t" + p.id;
    for (double b : p.bleu) out += "\t" + Fixed(b);
    for (const auto& r : p.rouge) out += "\t" + FixedOr(r, "NA");
    out += "\t" + std::to_string(p.candidate_chars) + "\t-\n";
  }
  out += "corpus\t" + std::to_string(report.pair_count);
  for (double b : report.corpus_bleu) out += "\t" + Fixed(b);
  for (const auto& r : report.corpus_rouge) out += "\t" + FixedOr(r, "NA");
  out += "\t" + Fixed(report.length_mean) + "\t" + Fixed(report.length_stddev) + "\n";
  return out;
}

std::string FormatReportJsonl(const ScoreReport& report) {
  auto array = [](const auto& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) s += ",";
      if constexpr (std::is_same_v<std::decay_t<decltype(values[i])>, double>) {
        s += Fixed(values[i]);
      } else {
        s += FixedOr(values[i], "null");
      }
    }
    return s + "]";
  };
  std::string out;
  for (const PairScores& p : report.per_pair) {
    out += "{\"id\":" + nlohmann::json(p.id).dump() + ",\"bleu\":" + array(p.bleu) +
           ",\"rouge\":" + array(p.rouge) + ",\"chars\":" + std::to_string(p.candidate_chars) +
           "}\n";
  }
  out += "{\"corpus\":{\"pairs\":" + std::to_string(report.pair_count) +
         ",\"bleu\":" + array(report.corpus_bleu) + ",\"rouge\":" + array(report.corpus_rouge) +
         ",\"chars_mean\":" + Fixed(report.length_mean) +
         ",\"chars_stddev\":" + Fixed(report.length_stddev) + "}}\n";
  return out;
}

}  // namespace hintgen

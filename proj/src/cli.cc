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

#include "hintgen/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hintgen/clauser.h"
#include "hintgen/composer.h"
#include "hintgen/dataset.h"
#include "hintgen/embedded_data.h"
#include "hintgen/errors.h"
#include "hintgen/lexicon.h"
#include "hintgen/metrics.h"
#include "hintgen/parallel.h"
#include "hintgen/qbank.h"
#include "hintgen/qparse.h"
#include "hintgen/validate.h"
#include "json.hpp"

namespace hintgen {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Per-record result of a generation command: a payload line or a diagnostic.
struct Outcome {
  std::string payload;
  std::optional<std::string> error;
};

// Data files, each overridable by a flag or an environment variable.
struct DataPaths {
  std::string lexicon;
  std::string irregulars;
  std::string verbs;
  std::string patterns;
  std::string stopwords;
  std::string validator;
  std::string topic_stems;
};

std::string FromEnv(const std::string& flag_value, const char* env) {
  if (!flag_value.empty()) return flag_value;
  const char* v = std::getenv(env);
  return v != nullptr ? v : "";
}

class Resources {
 public:
  explicit Resources(const DataPaths& flags) {
    const std::string lex = FromEnv(flags.lexicon, "HINTGEN_LEXICON");
    const std::string irr = FromEnv(flags.irregulars, "HINTGEN_IRREGULAR_VERBS");
    const std::string verbs = FromEnv(flags.verbs, "HINTGEN_VERBS");
    if (!lex.empty() || !irr.empty() || !verbs.empty()) {
      // Load each table from its override or the compiled-in default.
      Lexicon l = lex.empty() ? Lexicon::Parse(embedded::lexicon_tsv()) : Lexicon::Load(lex);
      IrregularVerbs i = irr.empty() ? IrregularVerbs::Parse(embedded::irregular_verbs_tsv())
                                     : IrregularVerbs::Load(irr);
      const std::vector<std::string> v =
          DataLines(verbs.empty() ? std::string(embedded::verbs_txt()) : ReadFile(verbs));
      owned_grammar_ = std::make_unique<Grammar>(std::move(l), std::move(i), v);
    }
    const std::string pat = FromEnv(flags.patterns, "HINTGEN_PATTERNS");
    if (!pat.empty()) owned_patterns_ = std::make_unique<PatternInventory>(PatternInventory::Load(pat));
    const std::string stop = FromEnv(flags.stopwords, "HINTGEN_STOPWORDS");
    if (!stop.empty()) owned_stopwords_ = std::make_unique<Stopwords>(Stopwords::Load(stop));
    const std::string stems = FromEnv(flags.topic_stems, "HINTGEN_TOPIC_STEMS");
    if (!stems.empty()) owned_stems_ = std::make_unique<TopicStems>(TopicStems::Load(stems));
    const std::string conf = FromEnv(flags.validator, "HINTGEN_VALIDATOR_CONF");
    config_ = conf.empty() ? ValidatorConfig::Parse(embedded::validator_conf())
                           : ValidatorConfig::Load(conf);
  }

  const Grammar& grammar() const { return owned_grammar_ ? *owned_grammar_ : Grammar::Default(); }
  const PatternInventory& patterns() const {
    return owned_patterns_ ? *owned_patterns_ : PatternInventory::Default();
  }
  const Stopwords& stopwords() const {
    return owned_stopwords_ ? *owned_stopwords_ : Stopwords::Default();
  }
  const TopicStems& topic_stems() const {
    return owned_stems_ ? *owned_stems_ : TopicStems::Default();
  }
  const ValidatorConfig& config() const { return config_; }

 private:
  std::unique_ptr<Grammar> owned_grammar_;
  std::unique_ptr<PatternInventory> owned_patterns_;
  std::unique_ptr<Stopwords> owned_stopwords_;
  std::unique_ptr<TopicStems> owned_stems_;
  ValidatorConfig config_;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return ReadFile(path);
}

// Non-blank lines, "\r" stripped. A trailing newline adds no line.
std::vector<std::string> InputLines(std::string_view text) {
  std::vector<std::string> lines = Split(text, "\n");
  for (std::string& l : lines) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// One question per line, either "text" or "id<TAB>text". Blank lines skipped.
std::vector<Question> QuestionLines(std::string_view text) {
  std::vector<Question> out;
  std::size_t line_no = 0;
  for (const std::string& line : InputLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      out.emplace_back("q" + std::to_string(line_no), line);
    } else {
      out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
  }
  return out;
}

std::vector<std::size_t> Indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <typename Fn>
std::vector<Outcome> MapRecords(std::size_t n, std::size_t jobs, Fn fn) {
  return ParallelMap(Indices(n), jobs, [&](std::size_t i) -> Outcome {
    try {
      return {fn(i), std::nullopt};
    } catch (const Error& e) {
      return {"", e.what()};
    }
  });
}

// Failed records keep their slot as an empty line so stdout stays aligned
// with the input.
int WriteOutcomes(const std::vector<Outcome>& outcomes, const std::vector<std::string>& labels,
                  std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    out << outcomes[i].payload << '\n';
    if (outcomes[i].error) {
      err << labels[i] << ": " << *outcomes[i].error << '\n';
      code = kExitDomain;
    }
  }
  return code;
}

std::string ParseToJson(const ParsedQuestion& pq) {
  nlohmann::ordered_json o;
  o["id"] = pq.source.id();
  o["kind"] = QuestionKindName(pq.kind);
  o["inversion"] = InversionName(pq.inversion);
  o["wh"] = pq.SpanText(pq.wh_phrase);
  o["aux"] = pq.auxiliary ? pq.auxiliary->surface : "";
  o["subject"] = pq.SpanText(pq.subject);
  o["verb"] = pq.main_verb ? pq.source.tokens()[*pq.main_verb].text : "";
  o["remainder"] = pq.SpanText(pq.remainder);
  return o.dump();
}

struct PatternFlags {
  std::optional<std::size_t> index;
  std::optional<std::uint64_t> seed;
  bool round_robin = false;

  PatternStrategy Strategy() const {
    if (seed) return PatternStrategy::Seeded(*seed);
    if (round_robin) return PatternStrategy::RoundRobin();
    return PatternStrategy::Fixed(index.value_or(0));
  }
};

void AddPatternFlags(CLI::App* cmd, PatternFlags& flags) {
  auto* idx = cmd->add_option("--pattern", flags.index, "Start pattern index (fixed strategy)");
  auto* rr = cmd->add_flag("--round-robin", flags.round_robin, "Cycle through start patterns");
  auto* seed = cmd->add_option("--seed", flags.seed, "Seeded random start pattern choice");
  idx->excludes(rr)->excludes(seed);
  rr->excludes(seed);
}

std::vector<StartPattern> ChoosePatterns(std::size_t n, const PatternFlags& flags,
                                         const PatternInventory& inventory) {
  PatternChooser chooser(inventory, flags.Strategy());
  std::vector<StartPattern> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(chooser.Next());
  return out;
}

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string> BundleLabels(const std::vector<HintBundle>& bundles) {
  std::vector<std::string> labels;
  for (const HintBundle& b : bundles) labels.push_back("record " + b.id);
  return labels;
}

std::vector<std::string> QuestionLabels(const std::vector<Question>& qs) {
  std::vector<std::string> labels;
  for (const Question& q : qs) labels.push_back("question " + q.id());
  return labels;
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  f << content;
  if (!f) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::string FormatViolations(const std::vector<Violation>& vs) {
  std::vector<std::string> parts;
  for (const Violation& v : vs) {
    std::string p(ViolationCodeName(v.code));
    if (!v.question_id.empty()) p += "[" + v.question_id + "]";
    p += ": " + v.detail;
    parts.push_back(std::move(p));
  }
  return Join(parts, "; ");
}

std::vector<double> ParseRatios(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : Split(text, ",")) {
    char* end = nullptr;
    const std::string t = Trim(part);
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0') {
      throw Error(ErrorCode::kInvalidArgument, "bad ratio '" + part + "'");
    }
    out.push_back(v);
  }
  if (out.size() != 3) throw Error(ErrorCode::kInvalidArgument, "expected three ratios");
  return out;
}

// Nearest-rank percentile of sorted samples.
double Percentile(const std::vector<double>& sorted, double p) {
  const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
  return sorted[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Rule-based voice-friendly hint generation", "hintgen"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t jobs = 1;
  DataPaths paths;
  app.add_option("--jobs,-j", jobs, "Worker threads for record-parallel commands")
      ->check(CLI::Range(1, 256));
  app.add_option("--lexicon", paths.lexicon, "Auxiliary lexicon (env HINTGEN_LEXICON)");
  app.add_option("--irregular-verbs", paths.irregulars,
                 "Irregular verb table (env HINTGEN_IRREGULAR_VERBS)");
  app.add_option("--verbs", paths.verbs, "Regular verb lemmas (env HINTGEN_VERBS)");
  app.add_option("--patterns", paths.patterns, "Start pattern inventory (env HINTGEN_PATTERNS)");
  app.add_option("--stopwords", paths.stopwords, "Stopword list (env HINTGEN_STOPWORDS)");
  app.add_option("--validator-config", paths.validator,
                 "Validator thresholds (env HINTGEN_VALIDATOR_CONF)");
  app.add_option("--topic-stems", paths.topic_stems, "Topic stem table (env HINTGEN_TOPIC_STEMS)");

  std::string input = "-";
  auto* parse_cmd = app.add_subcommand("parse", "Parse questions, one per line");
  parse_cmd->add_option("input", input, "Question file, '-' for stdin");

  bool no_person_shift = false;
  bool embedded_inversion = false;
  auto* clause_cmd = app.add_subcommand("clause", "Convert questions into content clauses");
  clause_cmd->add_option("input", input, "Question file, '-' for stdin");
  clause_cmd->add_flag("--no-person-shift", no_person_shift, "Keep first-person words");
  clause_cmd->add_flag("--embedded-inversion", embedded_inversion,
                       "Move the copula behind the subject in wh-copula clauses");

  std::string mode_name = "full";
  std::string conj_name = "or";
  PatternFlags pattern_flags;
  auto* hint_cmd = app.add_subcommand("hint", "Compose one hint per bundle record");
  hint_cmd->add_option("input", input, "Record file, '-' for stdin");
  hint_cmd->add_option("--mode", mode_name, "tb, rsb or full")
      ->check(CLI::IsMember({"tb", "rsb", "full"}));
  hint_cmd->add_option("--conj", conj_name, "Conjunction before the last clause (full mode)")
      ->check(CLI::IsMember({"or", "and"}));
  AddPatternFlags(hint_cmd, pattern_flags);

  std::string hints_path;
  std::optional<std::string> validate_mode;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Validate hints: from --hints, composed with --mode, or the gold field");
  validate_cmd->add_option("input", input, "Record file, '-' for stdin");
  validate_cmd->add_option("--hints", hints_path, "One hint per line, aligned with the records");
  auto* vmode = validate_cmd->add_option("--mode", validate_mode, "Compose hints with tb, rsb or full")
                    ->check(CLI::IsMember({"tb", "rsb", "full"}));
  vmode->excludes(validate_cmd->get_option("--hints"));
  validate_cmd->add_option("--conj", conj_name, "Conjunction for full mode")
      ->check(CLI::IsMember({"or", "and"}));
  AddPatternFlags(validate_cmd, pattern_flags);

  std::string candidates_path;
  std::string references_path;
  std::string tsv_path;
  std::string jsonl_path;
  auto* score_cmd = app.add_subcommand("score", "BLEU and ROUGE of line-aligned text files");
  score_cmd->add_option("--candidates", candidates_path, "Candidate hints")->required();
  score_cmd->add_option("--references", references_path, "Reference hints")->required();
  score_cmd->add_option("--tsv", tsv_path, "Write the TSV report here instead of stdout");
  score_cmd->add_option("--jsonl", jsonl_path, "Also write a JSONL report");

  std::string bank_path;
  std::string query_id;
  std::size_t k = 3;
  auto* retrieve_cmd = app.add_subcommand("retrieve", "Related questions from a question bank");
  retrieve_cmd->add_option("--bank", bank_path, "Question bank (JSONL)")->required();
  retrieve_cmd->add_option("--id", query_id, "Query record id")->required();
  retrieve_cmd->add_option("--k", k, "Number of related questions")->check(CLI::Range(1, 3));

  std::string ratios_text = "0.6,0.1,0.3";
  std::uint64_t split_seed = 0;
  std::string out_dir;
  auto* split_cmd = app.add_subcommand("split", "Seeded train/dev/test split of records");
  split_cmd->add_option("input", input, "Record file, '-' for stdin");
  split_cmd->add_option("--ratios", ratios_text, "train,dev,test ratios");
  split_cmd->add_option("--seed", split_seed, "Shuffle seed")->required();
  split_cmd->add_option("--out-dir", out_dir, "Directory for train/dev/test.jsonl")->required();

  bool pretrain = false;
  bool finetune = false;
  bool targets = false;
  auto* emit_cmd = app.add_subcommand("emit", "Seq2seq training lines");
  emit_cmd->add_option("input", input, "Record file, '-' for stdin");
  auto* pre = emit_cmd->add_flag("--pretrain", pretrain, "Question to clause pairs");
  auto* fine = emit_cmd->add_flag("--finetune", finetune, "Bundle inputs, gold as target");
  pre->excludes(fine);
  emit_cmd->add_flag("--targets", targets, "Append gold hints (finetune)");
  AddPatternFlags(emit_cmd, pattern_flags);

  std::size_t bench_bundles = 1000;
  auto* bench_cmd = app.add_subcommand("bench", "Per-hint latency of the full pipeline");
  bench_cmd->add_option("input", input, "Record file, '-' for stdin");
  bench_cmd->add_option("--bundles", bench_bundles, "Hints to time, cycling the records")
      ->check(CLI::Range(1, 100000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (emit_cmd->parsed() && !pretrain && !finetune) {
    err << "emit: one of --pretrain or --finetune is required\n";
    return kExitUsage;
  }

  try {
    const Resources res(paths);
    const Grammar& grammar = res.grammar();

    if (parse_cmd->parsed()) {
      const std::vector<Question> qs = QuestionLines(ReadInput(input, in));
      return WriteOutcomes(MapRecords(qs.size(), jobs,
                                      [&](std::size_t i) {
                                        return ParseToJson(ParseQuestion(qs[i], grammar));
                                      }),
                           QuestionLabels(qs), out, err);
    }

    if (clause_cmd->parsed()) {
      const std::vector<Question> qs = QuestionLines(ReadInput(input, in));
      ClauseOptions opts;
      opts.person_shift = !no_person_shift;
      opts.embedded_inversion = embedded_inversion;
      return WriteOutcomes(MapRecords(qs.size(), jobs,
                                      [&](std::size_t i) {
                                        return ToContentClause(ParseQuestion(qs[i], grammar),
                                                               opts, grammar)
                                            .Text();
                                      }),
                           QuestionLabels(qs), out, err);
    }

    if (hint_cmd->parsed()) {
      const std::vector<HintBundle> bundles = ParseRecords(ReadInput(input, in));
      const HintMode mode = ParseHintMode(mode_name);
      const Conjunction conj = conj_name == "and" ? Conjunction::kAnd : Conjunction::kOr;
      const std::vector<StartPattern> pats =
          ChoosePatterns(bundles.size(), pattern_flags, res.patterns());
      return WriteOutcomes(MapRecords(bundles.size(), jobs,
                                      [&](std::size_t i) {
                                        return Compose(bundles[i], pats[i], mode, conj, grammar)
                                            .text;
                                      }),
                           BundleLabels(bundles), out, err);
    }

    if (validate_cmd->parsed()) {
      const std::vector<HintBundle> bundles = ParseRecords(ReadInput(input, in));
      std::vector<std::string> supplied;
      if (!hints_path.empty()) {
        supplied = InputLines(ReadFile(hints_path));
        if (supplied.size() != bundles.size()) {
          throw Error(ErrorCode::kMalformedRecord,
                      "--hints has " + std::to_string(supplied.size()) + " lines for " +
                          std::to_string(bundles.size()) + " records");
        }
      }
      const std::vector<StartPattern> pats =
          ChoosePatterns(bundles.size(), pattern_flags, res.patterns());
      const Conjunction conj = conj_name == "and" ? Conjunction::kAnd : Conjunction::kOr;
      std::vector<Outcome> outcomes =
          MapRecords(bundles.size(), jobs, [&](std::size_t i) -> std::string {
            const HintBundle& b = bundles[i];
            Hint h;
            if (!supplied.empty()) {
              h = Hint::FromText(supplied[i], res.patterns());
            } else if (validate_mode) {
              h = Compose(b, pats[i], ParseHintMode(*validate_mode), conj, grammar);
            } else if (b.gold) {
              h = Hint::FromText(*b.gold, res.patterns());
            } else {
              throw Error(ErrorCode::kMalformedRecord, "no gold hint to validate");
            }
            const std::vector<Violation> vs =
                ValidateHint(h, b, res.config(), res.stopwords(), grammar);
            if (vs.empty()) return b.id + "\tPASS";
            return b.id + "\tFAIL\t" + FormatViolations(vs);
          });
      int code = WriteOutcomes(outcomes, BundleLabels(bundles), out, err);
      for (const Outcome& o : outcomes) {
        if (o.payload.find("\tFAIL\t") != std::string::npos) code = kExitDomain;
      }
      return code;
    }

    if (score_cmd->parsed()) {
      const std::vector<std::string> cands = InputLines(ReadInput(candidates_path, in));
      const std::vector<std::string> refs = InputLines(ReadFile(references_path));
      if (cands.size() != refs.size()) {
        throw Error(ErrorCode::kMalformedRecord,
                    std::to_string(cands.size()) + " candidates but " +
                        std::to_string(refs.size()) + " references");
      }
      std::vector<ScorePair> pairs;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        pairs.push_back({std::to_string(i + 1), cands[i], refs[i]});
      }
      const ScoreReport report = ScoreCorpus(pairs, jobs);
      if (!jsonl_path.empty()) WriteFile(jsonl_path, FormatReportJsonl(report));
      if (tsv_path.empty()) {
        out << FormatReportTsv(report);
      } else {
        WriteFile(tsv_path, FormatReportTsv(report));
      }
      return kExitOk;
    }

    if (retrieve_cmd->parsed()) {
      const QuestionBank bank = QuestionBank::Load(bank_path);
      const QuestionBankRecord* query = bank.Find(query_id);
      if (query == nullptr) {
        err << "retrieve: no record with id '" << query_id << "'\n";
        return kExitDomain;
      }
      for (const QuestionBankRecord& r : RetrieveRelated(bank, *query, k)) {
        out << r.question.id() << '\t' << r.topic << '\t' << r.question.text() << '\n';
      }
      return kExitOk;
    }

    if (split_cmd->parsed()) {
      const std::vector<HintBundle> bundles = ParseRecords(ReadInput(input, in));
      const std::vector<double> r = ParseRatios(ratios_text);
      SplitSpec spec;
      spec.ratios = {r[0], r[1], r[2]};
      spec.seed = split_seed;
      const DatasetSplit split = SplitDataset(bundles, spec);
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      WriteFile(dir / "train.jsonl", FormatRecords(split.train));
      WriteFile(dir / "dev.jsonl", FormatRecords(split.dev));
      WriteFile(dir / "test.jsonl", FormatRecords(split.test));
      out << "train\t" << split.train.size() << "\ndev\t" << split.dev.size() << "\ntest\t"
          << split.test.size() << '\n';
      return kExitOk;
    }

    if (emit_cmd->parsed()) {
      const std::vector<HintBundle> bundles = ParseRecords(ReadInput(input, in));
      const Seq2SeqOutput result =
          EmitSeq2Seq(bundles, pretrain ? Seq2SeqMode::kPretrain : Seq2SeqMode::kFinetune, targets,
                      pattern_flags.Strategy(), res.patterns(), grammar);
      for (const std::string& line : result.lines) out << line << '\n';
      if (result.skipped > 0) {
        err << "emit: skipped " << result.skipped << " unsupported question(s)\n";
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const std::vector<HintBundle> bundles = ParseRecords(ReadInput(input, in));
      if (bundles.empty()) throw Error(ErrorCode::kEmptyCorpus, "no records to benchmark");
      const StartPattern& pattern = res.patterns().at(0);
      std::vector<double> ms;
      ms.reserve(bench_bundles);
      std::size_t sink = 0;
      for (std::size_t i = 0; i < bench_bundles; ++i) {
        const HintBundle& b = bundles[i % bundles.size()];
        const auto start = std::chrono::steady_clock::now();
        sink += ComposeFull(b, pattern, Conjunction::kOr, grammar).text.size();
        const auto stop = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      }
      double sum = 0.0;
      for (double v : ms) sum += v;
      std::sort(ms.begin(), ms.end());
      out << "bundles\t" << ms.size() << "\nmean_ms\t" << Fixed6(sum / static_cast<double>(ms.size()))
          << "\np95_ms\t" << Fixed6(Percentile(ms, 0.95)) << "\np99_ms\t"
          << Fixed6(Percentile(ms, 0.99)) << "\nmax_ms\t" << Fixed6(ms.back()) << '\n';
      return sink > 0 ? kExitOk : kExitDomain;
    }
  } catch (const Error& e) {
    err << "hintgen: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hintgen: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hintgen

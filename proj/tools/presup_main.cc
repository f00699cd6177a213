// Copyright 2026 The presupqa Authors.
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

// presup: batch driver for presupposition generation, verification,
// explanation and QA input augmentation over JSONL corpora.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "presup/augment.h"
#include "presup/corpus.h"
#include "presup/errors.h"
#include "presup/evaluate.h"
#include "presup/explain.h"
#include "presup/lexicon.h"
#include "presup/pipeline.h"
#include "presup/presupgen.h"
#include "presup/sampling.h"
#include "presup/scorer.h"
#include "presup/verify.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace presup {
namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitScorer = 3;

struct Flags {
  std::string questions;
  std::string documents;
  std::string out;
  std::string scorer;
  std::string strategy = "sentence-nli";
  int k = 1;
  double threshold = 0.5;
  uint64_t seed = 0;
  size_t max_global_tokens = 300;
  std::string presups;
  std::string verification;
  std::string vocab;
  std::string factives;
  bool joint = false;
  bool projection_guard = false;
  size_t jobs = 1;
  size_t sample_n = 3;
  double dev_fraction = 0.5;
  std::string input;
  std::string predictions;
  std::string gold;
  bool primary_only = false;
};

std::string ScorerDescriptor(const Flags &flags) {
  if (!flags.scorer.empty()) return flags.scorer;
  if (const char *env = std::getenv("PRESUP_SCORER_URL"); env && *env) return env;
  return "builtin";
}

FactiveLexicon LoadLexicon(const Flags &flags) {
  return flags.factives.empty() ? FactiveLexicon::Default()
                                : FactiveLexicon::FromFile(flags.factives);
}

GeneratorOptions GenOptions(const Flags &flags) {
  GeneratorOptions options;
  options.projection_guard = flags.projection_guard;
  return options;
}

VerifierConfig VerifierFromFlags(const Flags &flags) {
  VerifierConfig cfg;
  cfg.k = flags.k;
  cfg.decision_threshold = flags.threshold;
  cfg.strategy = ParseStrategy(flags.strategy);
  cfg.mode = flags.joint ? ScoreMode::kJoint : ScoreMode::kIndependent;
  cfg.scorer = ScorerDescriptor(flags);
  cfg.Validate();
  return cfg;
}

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string &path, const std::vector<json> &records) {
  if (path.empty() || path == "-") {
    for (const json &r : records) std::cout << r.dump() << "\n";
    return;
  }
  fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
  WriteJsonl(path, records);
}

std::vector<Presupposition> LoadPresuppositions(const std::string &path) {
  std::vector<Presupposition> out;
  for (const json &r : ReadJsonl(path)) out.push_back(PresuppositionFromJson(r));
  return out;
}

std::vector<VerificationResult> LoadVerifications(const std::string &path) {
  std::vector<VerificationResult> out;
  for (const json &r : ReadJsonl(path)) out.push_back(VerificationFromJson(r));
  return out;
}

DocumentStore LoadDocuments(const std::string &path) {
  return MakeDocumentStore(ReadDocuments(path));
}

int CmdGenerate(const Flags &flags) {
  FactiveLexicon lexicon = LoadLexicon(flags);
  std::vector<json> records;
  for (const Question &q : ReadQuestions(flags.questions)) {
    for (const Presupposition &p : GeneratePresuppositions(q, lexicon, GenOptions(flags))) {
      records.push_back(ToJson(p));
    }
  }
  Emit(flags.out, records);
  return 0;
}

int CmdVerify(const Flags &flags) {
  VerifierConfig cfg = VerifierFromFlags(flags);
  FactiveLexicon lexicon = LoadLexicon(flags);
  std::unique_ptr<Scorer> scorer = MakeScorer(cfg.scorer);
  DocumentStore docs = LoadDocuments(flags.documents);
  std::unordered_map<std::string, std::string> doc_of;
  if (!flags.questions.empty()) {
    for (const Question &q : ReadQuestions(flags.questions)) doc_of[q.id] = q.doc_id;
  }
  std::vector<Presupposition> presups = LoadPresuppositions(flags.presups);
  std::string missing;
  for (const Presupposition &p : presups) {
    auto it = doc_of.find(p.question_id);
    const std::string &doc_id = it == doc_of.end() ? p.question_id : it->second;
    if (!docs.count(doc_id)) missing += (missing.empty() ? "" : ", ") + doc_id;
  }
  if (!missing.empty()) throw Error(ErrorCode::kMissingDocument, "missing documents: " + missing);

  std::unordered_map<std::string, std::vector<Premise>> premises;
  std::vector<json> records;
  for (const Presupposition &p : presups) {
    auto it = doc_of.find(p.question_id);
    const std::string &doc_id = it == doc_of.end() ? p.question_id : it->second;
    auto pit = premises.find(doc_id);
    if (pit == premises.end()) {
      pit = premises.emplace(doc_id, BuildPremises(docs.at(doc_id), cfg.strategy, lexicon)).first;
    }
    records.push_back(ToJson(Verify(p, pit->second, cfg, *scorer)));
  }
  Emit(flags.out, records);
  return 0;
}

int CmdExplain(const Flags &flags) {
  std::vector<Presupposition> presups = LoadPresuppositions(flags.presups);
  std::unordered_map<std::string, VerificationResult> by_id;
  for (VerificationResult &v : LoadVerifications(flags.verification)) {
    std::string id = v.presup_id;
    by_id.emplace(id, std::move(v));
  }
  // Explanations grouped by question, in first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<Explanation>> grouped;
  for (const Presupposition &p : presups) {
    auto it = by_id.find(p.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kMismatchedIds, "no verification result for " + p.id);
    }
    if (!grouped.count(p.question_id)) order.push_back(p.question_id);
    auto &list = grouped[p.question_id];
    if (auto e = Explain(p, it->second)) list.push_back(std::move(*e));
  }
  std::vector<json> records;
  for (const std::string &qid : order) {
    const auto &list = grouped[qid];
    if (flags.primary_only) {
      if (auto e = SelectPrimaryExplanation(list)) records.push_back(ToJson(*e));
    } else {
      for (const Explanation &e : list) records.push_back(ToJson(e));
    }
  }
  Emit(flags.out, records);
  return 0;
}

int CmdAugment(const Flags &flags) {
  std::vector<Question> questions = ReadQuestions(flags.questions);
  DocumentStore docs = LoadDocuments(flags.documents);
  CheckDocumentLinks(questions, docs);
  std::unordered_map<std::string, VerificationResult> by_id;
  for (VerificationResult &v : LoadVerifications(flags.verification)) {
    std::string id = v.presup_id;
    by_id.emplace(id, std::move(v));
  }
  std::unordered_map<std::string, std::vector<VerifiedPresupposition>> per_question;
  std::vector<QuestionResult> results(1);
  for (Presupposition &p : LoadPresuppositions(flags.presups)) {
    auto it = by_id.find(p.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kMismatchedIds, "no verification result for " + p.id);
    }
    results[0].presuppositions.push_back(p);
    per_question[p.question_id].push_back({std::move(p), it->second});
  }
  Vocabulary vocab = flags.vocab.empty() ? CorpusVocabulary(questions, docs, results)
                                         : Vocabulary::FromFile(flags.vocab);
  std::vector<json> flat;
  std::vector<json> structured;
  for (const Question &q : questions) {
    const auto &ps = per_question[q.id];
    flat.push_back(FlatToJson(q.id, EncodeFlat(q, ps, vocab, flags.max_global_tokens)));
    structured.push_back(StructuredToJson(
        q.id, EncodeStructured(q, ps, docs.at(q.doc_id), vocab, flags.max_global_tokens)));
  }
  fs::create_directories(flags.out);
  WriteJsonl((fs::path(flags.out) / "augmented_flat.jsonl").string(), flat);
  WriteJsonl((fs::path(flags.out) / "augmented_structured.jsonl").string(), structured);
  return 0;
}

int CmdExportPairs(const Flags &flags) {
  std::vector<Question> questions = ReadQuestions(flags.questions);
  DocumentStore docs = LoadDocuments(flags.documents);
  std::vector<json> records;
  for (const PairExportRecord &r : ExportPairs(questions, docs, flags.sample_n, flags.seed,
                                               LoadLexicon(flags), GenOptions(flags))) {
    records.push_back({{"question_id", r.question_id},
                       {"presup_id", r.presup_id},
                       {"hypothesis", r.presupposition},
                       {"sentence", r.sentence_index},
                       {"premise", r.premise}});
  }
  Emit(flags.out, records);
  return 0;
}

// Records are keyed by "question_id", falling back to "id", so every
// presupposition of a question lands in the same split.
int CmdSplit(const Flags &flags) {
  if (flags.dev_fraction < 0.0 || flags.dev_fraction > 1.0) {
    throw Error(ErrorCode::kOutOfRange, "--dev-fraction must lie in [0, 1]");
  }
  std::vector<json> dev;
  std::vector<json> test;
  for (const json &r : ReadJsonl(flags.input)) {
    std::string key = r.contains("question_id") ? r["question_id"].get<std::string>()
                                                : RecordId(r);
    (InFirstSplit(key, flags.seed, flags.dev_fraction) ? dev : test).push_back(r);
  }
  fs::create_directories(flags.out);
  WriteJsonl((fs::path(flags.out) / "dev.jsonl").string(), dev);
  WriteJsonl((fs::path(flags.out) / "test.jsonl").string(), test);
  return 0;
}

bool LabelField(const json &r) {
  if (!r.contains("verifiable") || !r["verifiable"].is_boolean()) {
    throw Error(ErrorCode::kInputFormat, "record " + RecordId(r) + " lacks boolean 'verifiable'");
  }
  return r["verifiable"].get<bool>();
}

json MetricsJson(const ClassMetrics &m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"support", m.support}};
}

int CmdEval(const Flags &flags) {
  std::unordered_map<std::string, bool> gold;
  for (const json &r : ReadJsonl(flags.gold)) gold[RecordId(r)] = LabelField(r);
  std::vector<std::pair<std::string, bool>> predictions;
  for (const json &r : ReadJsonl(flags.predictions)) {
    predictions.emplace_back(RecordId(r), LabelField(r));
  }
  EvalReport report = Evaluate(predictions, gold);
  json out = {{"n", report.n},
              {"accuracy", report.accuracy},
              {"macro_f1", report.macro_f1},
              {"per_class",
               {{"verifiable", MetricsJson(report.verifiable)},
                {"not_verifiable", MetricsJson(report.not_verifiable)}}},
              {"confusion", report.confusion}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int CmdRun(const Flags &flags) {
  PipelineConfig cfg;
  cfg.verifier = VerifierFromFlags(flags);
  cfg.generator = GenOptions(flags);
  cfg.seed = flags.seed;
  cfg.max_global_tokens = flags.max_global_tokens;
  cfg.vocab_path = flags.vocab;
  cfg.jobs = flags.jobs;
  std::vector<Question> questions = ReadQuestions(flags.questions);
  DocumentStore docs = LoadDocuments(flags.documents);
  std::unique_ptr<Scorer> scorer = MakeScorer(cfg.verifier.scorer);
  PipelineOutput output = RunPipeline(questions, docs, cfg, *scorer, LoadLexicon(flags));
  WritePipelineOutput(flags.out, questions, output);
  return 0;
}

int CmdScore(const Flags &flags) {
  std::unique_ptr<Scorer> scorer = MakeScorer(ScorerDescriptor(flags));
  std::ifstream file;
  std::istream *in = &std::cin;
  if (!flags.input.empty() && flags.input != "-") {
    file.open(flags.input);
    if (!file) throw Error(ErrorCode::kIo, "cannot open " + flags.input);
    in = &file;
  }
  std::ofstream out_file;
  std::ostream *out = &std::cout;
  if (!flags.out.empty() && flags.out != "-") {
    out_file.open(flags.out, std::ios::binary | std::ios::trunc);
    if (!out_file) throw Error(ErrorCode::kIo, "cannot write " + flags.out);
    out = &out_file;
  }
  size_t malformed = ServeScoreLines(*in, *out, *scorer);
  return malformed == 0 ? 0 : kExitInput;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kScorerUnavailable:
    case ErrorCode::kProtocolError:
      return kExitScorer;
    case ErrorCode::kUnbalancedBrackets:
    case ErrorCode::kEmptyLabel:
    case ErrorCode::kEmptyTree:
    case ErrorCode::kYieldMismatch:
    case ErrorCode::kMissingDocument:
    case ErrorCode::kMismatchedIds:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kMissingGold:
    case ErrorCode::kInputFormat:
    case ErrorCode::kIo:
      return kExitInput;
    default:
      return kExitFailure;
  }
}

void ReportError(std::string_view code, const std::string &message) {
  json report = {{"error", {{"code", code}, {"message", message}}}};
  std::cerr << report.dump() << "\n";
}

}  // namespace
}  // namespace presup

int main(int argc, char **argv) {
  using namespace presup;
  Flags flags;
  CLI::App app{"Presupposition generation, verification and QA input augmentation"};
  app.require_subcommand(1);

  auto add_questions = [&](CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("--questions", flags.questions, "Questions JSONL {id, text, ptb, doc_id?}");
    if (required) opt->required();
  };
  auto add_documents = [&](CLI::App *cmd) {
    cmd->add_option("--documents", flags.documents, "Documents JSONL {id, title, sentences}")
        ->required();
  };
  auto add_verifier = [&](CLI::App *cmd) {
    cmd->add_option("--scorer", flags.scorer, "builtin or an http(s) base URL");
    cmd->add_option("--strategy", flags.strategy, "sentence-nli, hybrid-doc-presups or combined");
    cmd->add_option("--k", flags.k, "Entailing premises required");
    cmd->add_option("--threshold", flags.threshold, "Entailment decision threshold");
    cmd->add_flag("--joint", flags.joint, "Request joint scoring mode");
  };
  auto add_generator = [&](CLI::App *cmd) {
    cmd->add_option("--factives", flags.factives, "Factive lexicon file");
    cmd->add_flag("--projection-guard", flags.projection_guard,
                  "Drop triggers under non-factive verbs");
  };

  CLI::App *generate = app.add_subcommand("generate", "Generate presuppositions");
  add_questions(generate, true);
  add_generator(generate);
  generate->add_option("--out", flags.out, "Output JSONL (default stdout)");

  CLI::App *verify = app.add_subcommand("verify", "Verify presuppositions against documents");
  verify->add_option("--presups", flags.presups, "Presuppositions JSONL")->required();
  add_questions(verify, false);
  add_documents(verify);
  add_verifier(verify);
  verify->add_option("--factives", flags.factives, "Factive lexicon file");
  verify->add_option("--out", flags.out, "Output JSONL (default stdout)");

  CLI::App *explain = app.add_subcommand("explain", "Explain unverifiable presuppositions");
  explain->add_option("--presups", flags.presups, "Presuppositions JSONL")->required();
  explain->add_option("--verification", flags.verification, "Verification JSONL")->required();
  explain->add_flag("--primary-only", flags.primary_only, "One explanation per question");
  explain->add_option("--out", flags.out, "Output JSONL (default stdout)");

  CLI::App *augment = app.add_subcommand("augment", "Build augmented QA inputs");
  add_questions(augment, true);
  add_documents(augment);
  augment->add_option("--presups", flags.presups, "Presuppositions JSONL")->required();
  augment->add_option("--verification", flags.verification, "Verification JSONL")->required();
  augment->add_option("--vocab", flags.vocab, "Vocabulary file, one token per line");
  augment->add_option("--max-global-tokens", flags.max_global_tokens, "Global token budget");
  augment->add_option("--out", flags.out, "Output directory")->required();

  CLI::App *export_pairs = app.add_subcommand("export-pairs", "Sample pairs for annotation");
  add_questions(export_pairs, true);
  add_documents(export_pairs);
  add_generator(export_pairs);
  export_pairs->add_option("--sample-n", flags.sample_n, "Sentences per presupposition");
  export_pairs->add_option("--seed", flags.seed, "Random seed");
  export_pairs->add_option("--out", flags.out, "Output JSONL (default stdout)");

  CLI::App *split = app.add_subcommand("split", "Split records into dev and test by question");
  split->add_option("--input", flags.input, "Input JSONL")->required();
  split->add_option("--seed", flags.seed, "Random seed");
  split->add_option("--dev-fraction", flags.dev_fraction, "Fraction of questions in dev");
  split->add_option("--out", flags.out, "Output directory")->required();

  CLI::App *eval = app.add_subcommand("eval", "Score verifiability predictions");
  eval->add_option("--predictions", flags.predictions, "Predictions JSONL")->required();
  eval->add_option("--gold", flags.gold, "Gold JSONL")->required();

  CLI::App *run = app.add_subcommand("run", "Full pipeline");
  add_questions(run, true);
  add_documents(run);
  add_verifier(run);
  add_generator(run);
  run->add_option("--seed", flags.seed, "Random seed");
  run->add_option("--max-global-tokens", flags.max_global_tokens, "Global token budget");
  run->add_option("--vocab", flags.vocab, "Vocabulary file, one token per line");
  run->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--out", flags.out, "Output directory")->required();

  CLI::App *score = app.add_subcommand("score", "Offline scorer: one request per line");
  score->add_option("--scorer", flags.scorer, "builtin or an http(s) base URL");
  score->add_option("--input", flags.input, "Request lines (default stdin)");
  score->add_option("--out", flags.out, "Response lines (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return CmdGenerate(flags);
    if (verify->parsed()) return CmdVerify(flags);
    if (explain->parsed()) return CmdExplain(flags);
    if (augment->parsed()) return CmdAugment(flags);
    if (export_pairs->parsed()) return CmdExportPairs(flags);
    if (split->parsed()) return CmdSplit(flags);
    if (eval->parsed()) return CmdEval(flags);
    if (run->parsed()) return CmdRun(flags);
    if (score->parsed()) return CmdScore(flags);
  } catch (const Error &e) {
    ReportError(ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e.code());
  } catch (const nlohmann::json::exception &e) {
    ReportError("InputFormat", e.what());
    return kExitInput;
  } catch (const fs::filesystem_error &e) {
    ReportError("Io", e.what());
    return kExitInput;
  } catch (const std::exception &e) {
    ReportError("Internal", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}

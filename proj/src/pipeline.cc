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

#include "presup/pipeline.h"

#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "presup/corpus.h"
#include "presup/errors.h"

namespace presup {

void CheckDocumentLinks(const std::vector<Question> &questions, const DocumentStore &docs) {
  std::string missing;
  for (const Question &q : questions) {
    if (docs.count(q.doc_id)) continue;
    if (!missing.empty()) missing += ", ";
    missing += q.doc_id + " (question " + q.id + ")";
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingDocument, "missing documents: " + missing);
  }
}

QuestionResult ProcessQuestion(const Question &q, const std::vector<Premise> &premises,
                               const PipelineConfig &cfg, const Scorer &scorer,
                               const FactiveLexicon &lexicon) {
  QuestionResult result;
  result.presuppositions = GeneratePresuppositions(q, lexicon, cfg.generator);
  for (const Presupposition &p : result.presuppositions) {
    result.verifications.push_back(Verify(p, premises, cfg.verifier, scorer));
    if (auto e = Explain(p, result.verifications.back())) {
      result.explanations.push_back(std::move(*e));
    }
  }
  result.primary_explanation = SelectPrimaryExplanation(result.explanations);
  return result;
}

Vocabulary CorpusVocabulary(const std::vector<Question> &questions, const DocumentStore &docs,
                            const std::vector<QuestionResult> &results) {
  std::vector<std::string> texts;
  for (const Question &q : questions) {
    texts.push_back(q.text);
    auto it = docs.find(q.doc_id);
    if (it == docs.end()) continue;
    for (const Sentence &s : it->second.sentences) texts.push_back(s.text);
  }
  for (const QuestionResult &r : results) {
    for (const Presupposition &p : r.presuppositions) texts.push_back(p.text);
  }
  return Vocabulary::Build(texts);
}

PipelineOutput RunPipeline(const std::vector<Question> &questions, const DocumentStore &docs,
                           const PipelineConfig &cfg, const Scorer &scorer,
                           const FactiveLexicon &lexicon) {
  cfg.verifier.Validate();
  CheckDocumentLinks(questions, docs);

  // Premises are built once per linked document.
  std::unordered_map<std::string, std::vector<Premise>> premises;
  for (const Question &q : questions) {
    if (!premises.count(q.doc_id)) {
      premises[q.doc_id] = BuildPremises(docs.at(q.doc_id), cfg.verifier.strategy, lexicon);
    }
  }

  PipelineOutput output;
  output.questions.resize(questions.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    for (size_t i = next++; i < questions.size(); i = next++) {
      try {
        const Question &q = questions[i];
        output.questions[i] = ProcessQuestion(q, premises.at(q.doc_id), cfg, scorer, lexicon);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = questions.size();
      }
    }
  };
  size_t jobs = std::max<size_t>(1, std::min(cfg.jobs, questions.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread &t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Vocabulary vocab = cfg.vocab_path.empty()
                         ? CorpusVocabulary(questions, docs, output.questions)
                         : Vocabulary::FromFile(cfg.vocab_path);
  for (size_t i = 0; i < questions.size(); ++i) {
    const QuestionResult &r = output.questions[i];
    std::vector<VerifiedPresupposition> verified;
    for (size_t j = 0; j < r.presuppositions.size(); ++j) {
      verified.push_back({r.presuppositions[j], r.verifications[j]});
    }
    output.flat.push_back(EncodeFlat(questions[i], verified, vocab, cfg.max_global_tokens));
    output.structured.push_back(EncodeStructured(questions[i], verified,
                                                 docs.at(questions[i].doc_id), vocab,
                                                 cfg.max_global_tokens));
  }
  return output;
}

void WritePipelineOutput(const std::string &out_dir, const std::vector<Question> &questions,
                         const PipelineOutput &output) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir + ": " + ec.message());

  std::vector<nlohmann::ordered_json> presups, verifications, explanations, flat, structured;
  for (size_t i = 0; i < questions.size(); ++i) {
    const QuestionResult &r = output.questions[i];
    for (const Presupposition &p : r.presuppositions) presups.push_back(ToJson(p));
    for (const VerificationResult &v : r.verifications) verifications.push_back(ToJson(v));
    for (const Explanation &e : r.explanations) explanations.push_back(ToJson(e));
    flat.push_back(FlatToJson(questions[i].id, output.flat[i]));
    structured.push_back(StructuredToJson(questions[i].id, output.structured[i]));
  }
  fs::path dir(out_dir);
  WriteJsonl((dir / "presuppositions.jsonl").string(), presups);
  WriteJsonl((dir / "verification.jsonl").string(), verifications);
  WriteJsonl((dir / "explanations.jsonl").string(), explanations);
  WriteJsonl((dir / "augmented_flat.jsonl").string(), flat);
  WriteJsonl((dir / "augmented_structured.jsonl").string(), structured);
}

}  // namespace presup

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

#ifndef PRESUP_PIPELINE_H_
#define PRESUP_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "presup/augment.h"
#include "presup/explain.h"
#include "presup/lexicon.h"
#include "presup/presupgen.h"
#include "presup/scorer.h"
#include "presup/verify.h"

namespace presup {

struct PipelineConfig {
  VerifierConfig verifier;
  GeneratorOptions generator;
  uint64_t seed = 0;
  // Budget for the flat sequence length and the structured global slots.
  size_t max_global_tokens = 300;
  // Empty: build a vocabulary from the corpus.
  std::string vocab_path;
  // Questions processed concurrently. Output order is input order.
  size_t jobs = 1;
};

struct QuestionResult {
  std::vector<Presupposition> presuppositions;
  std::vector<VerificationResult> verifications;  // aligned with presuppositions
  std::vector<Explanation> explanations;
  std::optional<Explanation> primary_explanation;
};

struct PipelineOutput {
  std::vector<QuestionResult> questions;  // aligned with the input questions
  std::vector<FlatInput> flat;
  std::vector<StructuredLayout> structured;
};

// Throws kMissingDocument listing every unresolved document id.
void CheckDocumentLinks(const std::vector<Question> &questions, const DocumentStore &docs);

// Generate, verify and explain one question.
QuestionResult ProcessQuestion(const Question &q, const std::vector<Premise> &premises,
                               const PipelineConfig &cfg, const Scorer &scorer,
                               const FactiveLexicon &lexicon);

PipelineOutput RunPipeline(const std::vector<Question> &questions, const DocumentStore &docs,
                           const PipelineConfig &cfg, const Scorer &scorer,
                           const FactiveLexicon &lexicon);

// Writes presuppositions.jsonl, verification.jsonl, explanations.jsonl,
// augmented_flat.jsonl and augmented_structured.jsonl into `out_dir`.
void WritePipelineOutput(const std::string &out_dir, const std::vector<Question> &questions,
                         const PipelineOutput &output);

// Vocabulary over question text, presuppositions and document sentences.
Vocabulary CorpusVocabulary(const std::vector<Question> &questions, const DocumentStore &docs,
                            const std::vector<QuestionResult> &results);

}  // namespace presup

#endif  // PRESUP_PIPELINE_H_

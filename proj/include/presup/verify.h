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

#ifndef PRESUP_VERIFY_H_
#define PRESUP_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "presup/presupgen.h"
#include "presup/scorer.h"
#include "presup/treebank.h"

namespace presup {

// Premise source: which premises a presupposition is checked against.
//   kSentenceNli       document sentences
//   kHybridDocPresups  presuppositions generated from document sentences
//   kCombined          both
enum class Strategy { kSentenceNli, kHybridDocPresups, kCombined };

std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

// A document sentence (by index) or a document presupposition (by id).
struct PremiseRef {
  std::string doc_id;
  std::optional<size_t> sentence;
  std::string presup_id;

  bool operator==(const PremiseRef &other) const = default;
};

struct Premise {
  PremiseRef ref;
  std::string text;
};

struct EntailmentScore {
  PremiseRef premise;
  double entail_prob = 0.0;
  bool entails = false;
};

struct VerifierConfig {
  int k = 1;
  double decision_threshold = 0.5;
  Strategy strategy = Strategy::kSentenceNli;
  ScoreMode mode = ScoreMode::kIndependent;
  std::string scorer = "builtin";

  // Throws kOutOfRange on k < 1 or a threshold outside (0, 1).
  void Validate() const;
};

struct VerificationResult {
  std::string presup_id;
  bool verifiable = false;
  int k = 1;
  Strategy strategy = Strategy::kSentenceNli;
  std::vector<PremiseRef> supporting;
  std::vector<EntailmentScore> scores;
};

// Scores every premise against `hypothesis` in one scorer request, order
// preserved. Labels use cfg.decision_threshold.
std::vector<EntailmentScore> ScorePairs(const std::vector<Premise> &premises,
                                        const std::string &hypothesis, const Scorer &scorer,
                                        const VerifierConfig &cfg);

// Verifiable iff at least cfg.k premises entail.
VerificationResult Aggregate(const std::vector<EntailmentScore> &scores,
                             const VerifierConfig &cfg, std::string presup_id = "");

// Premises for `doc` under `strategy`. Document presuppositions are
// generated in declarative mode (no wh templates) from sentences that
// carry a parse; unparsed sentences contribute only as raw sentences.
std::vector<Premise> BuildPremises(const Document &doc, Strategy strategy,
                                   const FactiveLexicon &lexicon);

// Scores and aggregates one presupposition against prepared premises.
VerificationResult Verify(const Presupposition &p, const std::vector<Premise> &premises,
                          const VerifierConfig &cfg, const Scorer &scorer);

// BuildPremises for cfg.strategy followed by Verify.
VerificationResult HybridVerify(const Presupposition &p, const Document &doc,
                                const VerifierConfig &cfg, const Scorer &scorer,
                                const FactiveLexicon &lexicon);

using DocumentStore = std::unordered_map<std::string, Document>;

// One (presupposition, sentence) pair for entailment annotation.
struct PairExportRecord {
  std::string question_id;
  std::string presup_id;
  std::string presupposition;
  size_t sentence_index = 0;
  std::string premise;
};

// For each question and each of its presuppositions, `sample_n` sentences
// drawn uniformly without replacement from the linked document (all of
// them when the document is shorter). Deterministic given `seed`.
// Throws kMissingDocument for unresolvable questions.
std::vector<PairExportRecord> ExportPairs(const std::vector<Question> &questions,
                                          const DocumentStore &docs, size_t sample_n,
                                          uint64_t seed, const FactiveLexicon &lexicon,
                                          const GeneratorOptions &options = {});

}  // namespace presup

#endif  // PRESUP_VERIFY_H_

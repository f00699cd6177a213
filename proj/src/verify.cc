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

#include "presup/verify.h"

#include "presup/errors.h"
#include "presup/sampling.h"

namespace presup {

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSentenceNli: return "sentence-nli";
    case Strategy::kHybridDocPresups: return "hybrid-doc-presups";
    case Strategy::kCombined: return "combined";
  }
  return "unknown";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "sentence-nli") return Strategy::kSentenceNli;
  if (name == "hybrid-doc-presups") return Strategy::kHybridDocPresups;
  if (name == "combined") return Strategy::kCombined;
  throw Error(ErrorCode::kInputFormat, "unknown strategy '" + std::string(name) + "'");
}

void VerifierConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be >= 1");
  if (!(decision_threshold > 0.0 && decision_threshold < 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "decision threshold must lie in (0, 1)");
  }
}

std::vector<EntailmentScore> ScorePairs(const std::vector<Premise> &premises,
                                        const std::string &hypothesis, const Scorer &scorer,
                                        const VerifierConfig &cfg) {
  if (premises.empty()) return {};
  std::vector<PremiseHypothesis> pairs;
  pairs.reserve(premises.size());
  for (const Premise &premise : premises) pairs.push_back({premise.text, hypothesis});
  std::vector<double> probs = scorer.Score(pairs, cfg.mode);
  if (probs.size() != premises.size()) {
    throw Error(ErrorCode::kProtocolError, "scorer returned a misaligned score list");
  }
  std::vector<EntailmentScore> scores;
  scores.reserve(premises.size());
  for (size_t i = 0; i < premises.size(); ++i) {
    scores.push_back({premises[i].ref, probs[i], probs[i] >= cfg.decision_threshold});
  }
  return scores;
}

VerificationResult Aggregate(const std::vector<EntailmentScore> &scores,
                             const VerifierConfig &cfg, std::string presup_id) {
  VerificationResult result;
  result.presup_id = std::move(presup_id);
  result.k = cfg.k;
  result.strategy = cfg.strategy;
  result.scores = scores;
  for (const EntailmentScore &score : scores) {
    if (score.entails) result.supporting.push_back(score.premise);
  }
  result.verifiable = static_cast<int>(result.supporting.size()) >= cfg.k;
  return result;
}

std::vector<Premise> BuildPremises(const Document &doc, Strategy strategy,
                                   const FactiveLexicon &lexicon) {
  std::vector<Premise> premises;
  if (strategy != Strategy::kHybridDocPresups) {
    for (size_t i = 0; i < doc.sentences.size(); ++i) {
      premises.push_back({PremiseRef{doc.id, i, ""}, doc.sentences[i].text});
    }
  }
  if (strategy != Strategy::kSentenceNli) {
    GeneratorOptions options;
    options.declarative = true;
    for (size_t i = 0; i < doc.sentences.size(); ++i) {
      const Sentence &sentence = doc.sentences[i];
      if (!sentence.tree) continue;
      std::string prefix = doc.id + "-s" + std::to_string(i);
      auto matches = DetectTriggers(*sentence.tree, lexicon, options);
      for (Presupposition &p : Generate(*sentence.tree, matches, doc.id, prefix)) {
        premises.push_back({PremiseRef{doc.id, std::nullopt, p.id}, std::move(p.text)});
      }
    }
  }
  return premises;
}

VerificationResult Verify(const Presupposition &p, const std::vector<Premise> &premises,
                          const VerifierConfig &cfg, const Scorer &scorer) {
  cfg.Validate();
  return Aggregate(ScorePairs(premises, p.text, scorer, cfg), cfg, p.id);
}

VerificationResult HybridVerify(const Presupposition &p, const Document &doc,
                                const VerifierConfig &cfg, const Scorer &scorer,
                                const FactiveLexicon &lexicon) {
  return Verify(p, BuildPremises(doc, cfg.strategy, lexicon), cfg, scorer);
}

std::vector<PairExportRecord> ExportPairs(const std::vector<Question> &questions,
                                          const DocumentStore &docs, size_t sample_n,
                                          uint64_t seed, const FactiveLexicon &lexicon,
                                          const GeneratorOptions &options) {
  std::vector<PairExportRecord> records;
  for (const Question &question : questions) {
    auto it = docs.find(question.doc_id);
    if (it == docs.end()) {
      throw Error(ErrorCode::kMissingDocument, "question " + question.id +
                                                   " references missing document " +
                                                   question.doc_id);
    }
    const Document &doc = it->second;
    for (const Presupposition &p : GeneratePresuppositions(question, lexicon, options)) {
      auto sample = SampleWithoutReplacement(doc.sentences.size(), sample_n,
                                             DeriveSeed(seed, p.id));
      for (size_t index : sample) {
        records.push_back({question.id, p.id, p.text, index, doc.sentences[index].text});
      }
    }
  }
  return records;
}

}  // namespace presup

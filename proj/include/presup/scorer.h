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

#ifndef PRESUP_SCORER_H_
#define PRESUP_SCORER_H_

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "presup/lexicon.h"

namespace presup {

struct PremiseHypothesis {
  std::string premise;
  std::string hypothesis;
};

// "independent": each pair is judged on its own. "joint": all premises
// of a request share one hypothesis and a back-end may reason over them
// together (evidence-graph verifiers).
enum class ScoreMode { kIndependent, kJoint };

std::string_view ScoreModeName(ScoreMode mode);
ScoreMode ParseScoreMode(std::string_view name);

// Entailment scorer returning one probability in [0, 1] per pair, aligned
// with the input. Implementations must be safe to call concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::vector<double> Score(const std::vector<PremiseHypothesis> &pairs,
                                    ScoreMode mode) const = 0;
  virtual std::string Describe() const = 0;
};

// Lowercased alphanumeric tokens of `text`.
std::vector<std::string> LexicalTokens(std::string_view text);

// Distinct non-stopword tokens, in first-occurrence order.
std::vector<std::string> ContentTokens(std::string_view text, const WordList &stopwords);

// Hermetic baseline: fraction of the hypothesis' distinct content tokens
// that also occur in the premise. Zero when the hypothesis has no
// content tokens.
class LexicalScorer : public Scorer {
 public:
  LexicalScorer() : LexicalScorer(DefaultStopwords()) {}
  explicit LexicalScorer(WordList stopwords) : stopwords_(std::move(stopwords)) {}

  double Overlap(std::string_view premise, std::string_view hypothesis) const;

  std::vector<double> Score(const std::vector<PremiseHypothesis> &pairs,
                            ScoreMode mode) const override;
  std::string Describe() const override { return "builtin"; }

 private:
  WordList stopwords_;
};

// Client for an entailment service speaking the JSON wire protocol:
// POST <base>/v1/score with {"pairs":[...],"mode":...}. Connection
// failures and non-200 replies raise kScorerUnavailable; malformed
// replies raise kProtocolError.
class HttpScorer : public Scorer {
 public:
  explicit HttpScorer(std::string base_url, int timeout_seconds = 60);

  std::vector<double> Score(const std::vector<PremiseHypothesis> &pairs,
                            ScoreMode mode) const override;
  std::string Describe() const override { return base_url_; }

 private:
  std::string base_url_;
  std::string host_;   // scheme://host:port
  std::string prefix_; // path prefix, no trailing slash
  int timeout_seconds_;
};

// "builtin" or an http(s) URL.
std::unique_ptr<Scorer> MakeScorer(const std::string &descriptor);

// Wire format helpers.
std::string EncodeScoreRequest(const std::vector<PremiseHypothesis> &pairs,
                               ScoreMode mode);
struct ScoreRequest {
  std::vector<PremiseHypothesis> pairs;
  ScoreMode mode = ScoreMode::kIndependent;
};
ScoreRequest DecodeScoreRequest(std::string_view body);
std::string EncodeScoreResponse(const std::vector<double> &scores);
std::vector<double> DecodeScoreResponse(std::string_view body, size_t expected);

// Offline variant of the protocol: one request object per input line, one
// response object per output line. Malformed lines produce
// {"error": "..."} and processing continues. Returns the number of
// malformed lines.
size_t ServeScoreLines(std::istream &in, std::ostream &out, const Scorer &scorer);

}  // namespace presup

#endif  // PRESUP_SCORER_H_

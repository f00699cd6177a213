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

#ifndef PRESUP_EVALUATE_H_
#define PRESUP_EVALUATE_H_

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace presup {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;  // gold count
};

// Binary verifiability metrics. Class index 1 is "verifiable".
struct EvalReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  ClassMetrics verifiable;
  ClassMetrics not_verifiable;
  size_t n = 0;
  // confusion[gold][predicted]
  std::array<std::array<size_t, 2>, 2> confusion{};
};

// Precision, recall and F1 treat 0/0 as 0; macro F1 is the unweighted
// mean of both classes.
EvalReport EvaluateLabels(const std::vector<bool> &gold, const std::vector<bool> &predicted);

// Scores (id, prediction) pairs against gold labels keyed by id. Throws
// kMissingGold naming every unmatched id.
EvalReport Evaluate(const std::vector<std::pair<std::string, bool>> &predictions,
                    const std::unordered_map<std::string, bool> &gold);

}  // namespace presup

#endif  // PRESUP_EVALUATE_H_

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

#include "presup/evaluate.h"

#include <stdexcept>

#include "presup/errors.h"

namespace presup {
namespace {

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

ClassMetrics MetricsFor(const std::array<std::array<size_t, 2>, 2> &c, int cls) {
  int other = 1 - cls;
  size_t tp = c[cls][cls];
  size_t fp = c[other][cls];
  size_t fn = c[cls][other];
  ClassMetrics m;
  m.precision = Ratio(tp, tp + fp);
  m.recall = Ratio(tp, tp + fn);
  m.f1 = (m.precision + m.recall) == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  m.support = tp + fn;
  return m;
}

}  // namespace

EvalReport EvaluateLabels(const std::vector<bool> &gold, const std::vector<bool> &predicted) {
  if (gold.size() != predicted.size()) {
    throw std::invalid_argument("gold and predicted label counts differ");
  }
  EvalReport report;
  report.n = gold.size();
  for (size_t i = 0; i < gold.size(); ++i) {
    ++report.confusion[gold[i] ? 1 : 0][predicted[i] ? 1 : 0];
  }
  report.accuracy = Ratio(report.confusion[0][0] + report.confusion[1][1], report.n);
  report.verifiable = MetricsFor(report.confusion, 1);
  report.not_verifiable = MetricsFor(report.confusion, 0);
  report.macro_f1 = (report.verifiable.f1 + report.not_verifiable.f1) / 2.0;
  return report;
}

EvalReport Evaluate(const std::vector<std::pair<std::string, bool>> &predictions,
                    const std::unordered_map<std::string, bool> &gold) {
  std::vector<bool> gold_labels;
  std::vector<bool> predicted;
  std::string missing;
  for (const auto &[id, label] : predictions) {
    auto it = gold.find(id);
    if (it == gold.end()) {
      missing += missing.empty() ? id : ", " + id;
      continue;
    }
    gold_labels.push_back(it->second);
    predicted.push_back(label);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingGold, "no gold label for: " + missing);
  }
  return EvaluateLabels(gold_labels, predicted);
}

}  // namespace presup

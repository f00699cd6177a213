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

#include "presup/explain.h"

#include <algorithm>
#include <tuple>

#include "presup/errors.h"

namespace presup {

std::string_view ExplanationTemplateName(ExplanationTemplate t) {
  return t == ExplanationTemplate::kUnclear ? "unclear" : "could-not-verify";
}

std::optional<Explanation> Explain(const Presupposition &p, const VerificationResult &v) {
  if (v.presup_id != p.id) {
    throw Error(ErrorCode::kMismatchedIds,
                "verification " + v.presup_id + " does not belong to " + p.id);
  }
  if (v.verifiable) return std::nullopt;

  Explanation e;
  e.question_id = p.question_id;
  e.presup_id = p.id;
  e.template_kind = p.template_id == templates::kDefiniteUnique
                        ? ExplanationTemplate::kUnclear
                        : ExplanationTemplate::kCouldNotVerify;
  std::string_view lead = e.template_kind == ExplanationTemplate::kUnclear
                              ? " it is unclear that "
                              : " we could not verify that ";
  e.text = std::string(kExplanationPrefix) + std::string(lead) + p.text + ".";
  if (!p.source_spans.empty()) {
    e.source_start = std::min_element(p.source_spans.begin(), p.source_spans.end(),
                                      [](const Span &a, const Span &b) {
                                        return a.start < b.start;
                                      })->start;
  }
  return e;
}

std::optional<Explanation> SelectPrimaryExplanation(
    const std::vector<Explanation> &explanations) {
  if (explanations.empty()) return std::nullopt;
  auto key = [](const Explanation &e) {
    return std::tie(e.template_kind, e.source_start, e.presup_id, e.text);
  };
  return *std::min_element(explanations.begin(), explanations.end(),
                           [&key](const Explanation &a, const Explanation &b) {
                             return key(a) < key(b);
                           });
}

}  // namespace presup

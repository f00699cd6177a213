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

#ifndef PRESUP_EXPLAIN_H_
#define PRESUP_EXPLAIN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presup/presupgen.h"
#include "presup/verify.h"

namespace presup {

enum class ExplanationTemplate { kCouldNotVerify, kUnclear };

std::string_view ExplanationTemplateName(ExplanationTemplate t);

struct Explanation {
  std::string question_id;
  std::string presup_id;
  ExplanationTemplate template_kind = ExplanationTemplate::kCouldNotVerify;
  std::string text;
  // Start of the earliest source span of the presupposition; ordering key.
  size_t source_start = 0;
};

inline constexpr std::string_view kExplanationPrefix = "This question is unanswerable because";

// None when the presupposition was verified. Contextual-uniqueness
// presuppositions use "it is unclear that"; all others use "we could not
// verify that". Throws kMismatchedIds if v does not belong to p.
std::optional<Explanation> Explain(const Presupposition &p, const VerificationResult &v);

// Prefers "could not verify" explanations, then the earliest source span,
// then presup id. Independent of input order.
std::optional<Explanation> SelectPrimaryExplanation(const std::vector<Explanation> &explanations);

}  // namespace presup

#endif  // PRESUP_EXPLAIN_H_

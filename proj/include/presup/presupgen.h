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

#ifndef PRESUP_PRESUPGEN_H_
#define PRESUP_PRESUPGEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "presup/lexicon.h"
#include "presup/treebank.h"

namespace presup {

enum class TriggerKind {
  kWhWord,
  kDefiniteArticle,
  kFactiveVerb,
  kPossessiveS,
  kTemporalAdjunct,
  kCounterfactual,
};

enum class WhWord { kNone, kWho, kWhat, kWhere, kWhen, kWhy, kHow, kWhich };

std::string_view TriggerKindName(TriggerKind kind);
std::string_view WhWordName(WhWord wh);

// Template identifiers. Each row of the generation table has its own id.
namespace templates {
inline constexpr std::string_view kWho = "wh_who";
inline constexpr std::string_view kWhich = "wh_which";
inline constexpr std::string_view kWhere = "wh_where";
inline constexpr std::string_view kWhat = "wh_what";
inline constexpr std::string_view kWhen = "wh_when";
inline constexpr std::string_view kHow = "wh_how";
inline constexpr std::string_view kHowWay = "wh_how_way";
inline constexpr std::string_view kWhy = "wh_why";
inline constexpr std::string_view kWhyReason = "wh_why_reason";
inline constexpr std::string_view kDefiniteExists = "def_exists";
inline constexpr std::string_view kDefiniteUnique = "def_unique";
inline constexpr std::string_view kPossessive = "poss_has";
inline constexpr std::string_view kFactive = "factive_complement";
inline constexpr std::string_view kTemporal = "temporal_clause";
inline constexpr std::string_view kCounterfactual = "counterfactual_negation";
}  // namespace templates

// A constituent extracted for a template, with the token span whose text
// fills the slot.
struct PayloadItem {
  std::string role;
  NodePath node;
  Span span;
};

struct TriggerMatch {
  TriggerKind kind;
  WhWord wh = WhWord::kNone;
  // The trigger word (wh-word, "the", "'s", verb, subordinator, "if").
  NodePath anchor;
  // Roles by kind:
  //   wh:             "wh_phrase", "clause"
  //   definite:       "np"
  //   possessive:     "possessor", "possessee"
  //   factive:        "complement"
  //   temporal:       "clause"
  //   counterfactual: "antecedent"
  std::vector<PayloadItem> payload;
};

struct GeneratorOptions {
  // Disables the wh templates; used for declarative document sentences.
  bool declarative = false;
  // Suppress triggers embedded in the complement of a non-factive verb
  // ("who does pip believe is estella's mother"). Off by default.
  bool projection_guard = false;
  // Skip "the" + single proper noun ("the US").
  bool skip_proper_noun_definites = true;
};

struct Presupposition {
  std::string id;
  std::string question_id;
  std::string text;
  TriggerKind kind;
  std::string template_id;
  std::vector<Span> source_spans;
};

// All trigger matches in `tree`, ordered by the pre-order rank of their
// anchors.
std::vector<TriggerMatch> DetectTriggers(const ParseTree &tree,
                                         const FactiveLexicon &lexicon,
                                         const GeneratorOptions &options = {});
std::vector<TriggerMatch> DetectTriggers(const Question &question,
                                         const FactiveLexicon &lexicon,
                                         const GeneratorOptions &options = {});

// Turns the interrogative clause left after wh-fronting (an SQ node) into
// a declarative string: subject-auxiliary inversion is undone and
// do-support is resolved by re-inflecting the main verb. `gap_filler`,
// when given, is placed right after a non-do auxiliary.
//
// Throws kNoSubjectFound when the clause shape is not recognized.
std::string Declarativize(const ParseTree &clause,
                          std::string_view gap_filler = "");

// Applies the template of each match. Matches whose clause cannot be
// declarativized are skipped. Ids are "<id_prefix>-p<n>".
std::vector<Presupposition> Generate(const ParseTree &tree,
                                     const std::vector<TriggerMatch> &matches,
                                     const std::string &owner_id,
                                     const std::string &id_prefix);
std::vector<Presupposition> Generate(const Question &question,
                                     const std::vector<TriggerMatch> &matches);

// DetectTriggers followed by Generate.
std::vector<Presupposition> GeneratePresuppositions(
    const Question &question, const FactiveLexicon &lexicon,
    const GeneratorOptions &options = {});

}  // namespace presup

#endif  // PRESUP_PRESUPGEN_H_

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

#ifndef PRESUP_CORPUS_H_
#define PRESUP_CORPUS_H_

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "presup/augment.h"
#include "presup/explain.h"
#include "presup/presupgen.h"
#include "presup/treebank.h"
#include "presup/verify.h"

namespace presup {

// JSONL readers. Errors carry "<path>:<line>:" and code kInputFormat
// (or the underlying treebank error code for bad parses).
std::vector<nlohmann::ordered_json> ReadJsonl(const std::string &path);

// {id, text, ptb, doc_id?}
std::vector<Question> ReadQuestions(const std::string &path);
Question QuestionFromJson(const nlohmann::ordered_json &record);

// {id, title, sentences: [{text, ptb?}]}
std::vector<Document> ReadDocuments(const std::string &path);
Document DocumentFromJson(const nlohmann::ordered_json &record);
DocumentStore MakeDocumentStore(std::vector<Document> docs);

void WriteJsonl(const std::string &path, const std::vector<nlohmann::ordered_json> &records);

nlohmann::ordered_json ToJson(const Presupposition &p);
Presupposition PresuppositionFromJson(const nlohmann::ordered_json &record);

nlohmann::ordered_json ToJson(const PremiseRef &ref);
PremiseRef PremiseRefFromJson(const nlohmann::ordered_json &record);

nlohmann::ordered_json ToJson(const VerificationResult &v);
VerificationResult VerificationFromJson(const nlohmann::ordered_json &record);

nlohmann::ordered_json ToJson(const Explanation &e);

nlohmann::ordered_json FlatToJson(const std::string &question_id, const FlatInput &flat);
nlohmann::ordered_json StructuredToJson(const std::string &question_id,
                                const StructuredLayout &layout);

// Record id for evaluation: "presup_id", else "id".
std::string RecordId(const nlohmann::ordered_json &record);

}  // namespace presup

#endif  // PRESUP_CORPUS_H_

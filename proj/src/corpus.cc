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

#include "presup/corpus.h"

#include <fstream>

#include "presup/errors.h"

namespace presup {

using json = nlohmann::ordered_json;

namespace {

const json &Field(const json &record, const char *name) {
  if (!record.is_object() || !record.contains(name)) {
    throw Error(ErrorCode::kInputFormat, std::string("missing field '") + name + "'");
  }
  return record[name];
}

std::string StringField(const json &record, const char *name) {
  const json &value = Field(record, name);
  if (!value.is_string()) {
    throw Error(ErrorCode::kInputFormat, std::string("field '") + name + "' must be a string");
  }
  return value.get<std::string>();
}

// Runs `fn` on every record, prefixing errors with the source location.
template <typename T, typename Fn>
std::vector<T> ReadRecords(const std::string &path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<T> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json record = json::parse(line);
      out.push_back(fn(record));
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kInputFormat,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error &e) {
      throw Error(e.code(), path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

json SpanJson(const Span &span) { return json::array({span.start, span.end}); }

}  // namespace

std::vector<json> ReadJsonl(const std::string &path) {
  return ReadRecords<json>(path, [](const json &record) { return record; });
}

Question QuestionFromJson(const json &record) {
  std::string doc_id;
  if (record.contains("doc_id")) doc_id = StringField(record, "doc_id");
  return MakeQuestion(StringField(record, "id"), StringField(record, "text"),
                      StringField(record, "ptb"), doc_id);
}

std::vector<Question> ReadQuestions(const std::string &path) {
  return ReadRecords<Question>(path, QuestionFromJson);
}

Document DocumentFromJson(const json &record) {
  Document doc;
  doc.id = StringField(record, "id");
  if (record.contains("title")) doc.title = StringField(record, "title");
  const json &sentences = Field(record, "sentences");
  if (!sentences.is_array()) {
    throw Error(ErrorCode::kInputFormat, "field 'sentences' must be an array");
  }
  for (const json &s : sentences) {
    Sentence sentence;
    sentence.text = StringField(s, "text");
    if (s.contains("ptb") && !s["ptb"].is_null()) {
      sentence.tree = ParsePtb(StringField(s, "ptb"));
    }
    doc.sentences.push_back(std::move(sentence));
  }
  ValidateDocument(doc);
  return doc;
}

std::vector<Document> ReadDocuments(const std::string &path) {
  return ReadRecords<Document>(path, DocumentFromJson);
}

DocumentStore MakeDocumentStore(std::vector<Document> docs) {
  DocumentStore store;
  for (Document &doc : docs) {
    std::string id = doc.id;
    if (!store.emplace(id, std::move(doc)).second) {
      throw Error(ErrorCode::kInputFormat, "duplicate document id " + id);
    }
  }
  return store;
}

void WriteJsonl(const std::string &path, const std::vector<json> &records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  for (const json &record : records) out << record.dump() << "\n";
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

json ToJson(const Presupposition &p) {
  json spans = json::array();
  for (const Span &span : p.source_spans) spans.push_back(SpanJson(span));
  return {{"presup_id", p.id},
          {"question_id", p.question_id},
          {"text", p.text},
          {"kind", std::string(TriggerKindName(p.kind))},
          {"template_id", p.template_id},
          {"source_spans", spans}};
}

Presupposition PresuppositionFromJson(const json &record) {
  Presupposition p;
  p.id = StringField(record, "presup_id");
  p.question_id = StringField(record, "question_id");
  p.text = StringField(record, "text");
  std::string kind = record.contains("kind") ? StringField(record, "kind") : "wh_word";
  bool known = false;
  for (TriggerKind k : {TriggerKind::kWhWord, TriggerKind::kDefiniteArticle,
                        TriggerKind::kFactiveVerb, TriggerKind::kPossessiveS,
                        TriggerKind::kTemporalAdjunct, TriggerKind::kCounterfactual}) {
    if (TriggerKindName(k) == kind) {
      p.kind = k;
      known = true;
    }
  }
  if (!known) throw Error(ErrorCode::kInputFormat, "unknown trigger kind '" + kind + "'");
  if (record.contains("template_id")) p.template_id = StringField(record, "template_id");
  if (record.contains("source_spans")) {
    for (const json &span : record["source_spans"]) {
      if (!span.is_array() || span.size() != 2) {
        throw Error(ErrorCode::kInputFormat, "source span must be [start, end]");
      }
      p.source_spans.push_back({span[0].get<size_t>(), span[1].get<size_t>()});
    }
  }
  return p;
}

json ToJson(const PremiseRef &ref) {
  json out = {{"doc", ref.doc_id}};
  if (ref.sentence) {
    out["sentence"] = *ref.sentence;
  } else {
    out["presup"] = ref.presup_id;
  }
  return out;
}

PremiseRef PremiseRefFromJson(const json &record) {
  PremiseRef ref;
  ref.doc_id = StringField(record, "doc");
  if (record.contains("sentence")) {
    ref.sentence = record["sentence"].get<size_t>();
  } else {
    ref.presup_id = StringField(record, "presup");
  }
  return ref;
}

json ToJson(const VerificationResult &v) {
  json supporting = json::array();
  for (const PremiseRef &ref : v.supporting) supporting.push_back(ToJson(ref));
  json scores = json::array();
  for (const EntailmentScore &s : v.scores) {
    scores.push_back({{"premise", ToJson(s.premise)},
                      {"entail_prob", s.entail_prob},
                      {"label", s.entails ? "entail" : "not-entail"}});
  }
  return {{"presup_id", v.presup_id},
          {"verifiable", v.verifiable},
          {"k", v.k},
          {"strategy", std::string(StrategyName(v.strategy))},
          {"supporting", supporting},
          {"scores", scores}};
}

VerificationResult VerificationFromJson(const json &record) {
  VerificationResult v;
  v.presup_id = StringField(record, "presup_id");
  const json &verifiable = Field(record, "verifiable");
  if (!verifiable.is_boolean()) {
    throw Error(ErrorCode::kInputFormat, "field 'verifiable' must be a boolean");
  }
  v.verifiable = verifiable.get<bool>();
  if (record.contains("k")) v.k = record["k"].get<int>();
  if (record.contains("strategy")) v.strategy = ParseStrategy(StringField(record, "strategy"));
  if (record.contains("supporting")) {
    for (const json &ref : record["supporting"]) v.supporting.push_back(PremiseRefFromJson(ref));
  }
  if (record.contains("scores")) {
    for (const json &s : record["scores"]) {
      v.scores.push_back({PremiseRefFromJson(Field(s, "premise")),
                          Field(s, "entail_prob").get<double>(),
                          StringField(s, "label") == "entail"});
    }
  }
  return v;
}

json ToJson(const Explanation &e) {
  return {{"question_id", e.question_id},
          {"presup_id", e.presup_id},
          {"template", std::string(ExplanationTemplateName(e.template_kind))},
          {"text", e.text}};
}

json FlatToJson(const std::string &question_id, const FlatInput &flat) {
  return {{"question_id", question_id}, {"token_ids", flat.token_ids}};
}

json StructuredToJson(const std::string &question_id, const StructuredLayout &layout) {
  json global = json::array();
  for (const GlobalSlot &slot : layout.global) {
    global.push_back({{"kind", std::string(SlotKindName(slot.kind))}, {"value", slot.value}});
  }
  json segments = json::array();
  for (const Segment &segment : layout.segments) {
    segments.push_back({{"kind", std::string(SlotKindName(segment.kind))},
                        {"token_ids", segment.token_ids}});
  }
  json mask = json::array();
  for (const AttentionRule &rule : layout.mask) {
    mask.push_back({{"from", SpanJson(rule.from)}, {"to", SpanJson(rule.to)}});
  }
  return {{"question_id", question_id},
          {"global", global},
          {"segments", segments},
          {"mask", mask}};
}

std::string RecordId(const json &record) {
  if (record.contains("presup_id")) return StringField(record, "presup_id");
  return StringField(record, "id");
}

}  // namespace presup

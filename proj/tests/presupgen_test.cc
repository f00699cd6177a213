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

#include "presup/presupgen.h"

#include <algorithm>
#include <fstream>

#include <doctest.h>
#include <json.hpp>

#include "presup/corpus.h"
#include "presup/errors.h"
#include "test_util.h"

namespace presup {
namespace {

using testing::FixturePath;

std::vector<std::string> Texts(const std::vector<Presupposition> &ps) {
  std::vector<std::string> out;
  for (const Presupposition &p : ps) out.push_back(p.text);
  return out;
}

bool Contains(const std::vector<std::string> &texts, const std::string &text) {
  return std::find(texts.begin(), texts.end(), text) != texts.end();
}

std::vector<Presupposition> Gen(const std::string &text, const std::string &ptb,
                                GeneratorOptions options = {}) {
  return GeneratePresuppositions(MakeQuestion("q", text, ptb), FactiveLexicon::Default(),
                                 options);
}

std::vector<TriggerKind> Kinds(const std::vector<TriggerMatch> &matches) {
  std::vector<TriggerKind> out;
  for (const TriggerMatch &m : matches) out.push_back(m.kind);
  return out;
}

TEST_CASE("generation table golden rows") {
  std::vector<Question> questions = ReadQuestions(FixturePath("golden/questions.jsonl"));
  std::unordered_map<std::string, std::vector<Presupposition>> generated;
  for (const Question &q : questions) {
    generated[q.id] = GeneratePresuppositions(q, FactiveLexicon::Default());
  }
  size_t rows = 0;
  for (const auto &row : ReadJsonl(FixturePath("golden/expected.jsonl"))) {
    ++rows;
    const std::string qid = row["question_id"];
    const std::string text = row["text"];
    const std::string template_id = row["template_id"];
    const auto &ps = generated.at(qid);
    auto it = std::find_if(ps.begin(), ps.end(),
                           [&](const Presupposition &p) { return p.template_id == template_id && p.text == text; });
    CHECK_MESSAGE(it != ps.end(), qid << ": missing " << template_id << " \"" << text << "\"");
  }
  CHECK(rows == 15);
}

TEST_CASE("detect triggers on the possessive example") {
  Question q = MakeQuestion(
      "q", "what do the colors on ecuador's flag mean",
      "(SBARQ (WHNP (WP what)) (SQ (VBP do) (NP (NP (DT the) (NNS colors)) (PP (IN on) "
      "(NP (NP (NNP ecuador) (POS 's)) (NN flag)))) (VP (VB mean))))");
  auto matches = DetectTriggers(q, FactiveLexicon::Default());
  CHECK(Kinds(matches) == std::vector<TriggerKind>{TriggerKind::kWhWord,
                                                   TriggerKind::kDefiniteArticle,
                                                   TriggerKind::kPossessiveS});
  CHECK(matches[0].wh == WhWord::kWhat);
  REQUIRE(matches[1].payload.size() == 1);
  CHECK(SpanText(q.tree, matches[1].payload[0].span) == "colors on ecuador's flag");
  REQUIRE(matches[2].payload.size() == 2);
  CHECK(SpanText(q.tree, matches[2].payload[0].span) == "ecuador");
  CHECK(SpanText(q.tree, matches[2].payload[1].span) == "flag");
}

TEST_CASE("detect triggers on the temporal example") {
  Question q = MakeQuestion(
      "q", "how old was macbeth when he died in the play",
      "(SBARQ (WHADJP (WRB how) (JJ old)) (SQ (VBD was) (NP (NNP macbeth)) (SBAR (WHADVP "
      "(WRB when)) (S (NP (PRP he)) (VP (VBD died) (PP (IN in) (NP (DT the) (NN play))))))))");
  auto matches = DetectTriggers(q, FactiveLexicon::Default());
  CHECK(Kinds(matches) == std::vector<TriggerKind>{TriggerKind::kWhWord,
                                                   TriggerKind::kTemporalAdjunct,
                                                   TriggerKind::kDefiniteArticle});
  CHECK(matches[0].wh == WhWord::kHow);
  CHECK(SpanText(q.tree, matches[1].payload[0].span) == "he died in the play");
}

TEST_CASE("no triggers") {
  Question q = MakeQuestion("q", "list of films",
                            "(NP (NP (NN list)) (PP (IN of) (NP (NNS films))))");
  CHECK(DetectTriggers(q, FactiveLexicon::Default()).empty());
  CHECK(GeneratePresuppositions(q, FactiveLexicon::Default()).empty());
}

TEST_CASE("declarativize") {
  CHECK(Declarativize(ParsePtb("(SQ (VBD was) (NP (DT the) (NN jury) (NN system)) (VP (VBN "
                               "abolished) (PP (IN in) (NP (NNP india)))))")) ==
        "the jury system was abolished in india");
  CHECK(Declarativize(ParsePtb("(SQ (VBD did) (NP (NN orchestra)) (VP (VB change) (PP (IN in) "
                               "(NP (DT the) (JJ romantic) (NN period)))))")) ==
        "orchestra changed in the romantic period");
  CHECK(Declarativize(ParsePtb("(SQ (VBD did) (NP (NP (DT the) (NN treaty)) (PP (IN of) (NP "
                               "(NNP paris)))) (VP (VB do) (PP (IN for) (NP (DT the) (NNP "
                               "US)))))")) == "the treaty of paris did for the US");
  CHECK(Declarativize(ParsePtb("(SQ (VBZ does) (NP (NNP back) (TO to) (DT the) (NNP future) "
                               "(NNP part) (CD 4)) (VP (VB come) (PRT (RP out))))")) ==
        "back to the future part 4 comes out");
  CHECK(Declarativize(ParsePtb("(SQ (VBP do) (NP (NNS cats)) (VP (VB sleep)))")) ==
        "cats sleep");
  CHECK(Declarativize(ParsePtb("(SQ (MD can) (NP (NNS cats)) (VP (VB swim)))")) ==
        "cats can swim");
  CHECK_THROWS_AS(Declarativize(ParsePtb("(SQ (VBD did) (VP (VB go)))")), Error);
}

TEST_CASE("subject questions with a flattened clause") {
  CHECK(Contains(Texts(Gen("who won the war",
                           "(SBARQ (WHNP (WP who)) (SQ (VBD won) (NP (DT the) (NN war))))")),
                 "there is someone that won the war"));
  CHECK(Contains(Texts(Gen("who would win", "(SBARQ (WHNP (WP who)) (SQ (MD would) (VP (VB win))))")),
                 "there is someone that would win"));
  CHECK(Contains(Texts(Gen("who didn't go",
                           "(SBARQ (WHNP (WP who)) (SQ (VBD did) (RB n't) (VP (VB go))))")),
                 "there is someone that didn't go"));
}

TEST_CASE("negated do-support keeps the auxiliary") {
  auto texts = Texts(Gen("why didn't the cat sleep",
                         "(SBARQ (WHADVP (WRB why)) (SQ (VBD did) (RB n't) (NP (DT the) (NN "
                         "cat)) (VP (VB sleep))))"));
  CHECK(Contains(texts, "there is some reason that the cat didn't sleep"));
}

TEST_CASE("which with an object gap") {
  auto texts = Texts(Gen("which city did napoleon visit",
                         "(SBARQ (WHNP (WDT which) (NN city)) (SQ (VBD did) (NP (NNP "
                         "napoleon)) (VP (VB visit))))"));
  CHECK(Contains(texts, "napoleon visited some city"));
}

TEST_CASE("factive with a particle") {
  auto texts = Texts(Gen("when did they find out that pluto is not a planet",
                         "(SBARQ (WHADVP (WRB when)) (SQ (VBD did) (NP (PRP they)) (VP (VB "
                         "find) (PRT (RP out)) (SBAR (IN that) (S (NP (NNP pluto)) (VP (VBZ is) "
                         "(RB not) (NP (DT a) (NN planet))))))))"));
  CHECK(Contains(texts, "pluto is not a planet"));
}

TEST_CASE("non-factive verbs do not trigger") {
  auto ps = Gen("who believes that the earth is flat",
                "(SBARQ (WHNP (WP who)) (SQ (VP (VBZ believes) (SBAR (IN that) (S (NP (DT "
                "the) (NN earth)) (VP (VBZ is) (ADJP (JJ flat))))))))");
  for (const Presupposition &p : ps) CHECK(p.kind != TriggerKind::kFactiveVerb);
}

TEST_CASE("counterfactual with past perfect") {
  auto texts = Texts(Gen("what would have happened if germany had won the war",
                         "(SBARQ (WHNP (WP what)) (SQ (VP (MD would) (VP (VB have) (VP (VBN "
                         "happened) (SBAR (IN if) (S (NP (NNP germany)) (VP (VBD had) (VP (VBN "
                         "won) (NP (DT the) (NN war)))))))))))"));
  CHECK(Contains(texts, "it is not true that germany won the war"));
}

TEST_CASE("plain conditional is not counterfactual") {
  auto ps = Gen("what happens if it rains",
                "(SBARQ (WHNP (WP what)) (SQ (VP (VBZ happens) (SBAR (IN if) (S (NP (PRP "
                "it)) (VP (VBZ rains)))))))");
  for (const Presupposition &p : ps) CHECK(p.kind != TriggerKind::kCounterfactual);
}

TEST_CASE("temporal prepositional phrase") {
  auto texts = Texts(Gen("who ruled france during the war",
                         "(SBARQ (WHNP (WP who)) (SQ (VP (VBD ruled) (NP (NNP france)) (PP (IN "
                         "during) (NP (DT the) (NN war))))))"));
  CHECK(Contains(texts, "the war"));
}

TEST_CASE("definite skips a single proper noun unless configured") {
  std::string text = "what did the treaty of paris do for the US";
  std::string ptb =
      "(SBARQ (WHNP (WP what)) (SQ (VBD did) (NP (NP (DT the) (NN treaty)) (PP (IN of) (NP "
      "(NNP paris)))) (VP (VB do) (PP (IN for) (NP (DT the) (NNP US))))))";
  CHECK_FALSE(Contains(Texts(Gen(text, ptb)), "'US' exists"));
  GeneratorOptions options;
  options.skip_proper_noun_definites = false;
  CHECK(Contains(Texts(Gen(text, ptb, options)), "'US' exists"));
}

TEST_CASE("definite scope stops at a relative clause") {
  auto texts = Texts(Gen("who wrote the song that won the award",
                         "(SBARQ (WHNP (WP who)) (SQ (VP (VBD wrote) (NP (NP (DT the) (NN song)) "
                         "(SBAR (WHNP (WDT that)) (S (VP (VBD won) (NP (DT the) (NN "
                         "award)))))))))"));
  CHECK(Contains(texts, "'song' exists"));
  CHECK(Contains(texts, "'award' is contextually unique"));
}

TEST_CASE("projection guard") {
  std::string text = "who does pip believe is estella's mother";
  std::string ptb =
      "(SBARQ (WHNP (WP who)) (SQ (VBZ does) (NP (NNP pip)) (VP (VB believe) (SBAR (S (VP (VBZ "
      "is) (NP (NP (NNP estella) (POS 's)) (NN mother))))))))";
  CHECK(Contains(Texts(Gen(text, ptb)), "'estella' has 'mother'"));
  GeneratorOptions guarded;
  guarded.projection_guard = true;
  auto ps = Gen(text, ptb, guarded);
  CHECK_FALSE(Contains(Texts(ps), "'estella' has 'mother'"));
  CHECK(std::any_of(ps.begin(), ps.end(),
                    [](const Presupposition &p) { return p.kind == TriggerKind::kWhWord; }));
}

TEST_CASE("declarative mode drops wh templates") {
  GeneratorOptions options;
  options.declarative = true;
  auto ps = Gen("who sings it's a hard knock life",
                "(SBARQ (WHNP (WP who)) (SQ (VP (VBZ sings) (S (NP (PRP it)) (VP (VBZ 's) (NP "
                "(DT a) (JJ hard) (NN knock) (NN life)))))))",
                options);
  CHECK(ps.empty());
}

TEST_CASE("ids are stable and sequential") {
  auto ps = Gen("when is the year of the cat in chinese zodiac",
                "(SBARQ (WHADVP (WRB when)) (SQ (VBZ is) (NP (NP (DT the) (NN year)) (PP (IN "
                "of) (NP (NP (DT the) (NN cat)) (PP (IN in) (NP (JJ chinese) (NN zodiac))))))))");
  REQUIRE(ps.size() == 5);
  for (size_t i = 0; i < ps.size(); ++i) {
    CHECK(ps[i].id == "q-p" + std::to_string(i));
    CHECK(ps[i].question_id == "q");
  }
}

// Properties over the golden questions plus a few extra shapes.
std::vector<Question> PropertyCorpus() {
  std::vector<Question> qs = ReadQuestions(FixturePath("golden/questions.jsonl"));
  qs.push_back(MakeQuestion("x1", "who wrote the song that won the award",
                            "(SBARQ (WHNP (WP who)) (SQ (VP (VBD wrote) (NP (NP (DT the) (NN "
                            "song)) (SBAR (WHNP (WDT that)) (S (VP (VBD won) (NP (DT the) (NN "
                            "award)))))))))"));
  qs.push_back(MakeQuestion("x2", "where did the king of france live before the war",
                            "(SBARQ (WHADVP (WRB where)) (SQ (VBD did) (NP (NP (DT the) (NN "
                            "king)) (PP (IN of) (NP (NNP france)))) (VP (VB live) (PP (IN "
                            "before) (NP (DT the) (NN war))))))"));
  return qs;
}

bool IsWhQuestion(const ParseTree &tree) {
  return !FindNodes(tree, [](const ParseTree &n) { return n.label() == "SBARQ"; }).empty();
}

TEST_CASE("property: wh-questions own at least one presupposition") {
  for (const Question &q : PropertyCorpus()) {
    if (!IsWhQuestion(q.tree)) continue;
    auto ps = GeneratePresuppositions(q, FactiveLexicon::Default());
    CHECK_MESSAGE(std::any_of(ps.begin(), ps.end(),
                              [](const Presupposition &p) { return p.kind == TriggerKind::kWhWord; }),
                  q.id);
  }
}

TEST_CASE("property: each definite match yields exists and unique") {
  for (const Question &q : PropertyCorpus()) {
    auto matches = DetectTriggers(q, FactiveLexicon::Default());
    auto ps = Generate(q, matches);
    size_t definites = std::count_if(matches.begin(), matches.end(), [](const TriggerMatch &m) {
      return m.kind == TriggerKind::kDefiniteArticle;
    });
    size_t exists = 0, unique = 0;
    for (const Presupposition &p : ps) {
      exists += p.template_id == templates::kDefiniteExists;
      unique += p.template_id == templates::kDefiniteUnique;
    }
    CHECK(exists == definites);
    CHECK(unique == definites);
  }
}

TEST_CASE("property: payload yields are substrings of the question") {
  for (const Question &q : PropertyCorpus()) {
    for (const TriggerMatch &m : DetectTriggers(q, FactiveLexicon::Default())) {
      for (const PayloadItem &item : m.payload) {
        CHECK(q.tree.span().Contains(item.span));
        CHECK(q.text.find(SpanText(q.tree, item.span)) != std::string::npos);
      }
    }
  }
}

TEST_CASE("property: non-wh texts contain their payload yields") {
  for (const Question &q : PropertyCorpus()) {
    for (const Presupposition &p : GeneratePresuppositions(q, FactiveLexicon::Default())) {
      CHECK_FALSE(p.text.empty());
      if (p.kind == TriggerKind::kWhWord || p.kind == TriggerKind::kCounterfactual) continue;
      for (const Span &span : p.source_spans) {
        CHECK_MESSAGE(p.text.find(SpanText(q.tree, span)) != std::string::npos, p.text);
      }
    }
  }
}

TEST_CASE("property: generation is deterministic") {
  for (const Question &q : PropertyCorpus()) {
    auto a = GeneratePresuppositions(q, FactiveLexicon::Default());
    auto b = GeneratePresuppositions(q, FactiveLexicon::Default());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(ToJson(a[i]).dump() == ToJson(b[i]).dump());
  }
}

TEST_CASE("property: matches are in document order") {
  for (const Question &q : PropertyCorpus()) {
    auto matches = DetectTriggers(q, FactiveLexicon::Default());
    for (size_t i = 1; i < matches.size(); ++i) {
      CHECK(PreorderRank(q.tree, matches[i - 1].anchor) <= PreorderRank(q.tree, matches[i].anchor));
    }
  }
}

}  // namespace
}  // namespace presup

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

#include <algorithm>

#include <doctest.h>

#include "presup/errors.h"
#include "test_util.h"

namespace presup {
namespace {

using testing::Gen;

// Scorer returning fixed probabilities by premise text.
class TableScorer : public Scorer {
 public:
  explicit TableScorer(std::unordered_map<std::string, double> table) : table_(std::move(table)) {}
  std::vector<double> Score(const std::vector<PremiseHypothesis> &pairs, ScoreMode) const override {
    ++calls;
    std::vector<double> out;
    for (const auto &p : pairs) {
      auto it = table_.find(p.premise);
      out.push_back(it == table_.end() ? 0.0 : it->second);
    }
    return out;
  }
  std::string Describe() const override { return "table"; }
  mutable int calls = 0;

 private:
  std::unordered_map<std::string, double> table_;
};

std::vector<EntailmentScore> ScoresFromLabels(const std::vector<bool> &labels) {
  std::vector<EntailmentScore> scores;
  for (size_t i = 0; i < labels.size(); ++i) {
    scores.push_back({{"d", i, ""}, labels[i] ? 0.9 : 0.1, labels[i]});
  }
  return scores;
}

Presupposition MakePresup(const std::string &id, const std::string &text) {
  Presupposition p;
  p.id = id;
  p.question_id = "q";
  p.text = text;
  p.kind = TriggerKind::kPossessiveS;
  return p;
}

Document EcuadorDoc() {
  Document doc;
  doc.id = "d";
  doc.sentences.push_back(
      {"ecuador's flag has three colors",
       ParsePtb("(S (NP (NP (NNP ecuador) (POS 's)) (NN flag)) (VP (VBZ has) (NP (CD three) "
                "(NNS colors))))")});
  doc.sentences.push_back({"the yellow band stands for the sun", std::nullopt});
  return doc;
}

TEST_CASE("score pairs with the builtin scorer") {
  VerifierConfig cfg;
  LexicalScorer scorer;
  std::vector<Premise> premises = {{{"d", 0, ""}, "the sun rotates"},
                                   {{"d", 1, ""}, "quarterly earnings rose"},
                                   {{"d", 2, ""}, "the sun slowly rotates on its axis"}};
  auto scores = ScorePairs(premises, "the sun rotates", scorer, cfg);
  REQUIRE(scores.size() == 3);
  CHECK(scores[0].entail_prob == 1.0);
  CHECK(scores[0].entails);
  CHECK(scores[1].entail_prob == 0.0);
  CHECK_FALSE(scores[1].entails);
  CHECK(scores[2].entail_prob == 1.0);
  CHECK(scores[2].premise == PremiseRef{"d", 2, ""});
}

TEST_CASE("score pairs sends one request") {
  TableScorer scorer({{"a", 0.5}, {"b", 0.49}});
  VerifierConfig cfg;
  auto scores = ScorePairs({{{"d", 0, ""}, "a"}, {{"d", 1, ""}, "b"}}, "h", scorer, cfg);
  CHECK(scorer.calls == 1);
  CHECK(scores[0].entails);  // threshold is inclusive
  CHECK_FALSE(scores[1].entails);
}

TEST_CASE("aggregate examples") {
  VerifierConfig cfg;
  auto one = ScoresFromLabels({false, true, false, false, false});
  VerificationResult r = Aggregate(one, cfg, "p");
  CHECK(r.verifiable);
  CHECK(r.supporting.size() == 1);
  CHECK(r.presup_id == "p");
  CHECK_FALSE(Aggregate(ScoresFromLabels({false, false, false, false, false}), cfg).verifiable);
  cfg.k = 2;
  CHECK_FALSE(Aggregate(one, cfg).verifiable);
}

TEST_CASE("config validation") {
  VerifierConfig cfg;
  CHECK_NOTHROW(cfg.Validate());
  cfg.k = 0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg.k = 1;
  cfg.decision_threshold = 1.0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg.decision_threshold = 0.0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
}

TEST_CASE("strategy names") {
  for (Strategy s : {Strategy::kSentenceNli, Strategy::kHybridDocPresups, Strategy::kCombined}) {
    CHECK(ParseStrategy(StrategyName(s)) == s);
  }
  CHECK(StrategyName(Strategy::kHybridDocPresups) == "hybrid-doc-presups");
  CHECK_THROWS_AS(ParseStrategy("nope"), Error);
}

TEST_CASE("hybrid verification uses document presuppositions") {
  Document doc = EcuadorDoc();
  FactiveLexicon lex = FactiveLexicon::Default();
  auto premises = BuildPremises(doc, Strategy::kHybridDocPresups, lex);
  bool found = std::any_of(premises.begin(), premises.end(),
                           [](const Premise &p) { return p.text == "'ecuador' has 'flag'"; });
  CHECK(found);
  for (const Premise &p : premises) CHECK_FALSE(p.ref.sentence.has_value());

  VerifierConfig cfg;
  cfg.strategy = Strategy::kHybridDocPresups;
  VerificationResult r =
      HybridVerify(MakePresup("p", "'ecuador' has 'flag'"), doc, cfg, LexicalScorer(), lex);
  CHECK(r.verifiable);
  CHECK(r.strategy == Strategy::kHybridDocPresups);
  REQUIRE_FALSE(r.supporting.empty());
  CHECK(r.supporting[0].presup_id.rfind("d-s0-p", 0) == 0);
}

TEST_CASE("hybrid verification without support") {
  Document doc;
  doc.id = "d";
  doc.sentences.push_back({"cats sleep", ParsePtb("(S (NP (NNS cats)) (VP (VBP sleep)))")});
  VerifierConfig cfg;
  cfg.strategy = Strategy::kHybridDocPresups;
  CHECK_FALSE(HybridVerify(MakePresup("p", "'ecuador' has 'flag'"), doc, cfg, LexicalScorer(),
                           FactiveLexicon::Default())
                  .verifiable);
}

TEST_CASE("combined strategy takes the union") {
  Document doc = EcuadorDoc();
  Presupposition p = MakePresup("p", "the yellow band stands for the sun");
  VerifierConfig cfg;
  cfg.strategy = Strategy::kHybridDocPresups;
  FactiveLexicon lex = FactiveLexicon::Default();
  CHECK_FALSE(HybridVerify(p, doc, cfg, LexicalScorer(), lex).verifiable);
  cfg.strategy = Strategy::kCombined;
  VerificationResult r = HybridVerify(p, doc, cfg, LexicalScorer(), lex);
  CHECK(r.verifiable);
  CHECK(r.supporting[0] == PremiseRef{"d", 1, ""});
}

TEST_CASE("export pairs") {
  Question q = MakeQuestion("q", "what do the colors on ecuador's flag mean",
                            "(SBARQ (WHNP (WP what)) (SQ (VBP do) (NP (NP (DT the) (NNS colors)) "
                            "(PP (IN on) (NP (NP (NNP ecuador) (POS 's)) (NN flag)))) (VP (VB "
                            "mean))))");
  Document doc;
  doc.id = "q";
  for (int i = 0; i < 8; ++i) doc.sentences.push_back({"sentence " + std::to_string(i), {}});
  DocumentStore docs{{"q", doc}};
  FactiveLexicon lex = FactiveLexicon::Default();
  size_t presups = GeneratePresuppositions(q, lex).size();
  REQUIRE(presups == 4);

  auto records = ExportPairs({q}, docs, 5, 7, lex);
  CHECK(records.size() == presups * 5);
  for (const auto &r : records) {
    CHECK(r.question_id == "q");
    CHECK(r.premise == doc.sentences[r.sentence_index].text);
  }
  auto again = ExportPairs({q}, docs, 5, 7, lex);
  for (size_t i = 0; i < records.size(); ++i) CHECK(again[i].sentence_index == records[i].sentence_index);

  docs["q"].sentences.resize(3);
  CHECK(ExportPairs({q}, docs, 5, 7, lex).size() == presups * 3);
  CHECK(ExportPairs({q}, docs, 0, 7, lex).empty());
  CHECK_THROWS_AS(ExportPairs({q}, DocumentStore{}, 5, 7, lex), Error);
}

TEST_CASE("property: aggregation matches brute-force counting") {
  Gen gen(101);
  for (int trial = 0; trial < 2000; ++trial) {
    size_t n = gen.Uniform(0, 10);
    std::vector<bool> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(gen.Coin());
    size_t count = std::count(labels.begin(), labels.end(), true);
    for (size_t k = 1; k <= std::max<size_t>(n, 1); ++k) {
      VerifierConfig cfg;
      cfg.k = static_cast<int>(k);
      VerificationResult r = Aggregate(ScoresFromLabels(labels), cfg);
      CHECK(r.verifiable == (count >= k));
      CHECK(r.supporting.size() == count);
    }
  }
}

TEST_CASE("property: aggregation is monotone") {
  Gen gen(202);
  for (int trial = 0; trial < 2000; ++trial) {
    size_t n = gen.Uniform(0, 10);
    std::vector<bool> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(gen.Coin(0.3));
    VerifierConfig cfg;
    cfg.k = static_cast<int>(gen.Uniform(1, 11));
    bool before = Aggregate(ScoresFromLabels(labels), cfg).verifiable;
    std::vector<bool> more = labels;
    more.insert(more.begin() + gen.Uniform(0, more.size()), true);
    CHECK((!before || Aggregate(ScoresFromLabels(more), cfg).verifiable));
    VerifierConfig stricter = cfg;
    stricter.k = cfg.k + 1;
    CHECK((before || !Aggregate(ScoresFromLabels(labels), stricter).verifiable));
  }
}

TEST_CASE("property: combined support contains sentence support") {
  Gen gen(303);
  Document doc = EcuadorDoc();
  FactiveLexicon lex = FactiveLexicon::Default();
  for (int trial = 0; trial < 200; ++trial) {
    std::string hypothesis = testing::RandomSentence(gen, 1, 6);
    VerifierConfig cfg;
    cfg.decision_threshold = gen.Real(0.05, 0.95);
    cfg.strategy = Strategy::kSentenceNli;
    auto sentence = HybridVerify(MakePresup("p", hypothesis), doc, cfg, LexicalScorer(), lex);
    cfg.strategy = Strategy::kCombined;
    auto combined = HybridVerify(MakePresup("p", hypothesis), doc, cfg, LexicalScorer(), lex);
    for (const PremiseRef &ref : sentence.supporting) {
      CHECK(std::find(combined.supporting.begin(), combined.supporting.end(), ref) !=
            combined.supporting.end());
    }
    CHECK((!sentence.verifiable || combined.verifiable));
  }
}

}  // namespace
}  // namespace presup

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
#include <cctype>
#include <iostream>
#include <optional>
#include <unordered_set>

#include "presup/errors.h"
#include "presup/morphology.h"

namespace presup {
namespace {

// A surface token and whether it attaches to its left neighbour.
struct Token {
  std::string text;
  bool clitic = false;
};
using TokenSeq = std::vector<Token>;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool IsVerbTag(std::string_view label) { return StartsWith(label, "VB"); }

void AppendLeaves(const ParseTree &node, TokenSeq *out) {
  for (const ParseTree *leaf : node.Leaves()) {
    out->push_back({leaf->token(), IsClitic(*leaf)});
  }
}

std::string Join(const TokenSeq &tokens) {
  std::string out;
  for (const Token &token : tokens) {
    if (token.text.empty()) continue;
    if (!out.empty() && !token.clitic) out.push_back(' ');
    out += token.text;
  }
  return out;
}

std::string JoinWords(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (std::string_view part : parts) {
    if (part.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(part);
  }
  return out;
}

NodePath Parent(const NodePath &path) {
  return NodePath(path.begin(), path.end() - 1);
}

NodePath Child(const NodePath &path, size_t index) {
  NodePath out = path;
  out.push_back(index);
  return out;
}

const ParseTree *FirstVerbLeaf(const ParseTree &vp) {
  for (const ParseTree &child : vp.children()) {
    if (child.is_leaf() && (IsVerbTag(child.label()) || child.label() == "MD")) {
      return &child;
    }
  }
  return nullptr;
}

bool IsAuxiliary(const ParseTree &node) {
  if (!node.is_leaf()) return false;
  if (node.label() == "MD") return true;
  if (!IsVerbTag(node.label())) return false;
  static const std::unordered_set<std::string> kAux = {
      "is", "are", "was", "were", "am", "be", "been", "'s", "'re", "'m",
      "has", "have", "had", "'ve", "'d", "do", "does", "did"};
  return kAux.count(Lower(node.token())) > 0;
}

bool IsNegation(const ParseTree &node) {
  if (!node.is_leaf()) return false;
  std::string token = Lower(node.token());
  return token == "not" || token == "n't";
}

struct Declarative {
  std::string text;
  bool inverted = false;
};

Declarative DeclarativizeClause(const ParseTree &clause, std::string_view gap_filler) {
  const auto &children = clause.children();
  if (clause.is_leaf() || children.empty()) {
    throw Error(ErrorCode::kNoSubjectFound, "clause is a bare token");
  }
  auto has_vp = [&children](size_t from) {
    for (size_t i = from; i < children.size(); ++i) {
      if (children[i].label() == "VP") return true;
    }
    return false;
  };

  const ParseTree &first = children[0];
  if (!IsAuxiliary(first)) {
    // Subject already in place (subject wh-extraction), possibly with the
    // verb phrase flattened into the clause.
    if (has_vp(0) || first.label() == "NP" || (first.is_leaf() && IsVerbTag(first.label()))) {
      TokenSeq tokens;
      AppendLeaves(clause, &tokens);
      return {Join(tokens), false};
    }
    throw Error(ErrorCode::kNoSubjectFound,
                "unrecognized clause '" + YieldText(clause) + "'");
  }

  TokenSeq aux;
  AppendLeaves(first, &aux);
  size_t j = 1;
  bool negated = false;
  while (j < children.size() && IsNegation(children[j])) {
    AppendLeaves(children[j], &aux);
    negated = true;
    ++j;
  }
  TokenSeq middle;
  while (j < children.size() &&
         (children[j].label() == "ADVP" || children[j].label() == "RB")) {
    AppendLeaves(children[j], &middle);
    ++j;
  }
  std::string aux_word = Lower(first.token());
  bool do_aux = aux_word == "do" || aux_word == "does" || aux_word == "did";
  if (j >= children.size() || children[j].label() != "NP") {
    // "who would win", "who didn't go": subject wh-extraction with a bare
    // auxiliary. Unnegated do-support needs a subject.
    if (has_vp(1) && (negated || !do_aux)) {
      TokenSeq tokens;
      AppendLeaves(clause, &tokens);
      return {Join(tokens), false};
    }
    throw Error(ErrorCode::kNoSubjectFound,
                "no subject after auxiliary in '" + YieldText(clause) + "'");
  }
  const ParseTree &subject = children[j];
  ++j;

  TokenSeq out;
  AppendLeaves(subject, &out);

  bool do_support = !negated && do_aux;
  if (do_support && j < children.size() && children[j].label() == "VP") {
    const ParseTree &vp = children[j];
    const ParseTree *head = FirstVerbLeaf(vp);
    if (head != nullptr && (head->label() == "VB" || head->label() == "VBP")) {
      out.insert(out.end(), middle.begin(), middle.end());
      for (size_t k = j; k < children.size(); ++k) {
        for (const ParseTree *leaf : children[k].Leaves()) {
          Token token{leaf->token(), IsClitic(*leaf)};
          if (leaf == head) {
            std::string lemma = Lower(head->token());
            if (aux_word == "did") {
              token.text = PastTense(lemma);
            } else if (aux_word == "does") {
              token.text = ThirdPersonSingular(lemma);
            }
          }
          out.push_back(std::move(token));
        }
      }
      return {Join(out), true};
    }
  }

  out.insert(out.end(), aux.begin(), aux.end());
  out.insert(out.end(), middle.begin(), middle.end());
  if (!gap_filler.empty()) out.push_back({std::string(gap_filler), false});
  for (size_t k = j; k < children.size(); ++k) AppendLeaves(children[k], &out);
  return {Join(out), true};
}

std::optional<WhWord> ParseWhWord(std::string_view token) {
  std::string word = Lower(token);
  if (word == "who" || word == "whom") return WhWord::kWho;
  if (word == "what") return WhWord::kWhat;
  if (word == "where") return WhWord::kWhere;
  if (word == "when") return WhWord::kWhen;
  if (word == "why") return WhWord::kWhy;
  if (word == "how") return WhWord::kHow;
  if (word == "which") return WhWord::kWhich;
  return std::nullopt;
}

class Detector {
 public:
  Detector(const ParseTree &tree, const FactiveLexicon &lexicon,
           const GeneratorOptions &options)
      : tree_(tree), lexicon_(lexicon), options_(options) {}

  std::vector<TriggerMatch> Run() {
    NodePath path;
    Visit(tree_, &path);
    std::vector<TriggerMatch> kept;
    for (TriggerMatch &match : matches_) {
      if (options_.projection_guard && match.kind != TriggerKind::kWhWord &&
          UnderNonfactive(match.anchor)) {
        continue;
      }
      kept.push_back(std::move(match));
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [this](const TriggerMatch &a, const TriggerMatch &b) {
                       return PreorderRank(tree_, a.anchor) < PreorderRank(tree_, b.anchor);
                     });
    return kept;
  }

 private:
  void Visit(const ParseTree &node, NodePath *path) {
    if (node.label() == "SBARQ" && !options_.declarative) WhQuestion(node, *path);
    if (node.label() == "SBAR") {
      Temporal(node, *path);
      Counterfactual(node, *path);
    }
    if (node.label() == "PP") TemporalPhrase(node, *path);
    if (node.is_leaf()) {
      std::string token = Lower(node.token());
      if (token == "the" && node.label() == "DT") Definite(*path);
      if (node.label() == "POS") Possessive(*path);
      if (IsVerbTag(node.label())) Factive(*path);
      return;
    }
    for (size_t i = 0; i < node.children().size(); ++i) {
      path->push_back(i);
      Visit(node.children()[i], path);
      path->pop_back();
    }
  }

  void WhQuestion(const ParseTree &node, const NodePath &path) {
    const auto &children = node.children();
    size_t wh_index = children.size();
    for (size_t i = 0; i < children.size(); ++i) {
      if (StartsWith(children[i].label(), "WH")) {
        wh_index = i;
        break;
      }
    }
    if (wh_index == children.size()) return;
    const ParseTree &phrase = children[wh_index];
    NodePath phrase_path = Child(path, wh_index);

    std::optional<WhWord> wh;
    NodePath anchor;
    for (const NodePath &leaf_path :
         FindNodes(phrase, [](const ParseTree &n) { return n.is_leaf(); })) {
      wh = ParseWhWord(phrase.At(leaf_path).token());
      if (wh) {
        anchor = phrase_path;
        anchor.insert(anchor.end(), leaf_path.begin(), leaf_path.end());
        break;
      }
    }
    if (!wh) return;

    TriggerMatch match{TriggerKind::kWhWord, *wh, anchor, {}};
    match.payload.push_back({"wh_phrase", phrase_path, phrase.span()});
    for (size_t i = wh_index + 1; i < children.size(); ++i) {
      if (children[i].label() == "SQ" || children[i].label() == "S") {
        match.payload.push_back({"clause", Child(path, i), children[i].span()});
        break;
      }
    }
    matches_.push_back(std::move(match));
  }

  void Definite(const NodePath &det_path) {
    if (det_path.empty()) return;
    NodePath np_path = Parent(det_path);
    const ParseTree &np = tree_.At(np_path);
    if (np.label() != "NP") return;
    // "the" must open the NP, allowing a predeterminer ("all the").
    for (size_t i = 0; i < det_path.back(); ++i) {
      if (np.children()[i].label() != "PDT") return;
    }
    const ParseTree &det = tree_.At(det_path);

    // Extend to the maximal NP the determiner heads: keep post-modifiers,
    // stop at coordination, apposition and possessors.
    while (!np_path.empty()) {
      const ParseTree &current = tree_.At(np_path);
      if (current.Leaves().back()->label() == "POS") break;
      NodePath up = Parent(np_path);
      const ParseTree &parent = tree_.At(up);
      if (parent.label() != "NP" || np_path.back() != 0) break;
      bool coordinated = std::any_of(
          parent.children().begin(), parent.children().end(),
          [](const ParseTree &c) {
            return c.label() == "CC" || c.label() == "," || c.label() == "CONJP";
          });
      if (coordinated) break;
      np_path = up;
    }
    const ParseTree &scope = tree_.At(np_path);
    Span span{det.span().end, scope.span().end};
    for (const ParseTree &child : scope.children()) {
      if (child.label() == "SBAR" && child.span().start >= span.start) {
        span.end = child.span().start;
        break;
      }
    }
    TrimTrailing(&span);
    if (span.empty()) return;

    if (options_.skip_proper_noun_definites && span.size() == 1) {
      const ParseTree *leaf = LeafAt(span.start);
      if (leaf->label() == "NNP" || leaf->label() == "NNPS") return;
    }
    TriggerMatch match{TriggerKind::kDefiniteArticle, WhWord::kNone, det_path, {}};
    match.payload.push_back({"np", np_path, span});
    matches_.push_back(std::move(match));
  }

  void Possessive(const NodePath &pos_path) {
    if (pos_path.size() < 2) return;
    NodePath possessor_path = Parent(pos_path);
    NodePath owner_path = Parent(possessor_path);
    const ParseTree &possessor = tree_.At(possessor_path);
    const ParseTree &owner = tree_.At(owner_path);
    if (possessor.label() != "NP" || owner.label() != "NP") return;
    const ParseTree &pos = tree_.At(pos_path);

    Span possessor_span{possessor.span().start, pos.span().start};
    Span possessee_span{possessor.span().end, owner.span().end};
    for (const ParseTree &child : owner.children()) {
      if (child.label() == "SBAR" && child.span().start >= possessee_span.start) {
        possessee_span.end = child.span().start;
        break;
      }
    }
    TrimTrailing(&possessee_span);
    if (possessor_span.empty() || possessee_span.empty()) return;

    TriggerMatch match{TriggerKind::kPossessiveS, WhWord::kNone, pos_path, {}};
    match.payload.push_back({"possessor", possessor_path, possessor_span});
    match.payload.push_back({"possessee", owner_path, possessee_span});
    matches_.push_back(std::move(match));
  }

  void Factive(const NodePath &verb_path) {
    if (verb_path.empty()) return;
    NodePath vp_path = Parent(verb_path);
    const ParseTree &vp = tree_.At(vp_path);
    if (vp.label() != "VP") return;
    const ParseTree &verb = tree_.At(verb_path);

    size_t index = verb_path.back();
    std::string particle;
    if (index + 1 < vp.children().size()) {
      const ParseTree &next = vp.children()[index + 1];
      if (next.label() == "PRT" || next.label() == "RP") particle = Lower(YieldText(next));
    }
    std::string entry = lexicon_.Match(LemmaCandidates(Lower(verb.token())), particle);
    if (entry.empty()) return;

    for (size_t i = index + 1; i < vp.children().size(); ++i) {
      const ParseTree &child = vp.children()[i];
      if (child.label() == "S") {
        AddFactive(verb_path, Child(vp_path, i), child);
        return;
      }
      if (child.label() != "SBAR") continue;
      if (!child.children().empty() && StartsWith(child.children()[0].label(), "WH")) {
        return;  // embedded question, not a that-clause
      }
      for (size_t k = 0; k < child.children().size(); ++k) {
        if (child.children()[k].label() == "S") {
          AddFactive(verb_path, Child(Child(vp_path, i), k), child.children()[k]);
          return;
        }
      }
      return;
    }
  }

  void AddFactive(const NodePath &verb_path, const NodePath &clause_path,
                  const ParseTree &clause) {
    TriggerMatch match{TriggerKind::kFactiveVerb, WhWord::kNone, verb_path, {}};
    match.payload.push_back({"complement", clause_path, clause.span()});
    matches_.push_back(std::move(match));
  }

  // SBAR introduced by a temporal subordinator.
  void Temporal(const ParseTree &sbar, const NodePath &path) {
    if (sbar.children().size() < 2) return;
    const ParseTree &head = sbar.children()[0];
    std::string word;
    NodePath anchor = Child(path, 0);
    if (head.is_leaf() && head.label() == "IN") {
      word = Lower(head.token());
    } else if (head.label() == "WHADVP" && head.children().size() == 1 &&
               head.children()[0].is_leaf()) {
      word = Lower(head.children()[0].token());
      anchor.push_back(0);
    }
    if (word != "when" && word != "while" && word != "before" && word != "after" &&
        word != "during") {
      return;
    }
    for (size_t i = 1; i < sbar.children().size(); ++i) {
      const ParseTree &child = sbar.children()[i];
      if (child.label() == "S") {
        TriggerMatch match{TriggerKind::kTemporalAdjunct, WhWord::kNone, anchor, {}};
        match.payload.push_back({"clause", Child(path, i), child.span()});
        matches_.push_back(std::move(match));
        return;
      }
    }
  }

  // PP headed by a temporal preposition taking an event NP.
  void TemporalPhrase(const ParseTree &pp, const NodePath &path) {
    if (pp.children().size() != 2) return;
    const ParseTree &head = pp.children()[0];
    const ParseTree &object = pp.children()[1];
    if (!head.is_leaf() || head.label() != "IN" || object.label() != "NP") return;
    std::string word = Lower(head.token());
    if (word != "during" && word != "before" && word != "after") return;
    TriggerMatch match{TriggerKind::kTemporalAdjunct, WhWord::kNone, Child(path, 0), {}};
    match.payload.push_back({"clause", Child(path, 1), object.span()});
    matches_.push_back(std::move(match));
  }

  void Counterfactual(const ParseTree &sbar, const NodePath &path) {
    if (sbar.children().size() < 2) return;
    const ParseTree &head = sbar.children()[0];
    if (!head.is_leaf() || Lower(head.token()) != "if") return;
    size_t s_index = 0;
    for (size_t i = 1; i < sbar.children().size(); ++i) {
      if (sbar.children()[i].label() == "S") {
        s_index = i;
        break;
      }
    }
    if (s_index == 0) return;
    const ParseTree &clause = sbar.children()[s_index];
    const ParseTree *vp = nullptr;
    for (const ParseTree &child : clause.children()) {
      if (child.label() == "VP") {
        vp = &child;
        break;
      }
    }
    if (vp == nullptr) return;
    const ParseTree *verb = FirstVerbLeaf(*vp);
    if (verb == nullptr || verb->label() != "VBD") return;
    if (!MatrixHasModal(path, sbar.span())) return;

    TriggerMatch match{TriggerKind::kCounterfactual, WhWord::kNone, Child(path, 0), {}};
    match.payload.push_back({"antecedent", Child(path, s_index), clause.span()});
    matches_.push_back(std::move(match));
  }

  // "would"/"could" in the smallest enclosing clause, outside `excluded`.
  bool MatrixHasModal(const NodePath &sbar_path, const Span &excluded) const {
    NodePath up = sbar_path;
    while (!up.empty()) {
      up = Parent(up);
      const std::string &label = tree_.At(up).label();
      if (label == "S" || label == "SQ" || label == "SINV" || label == "SBARQ" ||
          up.empty()) {
        break;
      }
    }
    for (const ParseTree *leaf : tree_.At(up).Leaves()) {
      if (excluded.Contains(leaf->span())) continue;
      std::string token = Lower(leaf->token());
      if (leaf->label() == "MD" && (token == "would" || token == "could" || token == "'d")) {
        return true;
      }
    }
    return false;
  }

  bool UnderNonfactive(const NodePath &anchor) const {
    const WordList &nonfactives = DefaultNonfactiveVerbs();
    for (size_t depth = anchor.size(); depth-- > 1;) {
      NodePath node_path(anchor.begin(), anchor.begin() + depth);
      const std::string &label = tree_.At(node_path).label();
      if (label != "SBAR" && label != "S") continue;
      const ParseTree &parent = tree_.At(Parent(node_path));
      if (parent.label() != "VP") continue;
      for (size_t i = node_path.back(); i-- > 0;) {
        const ParseTree &sibling = parent.children()[i];
        if (!sibling.is_leaf() || !IsVerbTag(sibling.label())) continue;
        for (const std::string &lemma : LemmaCandidates(Lower(sibling.token()))) {
          if (nonfactives.Contains(lemma)) return true;
        }
        break;
      }
    }
    return false;
  }

  const ParseTree *LeafAt(size_t position) const {
    return tree_.Leaves().at(position);
  }

  // Drops trailing commas and similar punctuation from a payload span.
  void TrimTrailing(Span *span) const {
    while (!span->empty()) {
      const ParseTree *leaf = LeafAt(span->end - 1);
      if (leaf->label() == "," || leaf->label() == ":" || leaf->label() == ".") {
        --span->end;
      } else {
        break;
      }
    }
  }

  const ParseTree &tree_;
  const FactiveLexicon &lexicon_;
  const GeneratorOptions &options_;
  std::vector<TriggerMatch> matches_;
};

const PayloadItem *FindRole(const TriggerMatch &match, std::string_view role) {
  for (const PayloadItem &item : match.payload) {
    if (item.role == role) return &item;
  }
  return nullptr;
}

// Antecedent of a counterfactual with past perfect shifted to simple past
// ("had won" -> "won").
std::string ShiftedAntecedent(const ParseTree &clause) {
  TokenSeq out;
  std::vector<const ParseTree *> leaves = clause.Leaves();
  for (size_t i = 0; i < leaves.size(); ++i) {
    const ParseTree *leaf = leaves[i];
    if (leaf->label() == "VBD" && Lower(leaf->token()) == "had" && i + 1 < leaves.size() &&
        leaves[i + 1]->label() == "VBN") {
      out.push_back({PastFromParticiple(Lower(leaves[i + 1]->token())), false});
      ++i;
      continue;
    }
    out.push_back({leaf->token(), IsClitic(*leaf)});
  }
  return Join(out);
}

struct Rendered {
  std::string text;
  std::string_view template_id;
};

std::vector<Rendered> RenderWh(const ParseTree &tree, const TriggerMatch &match) {
  const PayloadItem *phrase_item = FindRole(match, "wh_phrase");
  const PayloadItem *clause_item = FindRole(match, "clause");
  if (clause_item == nullptr) {
    throw Error(ErrorCode::kNoSubjectFound, "wh-phrase without a clause");
  }
  const ParseTree &clause = tree.At(clause_item->node);
  const ParseTree &anchor = tree.At(match.anchor);
  std::string remainder =
      SpanText(tree, Span{anchor.span().end, phrase_item->span.end});

  std::string_view gap;
  if (match.wh == WhWord::kHow && !remainder.empty()) gap = remainder;
  Declarative body = DeclarativizeClause(clause, gap);
  if (match.wh == WhWord::kHow && !body.inverted && !remainder.empty()) {
    body.text = JoinWords({remainder, body.text});
  }

  switch (match.wh) {
    case WhWord::kWho:
      return {{JoinWords({"there is someone that", body.text}), templates::kWho}};
    case WhWord::kWhat:
      return {{JoinWords({"there is something that", body.text}), templates::kWhat}};
    case WhWord::kWhere:
      return {{JoinWords({"there is some place that", body.text}), templates::kWhere}};
    case WhWord::kWhen:
      return {{JoinWords({"there is some point in time that", body.text}),
               templates::kWhen}};
    case WhWord::kWhich:
      if (body.inverted) {
        return {{JoinWords({body.text, "some", remainder}), templates::kWhich}};
      }
      return {{JoinWords({"some", remainder, body.text}), templates::kWhich}};
    case WhWord::kHow:
      return {{body.text, templates::kHow},
              {JoinWords({"there is some way that", body.text}), templates::kHowWay}};
    case WhWord::kWhy:
      return {{body.text, templates::kWhy},
              {JoinWords({"there is some reason that", body.text}), templates::kWhyReason}};
    case WhWord::kNone:
      break;
  }
  return {};
}

std::vector<Rendered> Render(const ParseTree &tree, const TriggerMatch &match) {
  auto quoted = [&tree](const PayloadItem &item) {
    return "'" + SpanText(tree, item.span) + "'";
  };
  switch (match.kind) {
    case TriggerKind::kWhWord:
      return RenderWh(tree, match);
    case TriggerKind::kDefiniteArticle: {
      std::string np = quoted(match.payload.at(0));
      return {{np + " exists", templates::kDefiniteExists},
              {np + " is contextually unique", templates::kDefiniteUnique}};
    }
    case TriggerKind::kPossessiveS:
      return {{quoted(match.payload.at(0)) + " has " + quoted(match.payload.at(1)),
               templates::kPossessive}};
    case TriggerKind::kFactiveVerb:
      return {{SpanText(tree, match.payload.at(0).span), templates::kFactive}};
    case TriggerKind::kTemporalAdjunct:
      return {{SpanText(tree, match.payload.at(0).span), templates::kTemporal}};
    case TriggerKind::kCounterfactual:
      return {{"it is not true that " + ShiftedAntecedent(tree.At(match.payload.at(0).node)),
               templates::kCounterfactual}};
  }
  return {};
}

}  // namespace

std::string_view TriggerKindName(TriggerKind kind) {
  switch (kind) {
    case TriggerKind::kWhWord: return "wh_word";
    case TriggerKind::kDefiniteArticle: return "definite_article";
    case TriggerKind::kFactiveVerb: return "factive_verb";
    case TriggerKind::kPossessiveS: return "possessive_s";
    case TriggerKind::kTemporalAdjunct: return "temporal_adjunct";
    case TriggerKind::kCounterfactual: return "counterfactual";
  }
  return "unknown";
}

std::string_view WhWordName(WhWord wh) {
  switch (wh) {
    case WhWord::kNone: return "";
    case WhWord::kWho: return "who";
    case WhWord::kWhat: return "what";
    case WhWord::kWhere: return "where";
    case WhWord::kWhen: return "when";
    case WhWord::kWhy: return "why";
    case WhWord::kHow: return "how";
    case WhWord::kWhich: return "which";
  }
  return "";
}

std::vector<TriggerMatch> DetectTriggers(const ParseTree &tree,
                                         const FactiveLexicon &lexicon,
                                         const GeneratorOptions &options) {
  return Detector(tree, lexicon, options).Run();
}

std::vector<TriggerMatch> DetectTriggers(const Question &question,
                                         const FactiveLexicon &lexicon,
                                         const GeneratorOptions &options) {
  return DetectTriggers(question.tree, lexicon, options);
}

std::string Declarativize(const ParseTree &clause, std::string_view gap_filler) {
  return DeclarativizeClause(clause, gap_filler).text;
}

std::vector<Presupposition> Generate(const ParseTree &tree,
                                     const std::vector<TriggerMatch> &matches,
                                     const std::string &owner_id,
                                     const std::string &id_prefix) {
  std::vector<Presupposition> out;
  for (const TriggerMatch &match : matches) {
    std::vector<Rendered> rendered;
    try {
      rendered = Render(tree, match);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kNoSubjectFound) throw;
      std::clog << "presupgen: skipping " << TriggerKindName(match.kind) << " trigger in "
                << owner_id << ": " << e.what() << "\n";
      continue;
    }
    std::vector<Span> spans;
    for (const PayloadItem &item : match.payload) spans.push_back(item.span);
    for (Rendered &r : rendered) {
      if (r.text.empty()) continue;
      Presupposition p;
      p.id = id_prefix + "-p" + std::to_string(out.size());
      p.question_id = owner_id;
      p.text = std::move(r.text);
      p.kind = match.kind;
      p.template_id = std::string(r.template_id);
      p.source_spans = spans;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Presupposition> Generate(const Question &question,
                                     const std::vector<TriggerMatch> &matches) {
  return Generate(question.tree, matches, question.id, question.id);
}

std::vector<Presupposition> GeneratePresuppositions(const Question &question,
                                                    const FactiveLexicon &lexicon,
                                                    const GeneratorOptions &options) {
  return Generate(question, DetectTriggers(question, lexicon, options));
}

}  // namespace presup

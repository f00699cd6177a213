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

#include "presup/treebank.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "presup/errors.h"

namespace presup {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::kEmptyLabel: return "EmptyLabel";
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kYieldMismatch: return "YieldMismatch";
    case ErrorCode::kNoSubjectFound: return "NoSubjectFound";
    case ErrorCode::kScorerUnavailable: return "ScorerUnavailable";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kMissingDocument: return "MissingDocument";
    case ErrorCode::kMismatchedIds: return "MismatchedIds";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kMissingGold: return "MissingGold";
    case ErrorCode::kInputFormat: return "InputFormat";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

ParseTree::ParseTree(std::string label, std::string token, size_t position)
    : label_(std::move(label)),
      token_(std::move(token)),
      span_{position, position + 1} {
  if (label_.empty()) throw Error(ErrorCode::kEmptyLabel, "empty leaf label");
}

ParseTree::ParseTree(std::string label, std::vector<ParseTree> children)
    : label_(std::move(label)), children_(std::move(children)) {
  if (label_.empty()) throw Error(ErrorCode::kEmptyLabel, "empty node label");
  if (children_.empty()) {
    throw Error(ErrorCode::kEmptyTree, "node '" + label_ + "' has no children");
  }
  for (size_t i = 1; i < children_.size(); ++i) {
    if (children_[i].span_.start != children_[i - 1].span_.end) {
      throw std::invalid_argument("non-contiguous child spans under " + label_);
    }
  }
  span_ = {children_.front().span_.start, children_.back().span_.end};
}

const ParseTree &ParseTree::At(const NodePath &path) const {
  const ParseTree *node = this;
  for (size_t index : path) {
    if (index >= node->children_.size()) {
      throw std::out_of_range("bad node path");
    }
    node = &node->children_[index];
  }
  return *node;
}

namespace {

void CollectLeaves(const ParseTree &node,
                   std::vector<const ParseTree *> *leaves) {
  if (node.is_leaf()) {
    leaves->push_back(&node);
    return;
  }
  for (const ParseTree &child : node.children()) CollectLeaves(child, leaves);
}

void SerializeTo(const ParseTree &node, std::string *out) {
  out->push_back('(');
  out->append(node.label());
  if (node.is_leaf()) {
    out->push_back(' ');
    out->append(node.token());
  } else {
    for (const ParseTree &child : node.children()) {
      out->push_back(' ');
      SerializeTo(child, out);
    }
  }
  out->push_back(')');
}

std::string LowerAscii(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Recursive-descent reader over a bracketed string.
class PtbReader {
 public:
  explicit PtbReader(std::string_view input) : input_(input) {}

  ParseTree ReadTop() {
    SkipSpace();
    if (pos_ >= input_.size()) throw Error(ErrorCode::kEmptyTree, "empty input");
    if (input_[pos_] != '(') Fail(ErrorCode::kInputFormat, "expected '('");
    ParseTree tree = ReadNode();
    SkipSpace();
    if (pos_ < input_.size()) {
      // Report the first ')' without a partner, if any.
      int depth = 0;
      for (size_t i = pos_; i < input_.size(); ++i) {
        depth += input_[i] == '(' ? 1 : input_[i] == ')' ? -1 : 0;
        if (depth < 0) {
          pos_ = i;
          Fail(ErrorCode::kUnbalancedBrackets, "unmatched ')'");
        }
      }
      Fail(ErrorCode::kInputFormat, "trailing input after tree");
    }
    return tree;
  }

 private:
  ParseTree ReadNode() {
    size_t open = pos_;
    ++pos_;  // '('
    SkipSpace();
    if (AtEnd()) Fail(ErrorCode::kUnbalancedBrackets, "unexpected end of input");
    if (input_[pos_] == ')') {
      Fail(ErrorCode::kEmptyTree, "empty brackets");
    }
    if (input_[pos_] == '(') Fail(ErrorCode::kEmptyLabel, "missing label");
    std::string label = ReadAtom();
    SkipSpace();
    if (AtEnd()) Fail(ErrorCode::kUnbalancedBrackets, "unexpected end of input");

    if (input_[pos_] == ')') {
      pos_ = open;
      Fail(ErrorCode::kEmptyTree, "node '" + label + "' has no children");
    }
    if (input_[pos_] != '(') {
      std::string token = ReadAtom();
      SkipSpace();
      if (AtEnd()) Fail(ErrorCode::kUnbalancedBrackets, "unexpected end of input");
      if (input_[pos_] != ')') {
        Fail(ErrorCode::kInputFormat, "leaf '" + label + "' has extra material");
      }
      ++pos_;
      return ParseTree(std::move(label), std::move(token), next_leaf_++);
    }

    std::vector<ParseTree> children;
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail(ErrorCode::kUnbalancedBrackets, "unexpected end of input");
      char c = input_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c != '(') {
        Fail(ErrorCode::kInputFormat, "bare token inside internal node");
      }
      children.push_back(ReadNode());
    }
    return ParseTree(std::move(label), std::move(children));
  }

  std::string ReadAtom() {
    size_t start = pos_;
    while (!AtEnd() && input_[pos_] != '(' && input_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    return std::string(input_.substr(start, pos_ - start));
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  bool AtEnd() const { return pos_ >= input_.size(); }

  [[noreturn]] void Fail(ErrorCode code, const std::string &what) const {
    std::string where = AtEnd() ? "end-of-input" : "offset " + std::to_string(pos_);
    throw Error(code, what + " at " + where);
  }

  std::string_view input_;
  size_t pos_ = 0;
  size_t next_leaf_ = 0;
};

void FindNodesFrom(const ParseTree &node, const NodePredicate &predicate,
                   NodePath *path, std::vector<NodePath> *out) {
  if (predicate(node)) out->push_back(*path);
  for (size_t i = 0; i < node.children().size(); ++i) {
    path->push_back(i);
    FindNodesFrom(node.children()[i], predicate, path, out);
    path->pop_back();
  }
}

size_t SubtreeSize(const ParseTree &node) {
  size_t n = 1;
  for (const ParseTree &child : node.children()) n += SubtreeSize(child);
  return n;
}

std::optional<ParseTree> RebuildFrom(
    const ParseTree &node,
    const std::function<std::string(const ParseTree &)> &map_token,
    const std::function<bool(const ParseTree &)> &drop_leaf, size_t *next) {
  if (node.is_leaf()) {
    if (drop_leaf(node)) return std::nullopt;
    return ParseTree(node.label(), map_token(node), (*next)++);
  }
  std::vector<ParseTree> children;
  for (const ParseTree &child : node.children()) {
    auto rebuilt = RebuildFrom(child, map_token, drop_leaf, next);
    if (rebuilt) children.push_back(std::move(*rebuilt));
  }
  if (children.empty()) return std::nullopt;
  return ParseTree(node.label(), std::move(children));
}

bool IsAcronym(std::string_view token) {
  if (token.size() < 2) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c)) != 0;
  });
}

bool IsTerminalPunct(std::string_view token) {
  return token == "?" || token == "." || token == "!";
}

}  // namespace

std::vector<const ParseTree *> ParseTree::Leaves() const {
  std::vector<const ParseTree *> leaves;
  CollectLeaves(*this, &leaves);
  return leaves;
}

std::string ParseTree::Serialize() const {
  std::string out;
  SerializeTo(*this, &out);
  return out;
}

ParseTree ParsePtb(std::string_view input) { return PtbReader(input).ReadTop(); }

bool IsClitic(const ParseTree &leaf) {
  if (!leaf.is_leaf()) return false;
  if (leaf.label() == "POS") return true;
  std::string token = LowerAscii(leaf.token());
  return token == "'s" || token == "'re" || token == "'ve" || token == "'ll" ||
         token == "'d" || token == "'m" || token == "n't";
}

std::string SpanText(const ParseTree &tree, const Span &span) {
  std::string out;
  for (const ParseTree *leaf : tree.Leaves()) {
    if (leaf->span().start < span.start || leaf->span().start >= span.end) {
      continue;
    }
    if (!out.empty() && !IsClitic(*leaf)) out.push_back(' ');
    out.append(leaf->token());
  }
  return out;
}

std::string YieldText(const ParseTree &tree) { return SpanText(tree, tree.span()); }

std::vector<NodePath> FindNodes(const ParseTree &tree,
                                const NodePredicate &predicate) {
  std::vector<NodePath> out;
  NodePath path;
  FindNodesFrom(tree, predicate, &path, &out);
  return out;
}

size_t PreorderRank(const ParseTree &tree, const NodePath &path) {
  size_t rank = 0;
  const ParseTree *node = &tree;
  for (size_t index : path) {
    rank += 1;
    for (size_t i = 0; i < index; ++i) rank += SubtreeSize(node->children()[i]);
    node = &node->children().at(index);
  }
  return rank;
}

std::optional<ParseTree> RebuildTree(
    const ParseTree &tree,
    const std::function<std::string(const ParseTree &)> &map_token,
    const std::function<bool(const ParseTree &)> &drop_leaf) {
  size_t next = 0;
  return RebuildFrom(tree, map_token, drop_leaf, &next);
}

std::string NormalizeQuestionToken(std::string_view token) {
  if (IsAcronym(token)) return std::string(token);
  return LowerAscii(token);
}

std::string NormalizeQuestionText(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  // Terminal punctuation may be a separate token or glued to the last word.
  while (!tokens.empty()) {
    std::string &last = tokens.back();
    while (!last.empty() && IsTerminalPunct(std::string_view(&last.back(), 1))) {
      last.pop_back();
    }
    if (!last.empty()) break;
    tokens.pop_back();
  }
  std::string out;
  for (const std::string &token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += NormalizeQuestionToken(token);
  }
  return out;
}

Question MakeQuestion(std::string id, std::string_view text,
                      std::string_view ptb, std::string doc_id) {
  ParseTree raw = ParsePtb(ptb);
  size_t leaf_count = raw.span().end;
  auto tree = RebuildTree(
      raw, [](const ParseTree &leaf) { return NormalizeQuestionToken(leaf.token()); },
      [leaf_count](const ParseTree &leaf) {
        return leaf.span().end == leaf_count && IsTerminalPunct(leaf.token());
      });
  if (!tree) throw Error(ErrorCode::kEmptyTree, "question " + id + " has an empty parse");
  std::string normalized = NormalizeQuestionText(text);
  std::string yield = YieldText(*tree);
  if (yield != normalized) {
    throw Error(ErrorCode::kYieldMismatch, "question " + id + ": parse yield '" +
                                               yield + "' does not match text '" +
                                               normalized + "'");
  }
  if (doc_id.empty()) doc_id = id;
  return Question{std::move(id), std::move(normalized), std::move(*tree),
                  std::move(doc_id)};
}

void ValidateDocument(const Document &doc) {
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kInputFormat, "document " + doc.id + " has no sentences");
  }
}

}  // namespace presup

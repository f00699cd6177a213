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

#ifndef PRESUP_TREEBANK_H_
#define PRESUP_TREEBANK_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace presup {

// Half-open token interval [start, end).
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t size() const { return end - start; }
  bool empty() const { return start >= end; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool operator==(const Span &other) const = default;
};

// Child-index path from the root. The empty path names the root.
using NodePath = std::vector<size_t>;

// Immutable constituency tree. Leaves carry a token and no children;
// internal nodes carry children and no token.
class ParseTree {
 public:
  // Leaf at token position `position`.
  ParseTree(std::string label, std::string token, size_t position);

  // Internal node. Children must be non-empty with contiguous spans.
  ParseTree(std::string label, std::vector<ParseTree> children);

  const std::string &label() const { return label_; }
  const std::string &token() const { return token_; }
  const std::vector<ParseTree> &children() const { return children_; }
  const Span &span() const { return span_; }
  bool is_leaf() const { return children_.empty(); }

  // Node addressed by `path`. Throws std::out_of_range on a bad path.
  const ParseTree &At(const NodePath &path) const;

  // Leaves in left-to-right order.
  std::vector<const ParseTree *> Leaves() const;

  // Canonical bracketed form: "(NP (DT the) (NN cat))".
  std::string Serialize() const;

 private:
  std::string label_;
  std::string token_;
  std::vector<ParseTree> children_;
  Span span_;
};

// Parses one Penn-Treebank style bracketed tree. Spans are assigned by
// left-to-right leaf enumeration.
//
// Errors: kUnbalancedBrackets (with the byte offset), kEmptyLabel,
// kEmptyTree, kInputFormat for other malformed input.
ParseTree ParsePtb(std::string_view input);

// True for leaves that attach to the previous token without a space
// (possessive POS, and contraction clitics such as "'s", "n't").
bool IsClitic(const ParseTree &leaf);

// Leaf tokens joined by single spaces, with clitics re-attached to the
// preceding token so that "(NP (NN ecuador) (POS 's))" yields "ecuador's".
std::string YieldText(const ParseTree &tree);

// Detokenized text of the leaves of `tree` whose positions fall in `span`.
std::string SpanText(const ParseTree &tree, const Span &span);

using NodePredicate = std::function<bool(const ParseTree &)>;

// Paths of all nodes satisfying `predicate`, in pre-order.
std::vector<NodePath> FindNodes(const ParseTree &tree,
                                const NodePredicate &predicate);

// Pre-order rank of the node at `path` (root is 0).
size_t PreorderRank(const ParseTree &tree, const NodePath &path);

// Rebuilds `tree` with every leaf token passed through `map_token`; leaves
// for which `drop_leaf` returns true are removed (and internal nodes left
// empty are pruned). Spans are re-enumerated.
std::optional<ParseTree> RebuildTree(
    const ParseTree &tree,
    const std::function<std::string(const ParseTree &)> &map_token,
    const std::function<bool(const ParseTree &)> &drop_leaf);

// NQ-style question surface form: terminal "?", "." and "!" stripped,
// whitespace collapsed, every token lowercased except all-caps acronyms
// of two or more letters ("US").
std::string NormalizeQuestionText(std::string_view text);

// Same token normalization applied to a single leaf token.
std::string NormalizeQuestionToken(std::string_view token);

struct Question {
  std::string id;
  std::string text;
  ParseTree tree;
  // Linked document; defaults to the question id.
  std::string doc_id;
};

// Builds a Question from raw text and a bracketed parse. Text and leaves
// are normalized identically; terminal punctuation leaves are dropped.
// Throws kYieldMismatch if the normalized yield differs from the text.
Question MakeQuestion(std::string id, std::string_view text,
                      std::string_view ptb, std::string doc_id = "");

struct Sentence {
  std::string text;
  std::optional<ParseTree> tree;
};

struct Document {
  std::string id;
  std::string title;
  std::vector<Sentence> sentences;
};

// Throws kInputFormat if the document has no sentences.
void ValidateDocument(const Document &doc);

}  // namespace presup

#endif  // PRESUP_TREEBANK_H_

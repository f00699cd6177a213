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

#ifndef PRESUP_AUGMENT_H_
#define PRESUP_AUGMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "presup/presupgen.h"
#include "presup/treebank.h"
#include "presup/verify.h"

namespace presup {

using TokenId = int32_t;

// Names of the reserved vocabulary entries.
struct SpecialTokens {
  std::string pad = "[PAD]";
  std::string unk = "[UNK]";
  std::string sep = "[SEP]";
  std::string label_false = "0";
  std::string label_true = "1";
  std::string question_global = "[QID]";
  std::string sentence_global = "[SID]";
};

// Splits on whitespace, then splits each word into alphanumeric runs and
// single punctuation characters. Pieces after the first in a word carry a
// "##" prefix, so joining is lossless for single-spaced text:
// "'ecuador' has" -> ["'", "##ecuador", "##'", "has"].
std::vector<std::string> SplitPieces(std::string_view text);
std::string JoinPieces(const std::vector<std::string> &pieces);

// Token string <-> id mapping; ids are positions in the entry list.
// Unknown pieces map to the [UNK] id.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> tokens, SpecialTokens specials = {});

  // One token per line.
  static Vocabulary FromFile(const std::string &path, SpecialTokens specials = {});

  // Specials first, then every piece of `texts` in sorted order.
  static Vocabulary Build(const std::vector<std::string> &texts, SpecialTokens specials = {});

  TokenId Id(std::string_view token) const;
  const std::string &Token(TokenId id) const;
  size_t size() const { return tokens_.size(); }
  const std::vector<std::string> &tokens() const { return tokens_; }

  TokenId pad_id() const { return pad_; }
  TokenId unk_id() const { return unk_; }
  TokenId sep_id() const { return sep_; }
  TokenId label_id(bool verifiable) const { return verifiable ? label_true_ : label_false_; }
  TokenId question_global_id() const { return question_global_; }
  TokenId sentence_global_id() const { return sentence_global_; }

  std::vector<TokenId> Encode(std::string_view text) const;
  std::string Decode(std::span<const TokenId> ids) const;

 private:
  TokenId Require(const std::string &token) const;

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
  TokenId pad_, unk_, sep_, label_false_, label_true_, question_global_, sentence_global_;
};

struct VerifiedPresupposition {
  Presupposition presupposition;
  VerificationResult verification;
};

// question ids ++ [SEP, presupposition ids..., label id] per presupposition.
struct FlatInput {
  std::vector<TokenId> token_ids;
  size_t dropped_blocks = 0;
};

// `max_tokens` (0 = unlimited) caps the sequence; whole trailing blocks
// are dropped to fit, with a warning.
FlatInput EncodeFlat(const Question &q, const std::vector<VerifiedPresupposition> &ps,
                     const Vocabulary &vocab, size_t max_tokens = 0);

struct DecodedFlat {
  std::string question;
  std::vector<std::pair<std::string, bool>> presuppositions;
};
DecodedFlat DecodeFlat(std::span<const TokenId> ids, const Vocabulary &vocab);

enum class SlotKind { kQuestion, kSentence, kPresupposition };
std::string_view SlotKindName(SlotKind kind);

struct GlobalSlot {
  SlotKind kind;
  TokenId value;  // constant id for question/sentence; 0 or 1 for presuppositions
};

struct Segment {
  SlotKind kind;
  std::vector<TokenId> token_ids;
};

// Tokens in `from` may attend to tokens in `to`. Positions index a single
// sequence: global slots occupy [0, G), long tokens [G, G + L) in segment
// order.
struct AttentionRule {
  Span from;
  Span to;
  bool operator==(const AttentionRule &other) const = default;
};

// Global slots are ordered question, sentences, presuppositions; long
// segments question, presuppositions, sentences. Global slot i owns the
// segment of the same kind and ordinal.
struct StructuredLayout {
  std::vector<GlobalSlot> global;
  std::vector<Segment> segments;
  std::vector<AttentionRule> mask;
  size_t dropped_presuppositions = 0;

  size_t long_length() const;
};

// `max_global` (0 = unlimited) caps the number of global slots; trailing
// presupposition slots are dropped to fit, with a warning.
StructuredLayout EncodeStructured(const Question &q,
                                  const std::vector<VerifiedPresupposition> &ps,
                                  const Document &doc, const Vocabulary &vocab,
                                  size_t max_global = 0);

struct AnswerTypeLogits {
  double unanswerable = 0.0;
  double long_answer = 0.0;
  double short_answer = 0.0;
  double yes = 0.0;
  double no = 0.0;
};

// Unanswerable iff its logit strictly exceeds the sum of the other four.
// Throws kOutOfRange on non-finite logits.
bool ClassifyUnanswerable(const AnswerTypeLogits &logits);

// Gold unanswerability from annotator votes: at least 4 Null answers.
// Throws kOutOfRange unless 0 <= null_answers <= total_annotations.
bool NullCountToLabel(int null_answers, int total_annotations);

}  // namespace presup

#endif  // PRESUP_AUGMENT_H_

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

#include "presup/augment.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>

#include "presup/errors.h"

namespace presup {
namespace {

constexpr std::string_view kContinuation = "##";

bool IsWordChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

}  // namespace

std::vector<std::string> SplitPieces(std::string_view text) {
  std::vector<std::string> pieces;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool first = true;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      size_t start = i;
      if (IsWordChar(text[i])) {
        while (i < text.size() && IsWordChar(text[i])) ++i;
      } else {
        ++i;
      }
      std::string piece = first ? "" : std::string(kContinuation);
      piece.append(text.substr(start, i - start));
      pieces.push_back(std::move(piece));
      first = false;
    }
  }
  return pieces;
}

std::string JoinPieces(const std::vector<std::string> &pieces) {
  std::string out;
  for (const std::string &piece : pieces) {
    if (piece.rfind(kContinuation, 0) == 0) {
      out.append(piece, kContinuation.size());
    } else {
      if (!out.empty()) out.push_back(' ');
      out.append(piece);
    }
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens, SpecialTokens specials)
    : tokens_(std::move(tokens)) {
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
      throw Error(ErrorCode::kInputFormat, "duplicate vocabulary entry '" + tokens_[i] + "'");
    }
  }
  pad_ = Require(specials.pad);
  unk_ = Require(specials.unk);
  sep_ = Require(specials.sep);
  label_false_ = Require(specials.label_false);
  label_true_ = Require(specials.label_true);
  question_global_ = Require(specials.question_global);
  sentence_global_ = Require(specials.sentence_global);
}

TokenId Vocabulary::Require(const std::string &token) const {
  auto it = ids_.find(token);
  if (it == ids_.end()) {
    throw Error(ErrorCode::kInputFormat, "vocabulary lacks special token '" + token + "'");
  }
  return it->second;
}

Vocabulary Vocabulary::FromFile(const std::string &path, SpecialTokens specials) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open vocabulary " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  return Vocabulary(std::move(tokens), std::move(specials));
}

Vocabulary Vocabulary::Build(const std::vector<std::string> &texts, SpecialTokens specials) {
  std::vector<std::string> tokens = {specials.pad,         specials.unk,
                                     specials.sep,         specials.label_false,
                                     specials.label_true,  specials.question_global,
                                     specials.sentence_global};
  std::set<std::string> reserved(tokens.begin(), tokens.end());
  std::set<std::string> pieces;
  for (const std::string &text : texts) {
    for (std::string &piece : SplitPieces(text)) {
      if (!reserved.count(piece)) pieces.insert(std::move(piece));
    }
  }
  tokens.insert(tokens.end(), pieces.begin(), pieces.end());
  return Vocabulary(std::move(tokens), std::move(specials));
}

TokenId Vocabulary::Id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? unk_ : it->second;
}

const std::string &Vocabulary::Token(TokenId id) const {
  if (id < 0 || static_cast<size_t>(id) >= tokens_.size()) {
    throw Error(ErrorCode::kOutOfRange, "token id " + std::to_string(id) + " out of range");
  }
  return tokens_[id];
}

std::vector<TokenId> Vocabulary::Encode(std::string_view text) const {
  std::vector<TokenId> ids;
  for (const std::string &piece : SplitPieces(text)) ids.push_back(Id(piece));
  return ids;
}

std::string Vocabulary::Decode(std::span<const TokenId> ids) const {
  std::vector<std::string> pieces;
  pieces.reserve(ids.size());
  for (TokenId id : ids) pieces.push_back(Token(id));
  return JoinPieces(pieces);
}

FlatInput EncodeFlat(const Question &q, const std::vector<VerifiedPresupposition> &ps,
                     const Vocabulary &vocab, size_t max_tokens) {
  FlatInput out;
  out.token_ids = vocab.Encode(q.text);
  for (size_t i = 0; i < ps.size(); ++i) {
    std::vector<TokenId> block = {vocab.sep_id()};
    for (TokenId id : vocab.Encode(ps[i].presupposition.text)) block.push_back(id);
    block.push_back(vocab.label_id(ps[i].verification.verifiable));
    if (max_tokens != 0 && out.token_ids.size() + block.size() > max_tokens) {
      out.dropped_blocks = ps.size() - i;
      std::clog << "augment: question " << q.id << ": dropped " << out.dropped_blocks
                << " presupposition block(s) over the " << max_tokens << "-token budget\n";
      break;
    }
    out.token_ids.insert(out.token_ids.end(), block.begin(), block.end());
  }
  return out;
}

DecodedFlat DecodeFlat(std::span<const TokenId> ids, const Vocabulary &vocab) {
  DecodedFlat out;
  std::vector<std::vector<TokenId>> parts(1);
  for (TokenId id : ids) {
    if (id == vocab.sep_id()) {
      parts.emplace_back();
    } else {
      parts.back().push_back(id);
    }
  }
  out.question = vocab.Decode(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) {
    const std::vector<TokenId> &block = parts[i];
    if (block.empty()) throw Error(ErrorCode::kInputFormat, "empty presupposition block");
    TokenId label = block.back();
    if (label != vocab.label_id(true) && label != vocab.label_id(false)) {
      throw Error(ErrorCode::kInputFormat, "presupposition block lacks a label id");
    }
    out.presuppositions.emplace_back(
        vocab.Decode(std::span<const TokenId>(block.data(), block.size() - 1)),
        label == vocab.label_id(true));
  }
  return out;
}

std::string_view SlotKindName(SlotKind kind) {
  switch (kind) {
    case SlotKind::kQuestion: return "question";
    case SlotKind::kSentence: return "sentence";
    case SlotKind::kPresupposition: return "presupposition";
  }
  return "unknown";
}

size_t StructuredLayout::long_length() const {
  size_t n = 0;
  for (const Segment &segment : segments) n += segment.token_ids.size();
  return n;
}

StructuredLayout EncodeStructured(const Question &q,
                                  const std::vector<VerifiedPresupposition> &ps,
                                  const Document &doc, const Vocabulary &vocab,
                                  size_t max_global) {
  StructuredLayout layout;
  size_t n_sentences = doc.sentences.size();
  size_t n_presups = ps.size();
  if (max_global != 0 && 1 + n_sentences + n_presups > max_global) {
    size_t room = max_global > 1 + n_sentences ? max_global - 1 - n_sentences : 0;
    layout.dropped_presuppositions = n_presups - room;
    n_presups = room;
    std::clog << "augment: question " << q.id << ": dropped "
              << layout.dropped_presuppositions << " presupposition slot(s) over the "
              << max_global << "-slot global budget\n";
  }

  layout.global.push_back({SlotKind::kQuestion, vocab.question_global_id()});
  for (size_t i = 0; i < n_sentences; ++i) {
    layout.global.push_back({SlotKind::kSentence, vocab.sentence_global_id()});
  }
  for (size_t i = 0; i < n_presups; ++i) {
    layout.global.push_back(
        {SlotKind::kPresupposition, vocab.label_id(ps[i].verification.verifiable)});
  }

  layout.segments.push_back({SlotKind::kQuestion, vocab.Encode(q.text)});
  for (size_t i = 0; i < n_presups; ++i) {
    layout.segments.push_back(
        {SlotKind::kPresupposition, vocab.Encode(ps[i].presupposition.text)});
  }
  for (const Sentence &sentence : doc.sentences) {
    layout.segments.push_back({SlotKind::kSentence, vocab.Encode(sentence.text)});
  }

  // Long-token ranges per segment, in the single index space.
  const size_t num_global = layout.global.size();
  std::vector<Span> ranges;
  size_t cursor = num_global;
  for (const Segment &segment : layout.segments) {
    ranges.push_back({cursor, cursor + segment.token_ids.size()});
    cursor += segment.token_ids.size();
  }
  // Global slot index of segment s.
  auto global_of = [&](size_t s) -> size_t {
    if (s == 0) return 0;
    if (s <= n_presups) return 1 + n_sentences + (s - 1);
    return 1 + (s - 1 - n_presups);
  };

  // Global-to-global attention is unrestricted.
  layout.mask.push_back({{0, num_global}, {0, num_global}});
  for (size_t s = 0; s < layout.segments.size(); ++s) {
    Span own_global{global_of(s), global_of(s) + 1};
    Span range = ranges[s];
    if (!range.empty()) layout.mask.push_back({own_global, range});
    if (layout.segments[s].kind == SlotKind::kPresupposition || range.empty()) continue;
    layout.mask.push_back({range, range});
    layout.mask.push_back({range, own_global});
  }
  if (n_presups > 0) {
    Span presup_long{ranges[1].start, ranges[n_presups].end};
    Span presup_global{1 + n_sentences, 1 + n_sentences + n_presups};
    if (!presup_long.empty()) {
      layout.mask.push_back({presup_long, presup_long});
      layout.mask.push_back({presup_long, presup_global});
    }
  }
  return layout;
}

bool ClassifyUnanswerable(const AnswerTypeLogits &l) {
  for (double v : {l.unanswerable, l.long_answer, l.short_answer, l.yes, l.no}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kOutOfRange, "non-finite logit");
  }
  return l.unanswerable > l.long_answer + l.short_answer + l.yes + l.no;
}

bool NullCountToLabel(int null_answers, int total_annotations) {
  if (null_answers < 0 || total_annotations < 0 || null_answers > total_annotations) {
    throw Error(ErrorCode::kOutOfRange,
                "null answer count " + std::to_string(null_answers) + " of " +
                    std::to_string(total_annotations) + " is out of range");
  }
  return null_answers >= 4;
}

}  // namespace presup

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

#ifndef PRESUP_TESTS_TEST_UTIL_H_
#define PRESUP_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "presup/augment.h"
#include "presup/presupgen.h"
#include "presup/treebank.h"
#include "presup/verify.h"

namespace presup::testing {

inline std::string FixturePath(const std::string &relative) {
  return std::string(PRESUP_FIXTURE_DIR) + "/" + relative;
}

// Small deterministic generator helpers for property tests.
class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  size_t Uniform(size_t lo, size_t hi) {  // inclusive
    return std::uniform_int_distribution<size_t>(lo, hi)(rng_);
  }
  double Real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[Uniform(0, items.size() - 1)];
  }
  std::mt19937_64 &engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Lowercase words drawn from a fixed toy lexicon.
inline const std::vector<std::string> &ToyWords() {
  static const std::vector<std::string> words = {
      "the",   "cat",   "sat",    "on",     "mat",   "who",   "what",  "river",
      "flows", "north", "city",   "paris",  "old",   "song",  "annie", "king",
      "war",   "ended", "in",     "1783",   "flag",  "has",   "three", "colors",
      "some",  "there", "is",     "that",   "sun",   "rotates"};
  return words;
}

inline std::string RandomSentence(Gen &gen, size_t min_words, size_t max_words) {
  size_t n = gen.Uniform(min_words, max_words);
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += gen.Pick(ToyWords());
  }
  return out;
}

// Flat question tree "(S (NN w1) (NN w2) ...)" for a whitespace text.
inline Question FlatQuestion(const std::string &id, const std::string &text) {
  std::string ptb = "(S";
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    ptb += " (NN " + text.substr(pos, end - pos) + ")";
    pos = end + 1;
  }
  ptb += ")";
  return MakeQuestion(id, text, ptb);
}

inline VerifiedPresupposition MakeVerified(const std::string &id, const std::string &question_id,
                                           const std::string &text, bool verifiable) {
  VerifiedPresupposition vp;
  vp.presupposition.id = id;
  vp.presupposition.question_id = question_id;
  vp.presupposition.text = text;
  vp.presupposition.kind = TriggerKind::kWhWord;
  vp.presupposition.template_id = std::string(templates::kWho);
  vp.presupposition.source_spans = {{0, 1}};
  vp.verification.presup_id = id;
  vp.verification.verifiable = verifiable;
  return vp;
}

}  // namespace presup::testing

#endif  // PRESUP_TESTS_TEST_UTIL_H_

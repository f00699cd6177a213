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

#ifndef PRESUP_LEXICON_H_
#define PRESUP_LEXICON_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace presup {

// Ordered set of lowercase entries read from a plain-text list: one entry
// per line, blank lines and "#" comments ignored.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::vector<std::string> entries);

  static WordList FromText(std::string_view text);
  static WordList FromFile(const std::string &path);

  bool Contains(std::string_view word) const;
  const std::vector<std::string> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::string> entries_;
  std::unordered_set<std::string> index_;
};

// Factive verb lemmas. Multiword entries ("find out") are a verb lemma
// followed by a particle. Never empty.
class FactiveLexicon {
 public:
  explicit FactiveLexicon(WordList words);

  static FactiveLexicon Default();
  static FactiveLexicon FromFile(const std::string &path);

  // Entry matched by a verb with the given lemma candidates, optionally
  // followed by `particle`. Returns the empty string when nothing matches.
  std::string Match(const std::vector<std::string> &lemma_candidates,
                    std::string_view particle) const;

  const WordList &words() const { return words_; }

 private:
  WordList words_;
};

// Built-in lists, compiled from the files under data/.
const WordList &DefaultStopwords();
const WordList &DefaultNonfactiveVerbs();
std::string_view DefaultFactiveText();

}  // namespace presup

#endif  // PRESUP_LEXICON_H_

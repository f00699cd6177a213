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

#include "presup/lexicon.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "presup/embedded_data.h"
#include "presup/errors.h"

namespace presup {

WordList::WordList(std::vector<std::string> entries) {
  for (std::string &entry : entries) {
    if (index_.insert(entry).second) entries_.push_back(std::move(entry));
  }
}

WordList WordList::FromText(std::string_view text) {
  std::vector<std::string> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Collapse internal whitespace, trim, lowercase.
    std::string entry;
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      if (!entry.empty()) entry.push_back(' ');
      for (char c : word) {
        entry.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    if (!entry.empty()) entries.push_back(std::move(entry));
  }
  return WordList(std::move(entries));
}

WordList WordList::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open word list " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromText(buffer.str());
}

bool WordList::Contains(std::string_view word) const {
  return index_.count(std::string(word)) > 0;
}

FactiveLexicon::FactiveLexicon(WordList words) : words_(std::move(words)) {
  if (words_.empty()) {
    throw Error(ErrorCode::kInputFormat, "factive lexicon is empty");
  }
}

FactiveLexicon FactiveLexicon::Default() {
  return FactiveLexicon(WordList::FromText(DefaultFactiveText()));
}

FactiveLexicon FactiveLexicon::FromFile(const std::string &path) {
  return FactiveLexicon(WordList::FromFile(path));
}

std::string FactiveLexicon::Match(const std::vector<std::string> &lemma_candidates,
                                  std::string_view particle) const {
  for (const std::string &lemma : lemma_candidates) {
    if (!particle.empty()) {
      std::string phrase = lemma + " " + std::string(particle);
      if (words_.Contains(phrase)) return phrase;
    }
    if (words_.Contains(lemma)) return lemma;
  }
  return "";
}

const WordList &DefaultStopwords() {
  static const WordList list = WordList::FromText(embedded::kStopwords);
  return list;
}

const WordList &DefaultNonfactiveVerbs() {
  static const WordList list = WordList::FromText(embedded::kNonfactives);
  return list;
}

std::string_view DefaultFactiveText() { return embedded::kFactives; }

}  // namespace presup

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

#include "presup/morphology.h"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace presup {
namespace {

struct IrregularVerb {
  const char *lemma;
  const char *past;
  const char *participle;
};

// Common irregular verbs: lemma, simple past, past participle.
constexpr IrregularVerb kIrregularVerbs[] = {
    {"arise", "arose", "arisen"},       {"awake", "awoke", "awoken"},
    {"be", "was", "been"},              {"bear", "bore", "born"},
    {"beat", "beat", "beaten"},         {"become", "became", "become"},
    {"begin", "began", "begun"},        {"bend", "bent", "bent"},
    {"bet", "bet", "bet"},              {"bid", "bid", "bid"},
    {"bind", "bound", "bound"},         {"bite", "bit", "bitten"},
    {"bleed", "bled", "bled"},          {"blow", "blew", "blown"},
    {"break", "broke", "broken"},       {"breed", "bred", "bred"},
    {"bring", "brought", "brought"},    {"broadcast", "broadcast", "broadcast"},
    {"build", "built", "built"},        {"burn", "burnt", "burnt"},
    {"burst", "burst", "burst"},        {"buy", "bought", "bought"},
    {"cast", "cast", "cast"},           {"catch", "caught", "caught"},
    {"choose", "chose", "chosen"},      {"cling", "clung", "clung"},
    {"come", "came", "come"},           {"cost", "cost", "cost"},
    {"creep", "crept", "crept"},        {"cut", "cut", "cut"},
    {"deal", "dealt", "dealt"},         {"dig", "dug", "dug"},
    {"do", "did", "done"},              {"draw", "drew", "drawn"},
    {"dream", "dreamt", "dreamt"},      {"drink", "drank", "drunk"},
    {"drive", "drove", "driven"},       {"dwell", "dwelt", "dwelt"},
    {"eat", "ate", "eaten"},            {"fall", "fell", "fallen"},
    {"feed", "fed", "fed"},             {"feel", "felt", "felt"},
    {"fight", "fought", "fought"},      {"find", "found", "found"},
    {"flee", "fled", "fled"},           {"fling", "flung", "flung"},
    {"fly", "flew", "flown"},           {"forbid", "forbade", "forbidden"},
    {"forecast", "forecast", "forecast"}, {"foresee", "foresaw", "foreseen"},
    {"forget", "forgot", "forgotten"},  {"forgive", "forgave", "forgiven"},
    {"freeze", "froze", "frozen"},      {"get", "got", "gotten"},
    {"give", "gave", "given"},          {"go", "went", "gone"},
    {"grind", "ground", "ground"},      {"grow", "grew", "grown"},
    {"hang", "hung", "hung"},           {"have", "had", "had"},
    {"hear", "heard", "heard"},         {"hide", "hid", "hidden"},
    {"hit", "hit", "hit"},              {"hold", "held", "held"},
    {"hurt", "hurt", "hurt"},           {"keep", "kept", "kept"},
    {"kneel", "knelt", "knelt"},        {"know", "knew", "known"},
    {"lay", "laid", "laid"},            {"lead", "led", "led"},
    {"lean", "leant", "leant"},         {"leap", "leapt", "leapt"},
    {"learn", "learned", "learned"},    {"leave", "left", "left"},
    {"lend", "lent", "lent"},           {"let", "let", "let"},
    {"lie", "lay", "lain"},             {"light", "lit", "lit"},
    {"lose", "lost", "lost"},           {"make", "made", "made"},
    {"mean", "meant", "meant"},         {"meet", "met", "met"},
    {"mislead", "misled", "misled"},    {"mistake", "mistook", "mistaken"},
    {"overcome", "overcame", "overcome"}, {"overtake", "overtook", "overtaken"},
    {"overthrow", "overthrew", "overthrown"}, {"pay", "paid", "paid"},
    {"prove", "proved", "proven"},      {"put", "put", "put"},
    {"quit", "quit", "quit"},           {"read", "read", "read"},
    {"rebuild", "rebuilt", "rebuilt"},  {"rid", "rid", "rid"},
    {"ride", "rode", "ridden"},         {"ring", "rang", "rung"},
    {"rise", "rose", "risen"},          {"run", "ran", "run"},
    {"say", "said", "said"},            {"see", "saw", "seen"},
    {"seek", "sought", "sought"},       {"sell", "sold", "sold"},
    {"send", "sent", "sent"},           {"set", "set", "set"},
    {"sew", "sewed", "sewn"},           {"shake", "shook", "shaken"},
    {"shed", "shed", "shed"},           {"shine", "shone", "shone"},
    {"shoot", "shot", "shot"},          {"show", "showed", "shown"},
    {"shrink", "shrank", "shrunk"},     {"shut", "shut", "shut"},
    {"sing", "sang", "sung"},           {"sink", "sank", "sunk"},
    {"sit", "sat", "sat"},              {"slay", "slew", "slain"},
    {"sleep", "slept", "slept"},        {"slide", "slid", "slid"},
    {"sling", "slung", "slung"},        {"slit", "slit", "slit"},
    {"speak", "spoke", "spoken"},       {"speed", "sped", "sped"},
    {"spend", "spent", "spent"},        {"spill", "spilt", "spilt"},
    {"spin", "spun", "spun"},           {"spit", "spat", "spat"},
    {"split", "split", "split"},        {"spread", "spread", "spread"},
    {"spring", "sprang", "sprung"},     {"stand", "stood", "stood"},
    {"steal", "stole", "stolen"},       {"stick", "stuck", "stuck"},
    {"sting", "stung", "stung"},        {"stink", "stank", "stunk"},
    {"stride", "strode", "stridden"},   {"strike", "struck", "struck"},
    {"string", "strung", "strung"},     {"strive", "strove", "striven"},
    {"swear", "swore", "sworn"},        {"sweep", "swept", "swept"},
    {"swell", "swelled", "swollen"},    {"swim", "swam", "swum"},
    {"swing", "swung", "swung"},        {"take", "took", "taken"},
    {"teach", "taught", "taught"},      {"tear", "tore", "torn"},
    {"tell", "told", "told"},           {"think", "thought", "thought"},
    {"throw", "threw", "thrown"},       {"thrust", "thrust", "thrust"},
    {"tread", "trod", "trodden"},       {"undergo", "underwent", "undergone"},
    {"understand", "understood", "understood"},
    {"undertake", "undertook", "undertaken"},
    {"undo", "undid", "undone"},        {"upset", "upset", "upset"},
    {"wake", "woke", "woken"},          {"wear", "wore", "worn"},
    {"weave", "wove", "woven"},         {"weep", "wept", "wept"},
    {"win", "won", "won"},              {"wind", "wound", "wound"},
    {"withdraw", "withdrew", "withdrawn"}, {"withhold", "withheld", "withheld"},
    {"withstand", "withstood", "withstood"}, {"wring", "wrung", "wrung"},
    {"write", "wrote", "written"},      {"outgrow", "outgrew", "outgrown"},
    {"outrun", "outran", "outrun"},     {"oversee", "oversaw", "overseen"},
    {"partake", "partook", "partaken"}, {"redo", "redid", "redone"},
    {"remake", "remade", "remade"},     {"repay", "repaid", "repaid"},
    {"resell", "resold", "resold"},     {"retell", "retold", "retold"},
    {"rewrite", "rewrote", "rewritten"}, {"uphold", "upheld", "upheld"},
    {"behold", "beheld", "beheld"},     {"beset", "beset", "beset"},
    {"forsake", "forsook", "forsaken"}, {"misunderstand", "misunderstood", "misunderstood"},
    {"inlay", "inlaid", "inlaid"},      {"input", "input", "input"},
    {"mow", "mowed", "mown"},           {"saw", "sawed", "sawn"},
    {"shear", "sheared", "shorn"},      {"smite", "smote", "smitten"},
    {"sow", "sowed", "sown"},           {"spell", "spelt", "spelt"},
    {"stave", "stove", "stove"},        {"strew", "strewed", "strewn"},
    {"bite", "bit", "bitten"},          {"outdo", "outdid", "outdone"},
    {"override", "overrode", "overridden"}, {"overhear", "overheard", "overheard"},
    {"backslide", "backslid", "backslid"}, {"befall", "befell", "befallen"},
    {"beget", "begot", "begotten"},     {"bestride", "bestrode", "bestridden"},
    {"cleave", "clove", "cloven"},      {"crow", "crew", "crowed"},
    {"dive", "dove", "dived"},          {"forego", "forewent", "foregone"},
    {"foretell", "foretold", "foretold"}, {"hew", "hewed", "hewn"},
    {"misspell", "misspelt", "misspelt"}, {"offset", "offset", "offset"},
    {"outbid", "outbid", "outbid"},     {"overdo", "overdid", "overdone"},
    {"overpay", "overpaid", "overpaid"}, {"oversleep", "overslept", "overslept"},
    {"preset", "preset", "preset"},     {"proofread", "proofread", "proofread"},
    {"reset", "reset", "reset"},        {"resit", "resat", "resat"},
    {"sublet", "sublet", "sublet"},     {"unwind", "unwound", "unwound"},
    {"waylay", "waylaid", "waylaid"},   {"wed", "wed", "wed"},
};

struct IrregularIndex {
  std::unordered_map<std::string, const IrregularVerb *> by_lemma;
  std::unordered_map<std::string, std::vector<std::string>> lemmas_by_form;
  std::unordered_map<std::string, const IrregularVerb *> by_participle;

  IrregularIndex() {
    for (const IrregularVerb &verb : kIrregularVerbs) {
      if (!by_lemma.emplace(verb.lemma, &verb).second) continue;
      for (const char *form : {verb.past, verb.participle}) {
        auto &lemmas = lemmas_by_form[form];
        if (std::find(lemmas.begin(), lemmas.end(), verb.lemma) == lemmas.end()) {
          lemmas.emplace_back(verb.lemma);
        }
      }
      by_participle.emplace(verb.participle, &verb);
    }
    // "be" has two past forms; the table lists "was".
    lemmas_by_form["were"].emplace_back("be");
  }
};

const IrregularIndex &Index() {
  static const IrregularIndex index;
  return index;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Short consonant-vowel-consonant stems double the final consonant
// ("stop" -> "stopped"). Limited to monosyllables; longer stems vary
// with stress and are left alone.
bool DoublesFinalConsonant(std::string_view lemma) {
  size_t n = lemma.size();
  if (n < 3 || n > 4) return false;
  char last = lemma[n - 1];
  if (IsVowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  if (!IsVowel(lemma[n - 2]) || IsVowel(lemma[n - 3])) return false;
  size_t vowels = std::count_if(lemma.begin(), lemma.end(), IsVowel);
  return vowels == 1;
}

}  // namespace

size_t IrregularVerbCount() { return Index().by_lemma.size(); }

std::string PastTense(std::string_view lemma) {
  std::string word(lemma);
  auto it = Index().by_lemma.find(word);
  if (it != Index().by_lemma.end()) return it->second->past;
  if (word.empty()) return word;
  if (word.back() == 'e') return word + "d";
  if (word.size() >= 2 && word.back() == 'y' && !IsVowel(word[word.size() - 2])) {
    return word.substr(0, word.size() - 1) + "ied";
  }
  if (DoublesFinalConsonant(word)) return word + word.back() + "ed";
  return word + "ed";
}

std::string ThirdPersonSingular(std::string_view lemma) {
  std::string word(lemma);
  if (word == "be") return "is";
  if (word == "have") return "has";
  if (word.empty()) return word;
  if (EndsWith(word, "s") || EndsWith(word, "x") || EndsWith(word, "z") ||
      EndsWith(word, "ch") || EndsWith(word, "sh") || EndsWith(word, "o")) {
    return word + "es";
  }
  if (word.size() >= 2 && word.back() == 'y' && !IsVowel(word[word.size() - 2])) {
    return word.substr(0, word.size() - 1) + "ies";
  }
  return word + "s";
}

std::string PastFromParticiple(std::string_view participle) {
  std::string word(participle);
  auto it = Index().by_participle.find(word);
  if (it != Index().by_participle.end()) return it->second->past;
  return word;
}

std::vector<std::string> LemmaCandidates(std::string_view form) {
  std::string word(form);
  std::vector<std::string> out;
  auto add = [&out](std::string candidate) {
    if (!candidate.empty() &&
        std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(std::move(candidate));
    }
  };
  auto it = Index().lemmas_by_form.find(word);
  if (it != Index().lemmas_by_form.end()) {
    for (const std::string &lemma : it->second) add(lemma);
  }
  add(word);
  size_t n = word.size();
  if (EndsWith(word, "ied") && n > 3) add(word.substr(0, n - 3) + "y");
  if (EndsWith(word, "ies") && n > 3) add(word.substr(0, n - 3) + "y");
  if (EndsWith(word, "ed") && n > 2) {
    std::string stem = word.substr(0, n - 2);
    add(stem);
    add(stem + "e");
    if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2]) {
      add(stem.substr(0, stem.size() - 1));
    }
  }
  if (EndsWith(word, "ing") && n > 3) {
    std::string stem = word.substr(0, n - 3);
    add(stem);
    add(stem + "e");
    if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2]) {
      add(stem.substr(0, stem.size() - 1));
    }
  }
  if (EndsWith(word, "es") && n > 2) add(word.substr(0, n - 2));
  if (EndsWith(word, "s") && n > 1) add(word.substr(0, n - 1));
  return out;
}

}  // namespace presup

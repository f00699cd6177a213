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

#ifndef PRESUP_MORPHOLOGY_H_
#define PRESUP_MORPHOLOGY_H_

#include <string>
#include <string_view>
#include <vector>

namespace presup {

// English verb inflection backed by an irregular-verb table and the
// usual -ed / -s spelling rules. Lemmas and forms are lowercase.

std::string PastTense(std::string_view lemma);
std::string ThirdPersonSingular(std::string_view lemma);

// Simple past corresponding to a past participle ("won" -> "won",
// "eaten" -> "ate", "arrived" -> "arrived").
std::string PastFromParticiple(std::string_view participle);

// Possible lemmas of an inflected form, most likely first. Always
// contains the form itself.
std::vector<std::string> LemmaCandidates(std::string_view form);

// Number of irregular lemmas in the built-in table.
size_t IrregularVerbCount();

}  // namespace presup

#endif  // PRESUP_MORPHOLOGY_H_

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

#ifndef PRESUP_SAMPLING_H_
#define PRESUP_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace presup {

// FNV-1a, 64-bit.
uint64_t Fnv1a64(std::string_view data);

// Seed for a per-key random stream, so results for one key do not depend
// on which other keys are processed.
uint64_t DeriveSeed(uint64_t seed, std::string_view key);

// `count` distinct indices drawn uniformly from [0, population), clamped
// to the population size, in draw order. Deterministic for a given seed
// on every platform (mt19937_64 with rejection sampling).
std::vector<size_t> SampleWithoutReplacement(size_t population, size_t count, uint64_t seed);

// Deterministic split assignment: true when `key` falls in the first
// `fraction` of the hash range.
bool InFirstSplit(std::string_view key, uint64_t seed, double fraction);

}  // namespace presup

#endif  // PRESUP_SAMPLING_H_

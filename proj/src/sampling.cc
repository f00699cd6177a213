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

#include "presup/sampling.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace presup {
namespace {

// Uniform integer in [0, bound) without modulo bias.
uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

uint64_t Fnv1a64(std::string_view data) {
  uint64_t hash = 14695981039346656037ull;
  for (char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

uint64_t DeriveSeed(uint64_t seed, std::string_view key) {
  return Fnv1a64(std::to_string(seed) + ":" + std::string(key));
}

std::vector<size_t> SampleWithoutReplacement(size_t population, size_t count, uint64_t seed) {
  count = std::min(count, population);
  std::vector<size_t> pool(population);
  std::iota(pool.begin(), pool.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < count; ++i) {
    size_t j = i + UniformBelow(rng, population - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

bool InFirstSplit(std::string_view key, uint64_t seed, double fraction) {
  // Top 53 bits as a uniform double in [0, 1).
  double u = static_cast<double>(DeriveSeed(seed, key) >> 11) * 0x1.0p-53;
  return u < fraction;
}

}  // namespace presup

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
#include <set>

#include <doctest.h>

namespace presup {
namespace {

TEST_CASE("fnv1a reference values") {
  CHECK(Fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(Fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("sampling without replacement") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    auto sample = SampleWithoutReplacement(10, 5, seed);
    CHECK(sample.size() == 5);
    CHECK(std::set<size_t>(sample.begin(), sample.end()).size() == 5);
    for (size_t i : sample) CHECK(i < 10);
    CHECK(sample == SampleWithoutReplacement(10, 5, seed));
  }
  CHECK(SampleWithoutReplacement(3, 5, 1).size() == 3);
  CHECK(SampleWithoutReplacement(0, 5, 1).empty());
  CHECK(SampleWithoutReplacement(5, 0, 1).empty());
}

TEST_CASE("sampling is roughly uniform") {
  std::vector<int> hits(6, 0);
  for (uint64_t seed = 0; seed < 6000; ++seed) {
    for (size_t i : SampleWithoutReplacement(6, 2, seed)) ++hits[i];
  }
  for (int h : hits) CHECK(std::abs(h - 2000) < 200);
}

TEST_CASE("split assignment") {
  CHECK(InFirstSplit("q1", 3, 1.0));
  CHECK_FALSE(InFirstSplit("q1", 3, 0.0));
  int first = 0;
  for (int i = 0; i < 2000; ++i) first += InFirstSplit("q" + std::to_string(i), 9, 0.3);
  CHECK(std::abs(first - 600) < 100);
  CHECK(DeriveSeed(1, "a") != DeriveSeed(1, "b"));
  CHECK(DeriveSeed(1, "a") == DeriveSeed(1, "a"));
}

}  // namespace
}  // namespace presup

// Copyright (c) 2026, the fovaug authors. All rights reserved.
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

#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "fovaug/rng.hpp"

using fovaug::Philox;

// Reference vectors from the published philox4x32-10 known-answer tests.
TEST_CASE("philox known answers") {
  const auto zeros = Philox::raw_block({0, 0, 0, 0}, {0, 0});
  CHECK(zeros == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du,
                                             0xbc57ac4cu, 0x9b00dbd8u});

  const auto ones = Philox::raw_block(
      {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
      {0xffffffffu, 0xffffffffu});
  CHECK(ones == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu,
                                            0xa20bc7c6u, 0x6d5451fdu});

  const auto pi = Philox::raw_block(
      {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
      {0xa4093822u, 0x299f31d0u});
  CHECK(pi == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu,
                                           0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are deterministic and distinct") {
  Philox a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool all_equal = true, differs_stream = false, differs_seed = false;
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    differs_stream = differs_stream || va != c.next_u64();
    differs_seed = differs_seed || va != d.next_u64();
  }
  CHECK(all_equal);
  CHECK(differs_stream);
  CHECK(differs_seed);
}

TEST_CASE("double and uniform ranges") {
  Philox rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform(-2.5, 3.5);
    CHECK(v >= -2.5);
    CHECK(v < 3.5);
  }
  CHECK(rng.uniform(4.0, 4.0) == 4.0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.uniform_index(7) < 7);
  }
}

TEST_CASE("uniform_index is roughly uniform") {
  Philox rng(5, 0);
  long long counts[10] = {};
  const int n = 200000;
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_index(10)];
  for (const long long c : counts) {
    const double expected = n / 10.0;
    CHECK(std::abs(c - expected) < 5.0 * std::sqrt(expected));
  }
}

TEST_CASE("hash_string matches FNV-1a reference values") {
  CHECK(Philox::hash_string("") == 0xcbf29ce484222325ull);
  CHECK(Philox::hash_string("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("view_stream separates images and views") {
  std::set<std::uint64_t> streams;
  for (const char* id : {"img0", "img1", "a/b.png"}) {
    for (int v = 0; v < 4; ++v) {
      streams.insert(Philox::view_stream(id, v));
    }
  }
  CHECK(streams.size() == 12);
  CHECK(Philox::view_stream("img0", 0) == Philox::view_stream("img0", 0));
}

TEST_CASE("split diverges from the parent") {
  Philox parent(9, 3);
  Philox child = parent.split(0);
  Philox other = parent.split(1);
  bool child_differs = false, children_differ = false;
  Philox base(9, 3);
  for (int i = 0; i < 32; ++i) {
    const auto v = base.next_u64();
    child_differs = child_differs || child.next_u64() != v;
    children_differ = children_differ || child.seed() != other.seed() ||
                      child.stream() != other.stream();
  }
  CHECK(child_differs);
  CHECK(children_differ);
}

TEST_CASE("normal draws have sane moments") {
  Philox rng(11, 0);
  double sum = 0.0, sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

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

#ifndef FOVAUG_RNG_HPP_
#define FOVAUG_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace fovaug {

/// Counter-based generator (Philox4x32-10, Salmon et al. reference constants).
///
/// A generator is addressed by (seed, stream): the 64-bit seed is the Philox
/// key, the 64-bit stream occupies the high counter words, and the low counter
/// words advance per 128-bit block. Distinct streams therefore never overlap,
/// any stream can be recreated from scratch, and values do not depend on the
/// order in which other streams are drawn from. The algorithm identifier
/// (`Philox::kAlgorithmId`) is recorded in every output that carries a seed.
class Philox {
 public:
  static constexpr const char* kAlgorithmId = "philox4x32-10";

  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t seed() const {
    return static_cast<std::uint64_t>(key_[0]) |
           (static_cast<std::uint64_t>(key_[1]) << 32);
  }
  std::uint64_t stream() const { return stream_; }

  std::uint32_t next_u32() {
    if (block_pos_ == 4) refill();
    return block_[block_pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi); returns lo exactly when lo == hi.
  double uniform(double lo, double hi) {
    if (lo == hi) return lo;
    double v = lo + next_double() * (hi - lo);
    if (v >= hi) v = std::nextafter(hi, lo);
    return v;
  }

  /// Unbiased uniform integer in [0, n), n >= 1 (Lemire's method).
  std::uint32_t uniform_index(std::uint32_t n) {
    std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      const std::uint32_t t = (0u - n) % n;
      while (lo < t) {
        m = static_cast<std::uint64_t>(next_u32()) * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  /// Standard Box-Muller; consumes two uniforms per value.
  double normal(double mean = 0.0, double stddev = 1.0) {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Fresh generator on an unrelated stream, derived from this stream's id.
  Philox split(std::uint64_t substream) const {
    return Philox(seed(), mix64(stream_ + 0x9E3779B97F4A7C15ull * (substream + 1)));
  }

  /// SplitMix64 finalizer: a 64-bit bijective mix.
  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// FNV-1a 64-bit, used to fold string ids into stream derivation.
  static constexpr std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ull;
    }
    return h;
  }

  /// Documented per-view stream derivation:
  ///   stream = mix64(fnv1a64(image_id) + 0x9E3779B97F4A7C15 * view_index).
  /// Together with the key (= master seed) this makes every view's draw
  /// sequence a pure function of (master_seed, image_id, view_index).
  static constexpr std::uint64_t view_stream(std::string_view image_id,
                                             std::uint64_t view_index) {
    return mix64(hash_string(image_id) + 0x9E3779B97F4A7C15ull * view_index);
  }

  /// One keyed 10-round block, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> raw_block(
      std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    round_once(ctr, key);
    for (int i = 0; i < 9; ++i) {
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
      round_once(ctr, key);
    }
    return ctr;
  }

 private:
  static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t* hi,
                      std::uint32_t* lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    *hi = static_cast<std::uint32_t>(p >> 32);
    *lo = static_cast<std::uint32_t>(p);
  }

  static void round_once(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(0xD2511F53u, ctr[0], &hi0, &lo0);
    mulhilo(0xCD9E8D57u, ctr[2], &hi1, &lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }

  void refill() {
    block_ = raw_block({static_cast<std::uint32_t>(counter_),
                        static_cast<std::uint32_t>(counter_ >> 32),
                        static_cast<std::uint32_t>(stream_),
                        static_cast<std::uint32_t>(stream_ >> 32)},
                       key_);
    block_pos_ = 0;
    ++counter_;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;
};

}  // namespace fovaug

#endif  // FOVAUG_RNG_HPP_

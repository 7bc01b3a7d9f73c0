// Copyright 2026 The DCAE Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCAE_RNG_HPP
#define DCAE_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "dcae/errors.hpp"

namespace dcae {

// SplitMix64 finalizer. Scrambles correlated seed material into
// well-distributed engine seeds.
constexpr std::uint64_t mix_bits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Counter-based seed split: every (trial, label) pair gets an independent
// stream from one master seed, so trials can run in parallel and still
// reproduce the serial results exactly.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t index,
                                    std::string_view label) {
  return mix_bits(master_seed ^ mix_bits(index ^ fnv1a64(label)));
}

// mt19937_64 with portable draw helpers. The engine itself is pinned by the
// standard; std::uniform_int_distribution and std::shuffle are not, so the
// bounded mappings are spelled out here to keep outputs identical across
// standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_raw() { return engine_(); }

  // Uniform integer in [lo, hi], both ends inclusive. Rejection sampling,
  // no modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ModelError("uniform_int: empty range");
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) {  // full 64-bit span
      return static_cast<std::int64_t>(next_raw());
    }
    const std::uint64_t zone = range * (std::numeric_limits<std::uint64_t>::max() / range);
    std::uint64_t r = next_raw();
    while (r >= zone) r = next_raw();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates shuffle driven by uniform_int.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i - 1)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dcae

#endif  // DCAE_RNG_HPP

/*
 * Copyright (c) 2026, The lggnn Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace lggnn {

/// Keyed counter-based generator: the value at counter c depends only on
/// (key, c), so draws can be addressed in any order. Sub-streams derive
/// independent keys.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  CounterRng substream(std::uint64_t id) const;

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform(std::uint64_t counter) const;
  /// Standard normal; consumes the (2c, 2c+1) uniform slots.
  double normal(std::uint64_t counter) const;

  std::uint64_t key() const { return key_; }

 private:
  struct FromKey {};
  CounterRng(FromKey, std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
};

/// Named sub-stream ids used across the library.
namespace streams {
inline constexpr std::uint64_t kLatents = 1;
inline constexpr std::uint64_t kEdges = 2;
inline constexpr std::uint64_t kFeatures = 3;
inline constexpr std::uint64_t kSplit = 4;
inline constexpr std::uint64_t kMonteCarlo = 5;
inline constexpr std::uint64_t kWeights = 6;
inline constexpr std::uint64_t kSubsample = 7;
}  // namespace streams

/// Sequential cursor over a CounterRng. Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(CounterRng rng) : rng_(rng) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return rng_.bits(counter_++); }
  double uniform() { return rng_.uniform(counter_++); }
  double normal() {
    double z = rng_.normal(counter_);
    counter_ += 1;
    return z;
  }
  /// Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates with this stream's draws; portable across standard libraries.
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace lggnn

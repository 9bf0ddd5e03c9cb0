// Copyright 2026 The sdgen Authors. All Rights Reserved.
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

#pragma once

#include <cstdint>

namespace sdgen {

/// Counter-based random stream.
///
/// Draw i is the SplitMix64 finalizer applied to
/// `mix(seed) + (i + 1) * 0x9e3779b97f4a7c15`. Every derived quantity
/// (doubles, bounded integers, coin flips) is computed from these 64-bit words
/// with integer arithmetic or exact scaling only, so a seed yields the same
/// sequence on every platform. The standard library distributions are avoided
/// because their algorithms are implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  /// Independent stream for replicate `index`, seeded with seed() + index.
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(seed_ + index);
  }

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 bits of resolution.
  double next_double();

  /// Uniform in [0, bound). `bound` must be positive. Unbiased (Lemire's
  /// multiply-and-reject).
  std::uint64_t next_below(std::uint64_t bound);

  /// True with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sdgen

// Copyright 2026 The qborn Authors
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

namespace qborn {

/**
 * Seedable, reproducible random stream (xoshiro256++ seeded via SplitMix64).
 *
 * Stream splitting: RngStream(seed, k) is an independent stream for every k,
 * so work item k of a run seeded with `seed` (shot k, grid row k, blob k)
 * always consumes the same random sequence no matter how the items are
 * scheduled across threads. All draws are pure 64-bit integer arithmetic
 * plus explicit float conversions, so sequences are identical across
 * platforms and standard libraries.
 */
class RngStream {
  public:
    RngStream(uint64_t seed, uint64_t stream);

    uint64_t next_u64();

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal deviate (Box-Muller, pair cached).
    double normal();

    /// Uniform integer in [0, n), unbiased. n must be nonzero.
    uint64_t below(uint64_t n);

  private:
    uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Child seed for nested stream splitting, e.g. per-query seeds that are
/// themselves split per shot. derive_seed(s, i) != s for all practical i.
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace qborn

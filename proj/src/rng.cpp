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

#include "qborn/rng.hpp"

#include <cmath>

namespace qborn {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

uint64_t splitmix64(uint64_t& x) {
    x += kGolden;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream) {
    // Fold (seed, stream) into one SplitMix64 state, then expand to the
    // four xoshiro words. SplitMix64 guarantees distinct, well-mixed states
    // for distinct (seed, stream) pairs.
    uint64_t x = seed;
    (void)splitmix64(x);
    x ^= (stream + 1) * kGolden;
    for (auto& word : state_) {
        word = splitmix64(x);
    }
}

uint64_t RngStream::next_u64() {
    // xoshiro256++
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
    const double phi = 2.0 * M_PI * uniform01();
    spare_ = r * std::cos(phi);
    has_spare_ = true;
    return r * std::sin(phi);
}

uint64_t RngStream::below(uint64_t n) {
    // Rejection sampling over the largest multiple of n.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t x = seed ^ (index + 1) * kGolden;
    return splitmix64(x);
}

}  // namespace qborn

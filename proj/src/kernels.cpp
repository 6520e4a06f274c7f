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

#include "qborn/kernels.hpp"

#include <cmath>

#include "qborn/threads.hpp"

namespace qborn::kern {

namespace {

// Index of the i-th basis state whose `bit` is 0: spread i around the bit.
inline uint64_t pair_base(uint64_t i, int bit) {
    const uint64_t low_mask = (uint64_t{1} << bit) - 1;
    return ((i & ~low_mask) << 1) | (i & low_mask);
}

// Reductions are summed over fixed-size blocks chosen from dim alone
// (never from the thread count), then combined in block order, so the
// result does not depend on how many threads ran.
constexpr uint64_t kReductionBlocks = 256;

}  // namespace

// The small-array cases delegate straight to the serial loops: entering an
// OpenMP region (even a disabled one) costs more than a whole 8-amplitude
// gate, and the trajectory sampler applies millions of those.

void apply_ry(cdouble* amps, uint64_t dim, int bit, double theta) {
    if (dim < kParallelCutoff) {
        ref::apply_ry(amps, dim, bit, theta);
        return;
    }
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const int64_t pairs = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < pairs; ++i) {
        const uint64_t i0 = pair_base(static_cast<uint64_t>(i), bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    }
}

void apply_rz(cdouble* amps, uint64_t dim, int bit, double theta) {
    if (dim < kParallelCutoff) {
        ref::apply_rz(amps, dim, bit, theta);
        return;
    }
    const cdouble lo = std::polar(1.0, -0.5 * theta);
    const cdouble hi = std::polar(1.0, 0.5 * theta);
    const int64_t pairs = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < pairs; ++i) {
        const uint64_t i0 = pair_base(static_cast<uint64_t>(i), bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        amps[i0] *= lo;
        amps[i1] *= hi;
    }
}

void apply_x(cdouble* amps, uint64_t dim, int bit) {
    if (dim < kParallelCutoff) {
        ref::apply_x(amps, dim, bit);
        return;
    }
    const int64_t pairs = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < pairs; ++i) {
        const uint64_t i0 = pair_base(static_cast<uint64_t>(i), bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        std::swap(amps[i0], amps[i1]);
    }
}

void apply_y(cdouble* amps, uint64_t dim, int bit) {
    if (dim < kParallelCutoff) {
        ref::apply_y(amps, dim, bit);
        return;
    }
    const int64_t pairs = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < pairs; ++i) {
        const uint64_t i0 = pair_base(static_cast<uint64_t>(i), bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = cdouble{0.0, -1.0} * a1;
        amps[i1] = cdouble{0.0, 1.0} * a0;
    }
}

void apply_z(cdouble* amps, uint64_t dim, int bit) {
    if (dim < kParallelCutoff) {
        ref::apply_z(amps, dim, bit);
        return;
    }
    const int64_t pairs = static_cast<int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < pairs; ++i) {
        const uint64_t i1 = pair_base(static_cast<uint64_t>(i), bit) | (uint64_t{1} << bit);
        amps[i1] = -amps[i1];
    }
}

void apply_cnot(cdouble* amps, uint64_t dim, int control_bit, int target_bit) {
    if (dim < kParallelCutoff) {
        ref::apply_cnot(amps, dim, control_bit, target_bit);
        return;
    }
    const int lo = control_bit < target_bit ? control_bit : target_bit;
    const int hi = control_bit < target_bit ? target_bit : control_bit;
    const uint64_t cmask = uint64_t{1} << control_bit;
    const uint64_t tmask = uint64_t{1} << target_bit;
    const int64_t quads = static_cast<int64_t>(dim >> 2);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t k = 0; k < quads; ++k) {
        // Insert a 0 at both bit positions, then set the control bit:
        // enumerates exactly the indices with control=1, target=0.
        uint64_t i = pair_base(static_cast<uint64_t>(k), lo);
        i = pair_base(i, hi);
        i |= cmask;
        std::swap(amps[i], amps[i | tmask]);
    }
}

void apply_global_phase(cdouble* amps, uint64_t dim, double theta) {
    if (dim < kParallelCutoff) {
        ref::apply_global_phase(amps, dim, theta);
        return;
    }
    const cdouble phase = std::polar(1.0, theta);
    const int64_t n = static_cast<int64_t>(dim);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < n; ++i) {
        amps[i] *= phase;
    }
}

double norm_sq(const cdouble* amps, uint64_t dim) {
    if (dim < kParallelCutoff) {
        return ref::norm_sq(amps, dim);
    }
    const uint64_t blocks = kReductionBlocks;
    std::vector<double> partial(blocks, 0.0);
    const int64_t nb = static_cast<int64_t>(blocks);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t blk = 0; blk < nb; ++blk) {
        const uint64_t begin = dim * static_cast<uint64_t>(blk) / blocks;
        const uint64_t end = dim * static_cast<uint64_t>(blk + 1) / blocks;
        double acc = 0.0;
        for (uint64_t j = begin; j < end; ++j) {
            acc += std::norm(amps[j]);
        }
        partial[static_cast<uint64_t>(blk)] = acc;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

cdouble dot_conj(const cdouble* a, const cdouble* b, uint64_t dim) {
    if (dim < kParallelCutoff) {
        return ref::dot_conj(a, b, dim);
    }
    const uint64_t blocks = kReductionBlocks;
    std::vector<cdouble> partial(blocks, cdouble{0.0, 0.0});
    const int64_t nb = static_cast<int64_t>(blocks);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t blk = 0; blk < nb; ++blk) {
        const uint64_t begin = dim * static_cast<uint64_t>(blk) / blocks;
        const uint64_t end = dim * static_cast<uint64_t>(blk + 1) / blocks;
        cdouble acc{0.0, 0.0};
        for (uint64_t j = begin; j < end; ++j) {
            acc += std::conj(a[j]) * b[j];
        }
        partial[static_cast<uint64_t>(blk)] = acc;
    }
    cdouble total{0.0, 0.0};
    for (const cdouble& p : partial) {
        total += p;
    }
    return total;
}

void born_probabilities(const cdouble* amps, uint64_t dim, double* out) {
    if (dim < kParallelCutoff) {
        ref::born_probabilities(amps, dim, out);
        return;
    }
    const int64_t n = static_cast<int64_t>(dim);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t i = 0; i < n; ++i) {
        out[i] = std::norm(amps[i]);
    }
}

namespace ref {

void apply_ry(cdouble* amps, uint64_t dim, int bit, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (uint64_t i = 0; i < dim >> 1; ++i) {
        const uint64_t i0 = pair_base(i, bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    }
}

void apply_rz(cdouble* amps, uint64_t dim, int bit, double theta) {
    const cdouble lo = std::polar(1.0, -0.5 * theta);
    const cdouble hi = std::polar(1.0, 0.5 * theta);
    for (uint64_t i = 0; i < dim >> 1; ++i) {
        const uint64_t i0 = pair_base(i, bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        amps[i0] *= lo;
        amps[i1] *= hi;
    }
}

void apply_x(cdouble* amps, uint64_t dim, int bit) {
    for (uint64_t i = 0; i < dim >> 1; ++i) {
        const uint64_t i0 = pair_base(i, bit);
        std::swap(amps[i0], amps[i0 | (uint64_t{1} << bit)]);
    }
}

void apply_y(cdouble* amps, uint64_t dim, int bit) {
    for (uint64_t i = 0; i < dim >> 1; ++i) {
        const uint64_t i0 = pair_base(i, bit);
        const uint64_t i1 = i0 | (uint64_t{1} << bit);
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = cdouble{0.0, -1.0} * a1;
        amps[i1] = cdouble{0.0, 1.0} * a0;
    }
}

void apply_z(cdouble* amps, uint64_t dim, int bit) {
    for (uint64_t i = 0; i < dim >> 1; ++i) {
        const uint64_t i1 = pair_base(i, bit) | (uint64_t{1} << bit);
        amps[i1] = -amps[i1];
    }
}

void apply_cnot(cdouble* amps, uint64_t dim, int control_bit, int target_bit) {
    const int lo = control_bit < target_bit ? control_bit : target_bit;
    const int hi = control_bit < target_bit ? target_bit : control_bit;
    const uint64_t cmask = uint64_t{1} << control_bit;
    const uint64_t tmask = uint64_t{1} << target_bit;
    for (uint64_t k = 0; k < dim >> 2; ++k) {
        uint64_t i = pair_base(k, lo);
        i = pair_base(i, hi);
        i |= cmask;
        std::swap(amps[i], amps[i | tmask]);
    }
}

void apply_global_phase(cdouble* amps, uint64_t dim, double theta) {
    const cdouble phase = std::polar(1.0, theta);
    for (uint64_t i = 0; i < dim; ++i) {
        amps[i] *= phase;
    }
}

double norm_sq(const cdouble* amps, uint64_t dim) {
    double acc = 0.0;
    for (uint64_t i = 0; i < dim; ++i) {
        acc += std::norm(amps[i]);
    }
    return acc;
}

cdouble dot_conj(const cdouble* a, const cdouble* b, uint64_t dim) {
    cdouble acc{0.0, 0.0};
    for (uint64_t i = 0; i < dim; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

void born_probabilities(const cdouble* amps, uint64_t dim, double* out) {
    for (uint64_t i = 0; i < dim; ++i) {
        out[i] = std::norm(amps[i]);
    }
}

}  // namespace ref

}  // namespace qborn::kern

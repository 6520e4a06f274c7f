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

#include <complex>
#include <cstdint>
#include <vector>

namespace qborn::kern {

using cdouble = std::complex<double>;

// Amplitude-array primitives behind the simulator and the state algebra.
//
// These operate on index BIT positions (0 = least significant index bit),
// not on qubit labels; callers translate with qubit_to_bit(). The default
// entry points below are OpenMP-parallel above kParallelCutoff amplitudes
// and fall back to the same code path executed serially below it, so
// results are bit-identical for every thread count. kern::ref holds the
// plain serial loops they are tested and benchmarked against.

/// Arrays smaller than this are processed serially (fork/join overhead
/// dominates far below it).
constexpr uint64_t kParallelCutoff = uint64_t{1} << 15;

/// In-place Ry(theta) on the given index bit:
/// (a0, a1) -> (c*a0 - s*a1, s*a0 + c*a1) with c = cos(theta/2), s = sin(theta/2).
void apply_ry(cdouble* amps, uint64_t dim, int bit, double theta);

/// In-place Rz(theta): a0 *= exp(-i theta/2), a1 *= exp(+i theta/2).
void apply_rz(cdouble* amps, uint64_t dim, int bit, double theta);

/// In-place Pauli gates.
void apply_x(cdouble* amps, uint64_t dim, int bit);
void apply_y(cdouble* amps, uint64_t dim, int bit);
void apply_z(cdouble* amps, uint64_t dim, int bit);

/// In-place CNOT with the given control and target index bits.
void apply_cnot(cdouble* amps, uint64_t dim, int control_bit, int target_bit);

/// Multiplies every amplitude by exp(i theta).
void apply_global_phase(cdouble* amps, uint64_t dim, double theta);

/// Sum of |a_j|^2. Deterministic fixed-block reduction.
double norm_sq(const cdouble* amps, uint64_t dim);

/// Sum of conj(a_j) * b_j. Deterministic fixed-block reduction.
cdouble dot_conj(const cdouble* a, const cdouble* b, uint64_t dim);

/// out[j] = |a_j|^2.
void born_probabilities(const cdouble* amps, uint64_t dim, double* out);

// Serial reference implementations (straight loops, in-order accumulation).
namespace ref {

void apply_ry(cdouble* amps, uint64_t dim, int bit, double theta);
void apply_rz(cdouble* amps, uint64_t dim, int bit, double theta);
void apply_x(cdouble* amps, uint64_t dim, int bit);
void apply_y(cdouble* amps, uint64_t dim, int bit);
void apply_z(cdouble* amps, uint64_t dim, int bit);
void apply_cnot(cdouble* amps, uint64_t dim, int control_bit, int target_bit);
void apply_global_phase(cdouble* amps, uint64_t dim, double theta);
double norm_sq(const cdouble* amps, uint64_t dim);
cdouble dot_conj(const cdouble* a, const cdouble* b, uint64_t dim);
void born_probabilities(const cdouble* amps, uint64_t dim, double* out);

}  // namespace ref

}  // namespace qborn::kern

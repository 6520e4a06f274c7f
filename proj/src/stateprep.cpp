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

#include "qborn/stateprep.hpp"

#include <bit>
#include <cmath>

#include "qborn/errors.hpp"
#include "qborn/simulate.hpp"

namespace qborn {

namespace {

// Rotations this small are dropped; a full block of them elides the whole
// multiplexor. Keeps basis-state targets at zero gates while staying far
// inside the 1e-9 fidelity budget.
constexpr double kTinyAngle = 1e-14;
// Amplitudes beyond this imaginary magnitude trigger a phase (Rz) stage.
constexpr double kImagThreshold = 1e-14;
// Below this, both children of a disentangling pair count as dead and the
// rotation angle is defined as 0.
constexpr double kZeroBranch = 1e-15;

uint64_t gray(uint64_t i) {
    return i ^ (i >> 1);
}

}  // namespace

void append_multiplexed_rotation(GateCircuit& circuit, GateKind axis, std::span<const int> controls,
                                 int target_qubit, std::span<const double> angles, bool mirrored) {
    if (axis != GateKind::kRy && axis != GateKind::kRz) {
        throw ValidationError("multiplexed rotation axis must be RY or RZ");
    }
    const int k = static_cast<int>(controls.size());
    const uint64_t m = uint64_t{1} << k;
    if (angles.size() != m) {
        throw DimensionError("multiplexed rotation over " + std::to_string(k) +
                             " controls needs " + std::to_string(m) + " angles, got " +
                             std::to_string(angles.size()));
    }
    const auto rotation = [&](double angle) {
        return axis == GateKind::kRy ? Gate::ry(target_qubit, angle)
                                     : Gate::rz(target_qubit, angle);
    };
    if (k == 0) {
        if (std::abs(angles[0]) > kTinyAngle) {
            circuit.push(rotation(angles[0]));
        }
        return;
    }

    // Fast Walsh-Hadamard transform of the angle vector, then the Gray-code
    // permutation: rotation slot i carries h[gray(i)] / 2^k, which makes the
    // interleaved CNOT sign pattern reproduce every requested angle exactly.
    std::vector<double> h(angles.begin(), angles.end());
    for (uint64_t len = 1; len < m; len <<= 1) {
        for (uint64_t block = 0; block < m; block += len << 1) {
            for (uint64_t j = block; j < block + len; ++j) {
                const double a = h[j];
                const double b = h[j + len];
                h[j] = a + b;
                h[j + len] = a - b;
            }
        }
    }
    std::vector<double> slot(m);
    double max_abs = 0.0;
    for (uint64_t i = 0; i < m; ++i) {
        slot[i] = h[gray(i)] / static_cast<double>(m);
        max_abs = std::max(max_abs, std::abs(slot[i]));
    }
    if (max_abs <= kTinyAngle) {
        return;  // identity block
    }

    // Control position for the CNOT after rotation slot i: the bit where
    // gray(i) and gray(i+1) differ (cyclically, so the last CNOT sits on the
    // most significant control).
    const auto control_for = [&](uint64_t i) {
        const uint64_t mask = gray(i) ^ gray((i + 1) & (m - 1));
        const int bit = std::countr_zero(mask);
        return controls[static_cast<size_t>(k - 1 - bit)];
    };

    if (!mirrored) {
        for (uint64_t i = 0; i < m; ++i) {
            if (std::abs(slot[i]) > kTinyAngle) {
                circuit.push(rotation(slot[i]));
            }
            circuit.push(Gate::cnot(control_for(i), target_qubit));
        }
    } else {
        for (uint64_t i = m; i-- > 0;) {
            circuit.push(Gate::cnot(control_for(i), target_qubit));
            if (std::abs(slot[i]) > kTinyAngle) {
                circuit.push(rotation(slot[i]));
            }
        }
    }
}

PrepReport prepare_state(const StateVector& target) {
    const int n = target.n_qubits();
    if (n < 1) {
        throw ValidationError("prepare_state needs at least one qubit");
    }

    std::vector<cdouble> vec = target.amplitudes();
    GateCircuit disentangler(n);
    std::vector<int> controls;

    for (int q = n - 1; q >= 0; --q) {
        const uint64_t half = vec.size() >> 1;
        controls.assign(static_cast<size_t>(q), 0);
        for (int c = 0; c < q; ++c) {
            controls[static_cast<size_t>(c)] = c;
        }

        bool complex_stage = false;
        for (const cdouble& a : vec) {
            if (std::abs(a.imag()) > kImagThreshold) {
                complex_stage = true;
                break;
            }
        }

        // Phase stage: rotate each pair to a common phase so the Ry stage
        // can merge it into a single branch.
        if (complex_stage) {
            std::vector<double> rz_angles(half, 0.0);
            for (uint64_t p = 0; p < half; ++p) {
                const cdouble a0 = vec[2 * p];
                const cdouble a1 = vec[2 * p + 1];
                if (std::abs(a0) < kZeroBranch && std::abs(a1) < kZeroBranch) {
                    continue;
                }
                const double phi0 = std::abs(a0) < kZeroBranch ? 0.0 : std::arg(a0);
                const double phi1 = std::abs(a1) < kZeroBranch ? 0.0 : std::arg(a1);
                rz_angles[p] = phi0 - phi1;
                vec[2 * p] = a0 * std::polar(1.0, -0.5 * rz_angles[p]);
                vec[2 * p + 1] = a1 * std::polar(1.0, 0.5 * rz_angles[p]);
            }
            append_multiplexed_rotation(disentangler, GateKind::kRz, controls, q, rz_angles,
                                        /*mirrored=*/false);
        }

        // Magnitude stage: rotate each pair so the odd branch vanishes.
        std::vector<double> ry_angles(half, 0.0);
        std::vector<cdouble> next(half, cdouble{0.0, 0.0});
        for (uint64_t p = 0; p < half; ++p) {
            const cdouble a0 = vec[2 * p];
            const cdouble a1 = vec[2 * p + 1];
            if (std::abs(a0) < kZeroBranch && std::abs(a1) < kZeroBranch) {
                next[p] = a0;
                continue;
            }
            double theta;
            if (complex_stage) {
                theta = -2.0 * std::atan2(std::abs(a1), std::abs(a0));
            } else {
                theta = -2.0 * std::atan2(a1.real(), a0.real());
            }
            ry_angles[p] = theta;
            const double c = std::cos(0.5 * theta);
            const double s = std::sin(0.5 * theta);
            next[p] = c * a0 - s * a1;
        }
        // Mirrored emission makes this block start with the CNOT the Rz
        // block ended with; push() cancels the pair.
        append_multiplexed_rotation(disentangler, GateKind::kRy, controls, q, ry_angles,
                                    /*mirrored=*/complex_stage);
        vec = std::move(next);
    }

    // vec[0] is now the unit scalar the disentangler left behind.
    const double alpha = std::arg(vec[0]);
    GateCircuit prep(n);
    if (std::abs(alpha) > kTinyAngle) {
        prep.push(Gate::global_phase(alpha));
    }
    prep.append(adjoint(disentangler));

    const StateVector prepared = simulate(prep);
    const double fidelity = std::min(1.0, projector_overlap(prepared, target));
    PrepReport report{std::move(prep), 0, fidelity};
    report.cnot_count = report.circuit.cnot_count();
    return report;
}

GateCircuit prepare_inverse(const StateVector& target) {
    return adjoint(prepare_state(target).circuit);
}

}  // namespace qborn

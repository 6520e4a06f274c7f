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

#include "qborn/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "qborn/errors.hpp"
#include "qborn/kernels.hpp"
#include "qborn/rng.hpp"
#include "qborn/threads.hpp"

namespace qborn {

namespace {

void apply_gate(std::vector<cdouble>& amps, int n_qubits, const Gate& gate) {
    const uint64_t dim = amps.size();
    switch (gate.kind) {
        case GateKind::kRy:
            kern::apply_ry(amps.data(), dim, qubit_to_bit(gate.q0, n_qubits), gate.angle);
            break;
        case GateKind::kRz:
            kern::apply_rz(amps.data(), dim, qubit_to_bit(gate.q0, n_qubits), gate.angle);
            break;
        case GateKind::kX:
            kern::apply_x(amps.data(), dim, qubit_to_bit(gate.q0, n_qubits));
            break;
        case GateKind::kCnot:
            kern::apply_cnot(amps.data(), dim, qubit_to_bit(gate.q0, n_qubits),
                             qubit_to_bit(gate.q1, n_qubits));
            break;
        case GateKind::kGlobalPhase:
            kern::apply_global_phase(amps.data(), dim, gate.angle);
            break;
    }
}

void run_gates(std::vector<cdouble>& amps, const GateCircuit& circuit) {
    for (const Gate& g : circuit.gates()) {
        apply_gate(amps, circuit.n_qubits(), g);
    }
}

// Pauli index convention for depolarizing draws: 1 = X, 2 = Y, 3 = Z.
void apply_pauli(std::vector<cdouble>& amps, int n_qubits, int qubit, int pauli) {
    const int bit = qubit_to_bit(qubit, n_qubits);
    switch (pauli) {
        case 1:
            kern::apply_x(amps.data(), amps.size(), bit);
            break;
        case 2:
            kern::apply_y(amps.data(), amps.size(), bit);
            break;
        case 3:
            kern::apply_z(amps.data(), amps.size(), bit);
            break;
        default:
            break;
    }
}

std::vector<double> cumulative_born(const std::vector<cdouble>& amps) {
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    return cdf;
}

uint64_t sample_index(const std::vector<double>& cdf, double u) {
    // u in [0, 1); scale by the actual total to stay robust to norm drift.
    const double target = u * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    return it == cdf.end() ? cdf.size() - 1 : static_cast<uint64_t>(it - cdf.begin());
}

ShotRecord collect_counts(const std::vector<uint64_t>& hits, uint64_t shots, int n_qubits) {
    ShotRecord record;
    record.shots = shots;
    for (uint64_t index = 0; index < hits.size(); ++index) {
        if (hits[index] > 0) {
            record.counts[index_to_bits(index, n_qubits)] = hits[index];
        }
    }
    return record;
}

// One full stochastic trajectory; returns the measured basis index.
// `amps` is caller-provided scratch of size 2^n (reused across shots).
uint64_t run_trajectory(const GateCircuit& circuit, const NoiseSpec& noise, RngStream& rng,
                        std::vector<cdouble>& amps) {
    const int n = circuit.n_qubits();
    std::fill(amps.begin(), amps.end(), cdouble{0.0, 0.0});
    amps[0] = 1.0;
    if (noise.p_reset_error > 0.0) {
        for (int q = 0; q < n; ++q) {
            if (rng.uniform01() < noise.p_reset_error) {
                apply_pauli(amps, n, q, 1);
            }
        }
    }
    for (const Gate& g : circuit.gates()) {
        apply_gate(amps, n, g);
        if (g.is_single_qubit() && noise.p_depol_1q > 0.0) {
            if (rng.uniform01() < noise.p_depol_1q) {
                apply_pauli(amps, n, g.q0, 1 + static_cast<int>(rng.below(3)));
            }
        } else if (g.kind == GateKind::kCnot && noise.p_depol_2q > 0.0) {
            if (rng.uniform01() < noise.p_depol_2q) {
                // 15 non-identity two-qubit Paulis, encoded base 4.
                const int pair = 1 + static_cast<int>(rng.below(15));
                apply_pauli(amps, n, g.q0, pair >> 2);
                apply_pauli(amps, n, g.q1, pair & 3);
            }
        }
    }
    // Inverse-CDF draw without materializing the prefix array: walk the
    // cumulative mass until the uniform threshold is crossed.
    const double u = rng.uniform01();
    double total = 0.0;
    for (const cdouble& a : amps) {
        total += std::norm(a);
    }
    const double target = u * total;
    double acc = 0.0;
    uint64_t index = amps.size() - 1;
    for (uint64_t j = 0; j < amps.size(); ++j) {
        acc += std::norm(amps[j]);
        if (acc > target) {
            index = j;
            break;
        }
    }
    if (noise.p_readout_flip > 0.0) {
        for (int q = 0; q < n; ++q) {
            if (rng.uniform01() < noise.p_readout_flip) {
                index ^= uint64_t{1} << qubit_to_bit(q, n);
            }
        }
    }
    return index;
}

}  // namespace

void NoiseSpec::validate() const {
    for (double p : {p_depol_1q, p_depol_2q, p_readout_flip, p_reset_error}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("noise probability " + std::to_string(p) + " outside [0, 1]");
        }
    }
}

StateVector simulate(const GateCircuit& circuit, const StateVector& initial) {
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw DimensionError("simulate: state has " + std::to_string(initial.n_qubits()) +
                             " qubits, circuit has " + std::to_string(circuit.n_qubits()));
    }
    std::vector<cdouble> amps = initial.amplitudes();
    run_gates(amps, circuit);
    return StateVector(std::move(amps));
}

StateVector simulate(const GateCircuit& circuit) {
    return simulate(circuit, StateVector::zero_state(circuit.n_qubits()));
}

ShotRecord sample_shots(const GateCircuit& circuit, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    const StateVector state = simulate(circuit);
    const std::vector<double> cdf = cumulative_born(state.amplitudes());
    std::vector<uint64_t> hits(state.dim(), 0);
    const int64_t n_shots = static_cast<int64_t>(shots);
#pragma omp parallel num_threads(max_threads()) if (shots >= 512)
    {
        std::vector<uint64_t> local(state.dim(), 0);
#pragma omp for schedule(static)
        for (int64_t s = 0; s < n_shots; ++s) {
            RngStream rng(seed, static_cast<uint64_t>(s));
            ++local[sample_index(cdf, rng.uniform01())];
        }
#pragma omp critical
        {
            for (size_t i = 0; i < hits.size(); ++i) {
                hits[i] += local[i];
            }
        }
    }
    return collect_counts(hits, shots, circuit.n_qubits());
}

ShotRecord sample_shots_noisy(const GateCircuit& circuit, const NoiseSpec& noise, uint64_t shots,
                              uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    noise.validate();
    const uint64_t dim = uint64_t{1} << circuit.n_qubits();
    std::vector<uint64_t> hits(dim, 0);
    const int64_t n_shots = static_cast<int64_t>(shots);
#pragma omp parallel num_threads(max_threads()) if (shots >= 64)
    {
        std::vector<uint64_t> local(dim, 0);
        std::vector<cdouble> scratch(dim);
#pragma omp for schedule(static)
        for (int64_t s = 0; s < n_shots; ++s) {
            RngStream rng(seed, static_cast<uint64_t>(s));
            ++local[run_trajectory(circuit, noise, rng, scratch)];
        }
#pragma omp critical
        {
            for (uint64_t i = 0; i < dim; ++i) {
                hits[i] += local[i];
            }
        }
    }
    return collect_counts(hits, shots, circuit.n_qubits());
}

double born_probability(const GateCircuit& circuit, uint64_t index) {
    const StateVector state = simulate(circuit);
    return std::norm(state.amplitude(index));
}

}  // namespace qborn

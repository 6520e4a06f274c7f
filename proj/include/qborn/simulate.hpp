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
#include <map>
#include <string>
#include <vector>

#include "qborn/circuit.hpp"
#include "qborn/statevec.hpp"

namespace qborn {

/// Measured bitstring counts from `shots` executions. Keys are bitstrings in
/// the global qubit order (qubit 0 first); only observed outcomes appear.
struct ShotRecord {
    uint64_t shots = 0;
    std::map<std::string, uint64_t> counts;

    uint64_t count_of(const std::string& bits) const {
        const auto it = counts.find(bits);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Stochastic error channel probabilities, all in [0, 1].
struct NoiseSpec {
    double p_depol_1q = 0.0;      // uniform non-identity Pauli after each 1q gate
    double p_depol_2q = 0.0;      // uniform non-identity 2q Pauli after each CNOT
    double p_readout_flip = 0.0;  // per-qubit classical bit flip after measurement
    double p_reset_error = 0.0;   // per-qubit X on the initial state

    bool is_zero() const {
        return p_depol_1q == 0.0 && p_depol_2q == 0.0 && p_readout_flip == 0.0 &&
               p_reset_error == 0.0;
    }
    void validate() const;
};

/// Applies every gate of `circuit` to `initial`, exactly.
StateVector simulate(const GateCircuit& circuit, const StateVector& initial);

/// simulate() starting from |0...0>.
StateVector simulate(const GateCircuit& circuit);

/**
 * Samples `shots` measurement outcomes of circuit|0...0> from the exact Born
 * distribution. The circuit is simulated once; shot s draws from
 * RngStream(seed, s), so records are reproducible for a fixed seed and
 * independent of shot scheduling.
 */
ShotRecord sample_shots(const GateCircuit& circuit, uint64_t shots, uint64_t seed);

/**
 * Trajectory sampler: each shot re-simulates the circuit with stochastic
 * errors drawn from RngStream(seed, s) in a fixed order: per-qubit reset
 * X errors on the initial state, a uniformly chosen non-identity Pauli on
 * the touched qubit(s) after each 1q/2q gate (with probability p_depol_1q /
 * p_depol_2q), then measurement and per-qubit readout flips. Draws guarded
 * by a zero probability are skipped, so with noise.is_zero() the record is
 * bit-identical to sample_shots with the same seed.
 */
ShotRecord sample_shots_noisy(const GateCircuit& circuit, const NoiseSpec& noise, uint64_t shots,
                              uint64_t seed);

/// Exact Born probability of measuring |index> on circuit|0...0>.
double born_probability(const GateCircuit& circuit, uint64_t index);

}  // namespace qborn

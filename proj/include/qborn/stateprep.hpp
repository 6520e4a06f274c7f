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

#include <span>

#include "qborn/circuit.hpp"
#include "qborn/statevec.hpp"

namespace qborn {

/// Result of compiling a target state into primitive gates. The circuit
/// reproduces the target exactly (including global phase, via a PHASE gate
/// when needed); `fidelity` is |<prepared|target>|^2 measured by simulating
/// the circuit, and the CNOT count obeys 2^(n+1) - 2n.
struct PrepReport {
    GateCircuit circuit;
    int cnot_count = 0;
    double fidelity = 0.0;
};

/**
 * Compiles `target` into a circuit preparing it from |0...0>.
 *
 * Recursive disentangling with uniformly controlled rotations: for each
 * qubit from the least significant up, a multiplexed Rz equalizes the
 * phases of amplitude pairs and a multiplexed Ry zeroes the odd halves,
 * shrinking the live register by one qubit; the prep circuit is the adjoint
 * of the disentangler plus a global phase correction. Each multiplexor uses
 * the Gray-code CNOT pattern (2^k CNOTs for k controls); the Rz multiplexor
 * is emitted forward and the Ry one mirrored, so one CNOT pair per stage
 * cancels. Rz layers are skipped entirely while the working vector is real
 * (|Im| < 1e-14), so real targets compile to Ry/CNOT circuits only.
 */
PrepReport prepare_state(const StateVector& target);

/// Circuit mapping `target` to |0...0> exactly; the adjoint of
/// prepare_state(target).circuit.
GateCircuit prepare_inverse(const StateVector& target);

/// Appends the uniformly controlled rotation diag over `controls` (entry
/// angles[p] applied to `target_qubit` when the controls read p, controls[0]
/// being the most significant pattern bit). `mirrored` reverses the emission
/// order, which starts the block with the CNOT that a forward block ends
/// with. Exposed for direct testing against the block-diagonal matrix.
void append_multiplexed_rotation(GateCircuit& circuit, GateKind axis, std::span<const int> controls,
                                 int target_qubit, std::span<const double> angles, bool mirrored);

/// Largest CNOT count prepare_state may emit for an n-qubit target.
inline int prep_cnot_bound(int n_qubits) {
    return (2 << n_qubits) - 2 * n_qubits;
}

}  // namespace qborn

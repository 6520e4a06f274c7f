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
#include <iosfwd>
#include <string>
#include <vector>

namespace qborn {

enum class GateKind {
    kRy,
    kRz,
    kX,
    kCnot,
    kGlobalPhase,
};

/// One primitive gate. `q0` is the only qubit for single-qubit gates and the
/// control for CNOT; `q1` is the CNOT target. GLOBAL_PHASE uses no qubits.
struct Gate {
    GateKind kind;
    int q0 = -1;
    int q1 = -1;
    double angle = 0.0;

    static Gate ry(int qubit, double angle) {
        return {GateKind::kRy, qubit, -1, angle};
    }
    static Gate rz(int qubit, double angle) {
        return {GateKind::kRz, qubit, -1, angle};
    }
    static Gate x(int qubit) {
        return {GateKind::kX, qubit, -1, 0.0};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::kCnot, control, target, 0.0};
    }
    static Gate global_phase(double angle) {
        return {GateKind::kGlobalPhase, -1, -1, angle};
    }

    bool is_single_qubit() const {
        return kind == GateKind::kRy || kind == GateKind::kRz || kind == GateKind::kX;
    }

    bool operator==(const Gate&) const = default;
};

/// Ordered gate sequence on a fixed-width register. push() validates qubit
/// indices and cancels a gate against an immediately preceding identical
/// self-inverse gate (X-X and CNOT-CNOT pairs), which keeps compiled
/// circuits free of back-to-back no-ops.
class GateCircuit {
  public:
    explicit GateCircuit(int n_qubits);

    void push(const Gate& gate);
    /// Appends all gates of `other` (same width required).
    void append(const GateCircuit& other);

    int n_qubits() const {
        return n_qubits_;
    }
    const std::vector<Gate>& gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    int cnot_count() const;

    bool operator==(const GateCircuit&) const = default;

  private:
    std::vector<Gate> gates_;
    int n_qubits_;
};

/// Inverse circuit: reversed order, negated angles; X and CNOT self-inverse.
GateCircuit adjoint(const GateCircuit& circuit);

// Line-oriented text format:
//   QUBITS <n>
//   RY q<i> <angle>
//   RZ q<i> <angle>
//   X q<i>
//   CNOT q<c> q<t>
//   PHASE <angle>
// Angles are printed with 17 significant digits (exact double round-trip).
std::string to_text(const GateCircuit& circuit);
GateCircuit circuit_from_text(const std::string& text);
GateCircuit circuit_from_stream(std::istream& in);

}  // namespace qborn

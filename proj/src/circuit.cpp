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

#include "qborn/circuit.hpp"

#include <cstdio>
#include <sstream>

#include "qborn/errors.hpp"

namespace qborn {

namespace {

void check_qubit(int qubit, int n_qubits, const char* what) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw ValidationError(std::string(what) + " qubit " + std::to_string(qubit) +
                              " out of range for width " + std::to_string(n_qubits));
    }
}

std::string format_angle(double angle) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", angle);
    return buf;
}

int parse_qubit_token(const std::string& token, int line_no) {
    if (token.size() < 2 || token[0] != 'q') {
        throw DataError("circuit line " + std::to_string(line_no) + ": expected qubit token, got '" +
                        token + "'");
    }
    try {
        return std::stoi(token.substr(1));
    } catch (...) {
        throw DataError("circuit line " + std::to_string(line_no) + ": bad qubit token '" + token +
                        "'");
    }
}

double parse_angle_token(const std::string& token, int line_no) {
    try {
        size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("");
        }
        return value;
    } catch (...) {
        throw DataError("circuit line " + std::to_string(line_no) + ": bad angle '" + token + "'");
    }
}

}  // namespace

GateCircuit::GateCircuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits <= 0) {
        throw ValidationError("GateCircuit needs at least one qubit");
    }
}

void GateCircuit::push(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::kRy:
        case GateKind::kRz:
        case GateKind::kX:
            check_qubit(gate.q0, n_qubits_, "gate");
            break;
        case GateKind::kCnot:
            check_qubit(gate.q0, n_qubits_, "control");
            check_qubit(gate.q1, n_qubits_, "target");
            if (gate.q0 == gate.q1) {
                throw ValidationError("CNOT control and target must be distinct");
            }
            break;
        case GateKind::kGlobalPhase:
            break;
    }
    // Peephole: adjacent identical X or CNOT pairs are the identity.
    if (!gates_.empty() && (gate.kind == GateKind::kX || gate.kind == GateKind::kCnot) &&
        gates_.back() == gate) {
        gates_.pop_back();
        return;
    }
    gates_.push_back(gate);
}

void GateCircuit::append(const GateCircuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionError("append: circuit widths differ, " + std::to_string(n_qubits_) +
                             " vs " + std::to_string(other.n_qubits_));
    }
    for (const Gate& g : other.gates_) {
        push(g);
    }
}

int GateCircuit::cnot_count() const {
    int count = 0;
    for (const Gate& g : gates_) {
        count += g.kind == GateKind::kCnot;
    }
    return count;
}

GateCircuit adjoint(const GateCircuit& circuit) {
    GateCircuit inverse(circuit.n_qubits());
    const auto& gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::kRy || g.kind == GateKind::kRz || g.kind == GateKind::kGlobalPhase) {
            g.angle = -g.angle;
        }
        inverse.push(g);
    }
    return inverse;
}

std::string to_text(const GateCircuit& circuit) {
    std::string out = "QUBITS " + std::to_string(circuit.n_qubits()) + "\n";
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::kRy:
                out += "RY q" + std::to_string(g.q0) + " " + format_angle(g.angle) + "\n";
                break;
            case GateKind::kRz:
                out += "RZ q" + std::to_string(g.q0) + " " + format_angle(g.angle) + "\n";
                break;
            case GateKind::kX:
                out += "X q" + std::to_string(g.q0) + "\n";
                break;
            case GateKind::kCnot:
                out += "CNOT q" + std::to_string(g.q0) + " q" + std::to_string(g.q1) + "\n";
                break;
            case GateKind::kGlobalPhase:
                out += "PHASE " + format_angle(g.angle) + "\n";
                break;
        }
    }
    return out;
}

GateCircuit circuit_from_stream(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n_qubits = -1;
    std::vector<Gate> gates;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string op;
        fields >> op;
        std::vector<std::string> args;
        for (std::string tok; fields >> tok;) {
            args.push_back(tok);
        }
        if (op == "QUBITS") {
            if (n_qubits != -1 || args.size() != 1) {
                throw DataError("circuit line " + std::to_string(line_no) +
                                ": malformed or repeated QUBITS header");
            }
            n_qubits = parse_qubit_token("q" + args[0], line_no);
            continue;
        }
        if (n_qubits == -1) {
            throw DataError("circuit text must start with a QUBITS header");
        }
        if (op == "RY" && args.size() == 2) {
            gates.push_back(Gate::ry(parse_qubit_token(args[0], line_no),
                                     parse_angle_token(args[1], line_no)));
        } else if (op == "RZ" && args.size() == 2) {
            gates.push_back(Gate::rz(parse_qubit_token(args[0], line_no),
                                     parse_angle_token(args[1], line_no)));
        } else if (op == "X" && args.size() == 1) {
            gates.push_back(Gate::x(parse_qubit_token(args[0], line_no)));
        } else if (op == "CNOT" && args.size() == 2) {
            gates.push_back(Gate::cnot(parse_qubit_token(args[0], line_no),
                                       parse_qubit_token(args[1], line_no)));
        } else if (op == "PHASE" && args.size() == 1) {
            gates.push_back(Gate::global_phase(parse_angle_token(args[0], line_no)));
        } else {
            throw DataError("circuit line " + std::to_string(line_no) + ": unrecognized gate '" +
                            line + "'");
        }
    }
    if (n_qubits == -1) {
        throw DataError("circuit text is empty (missing QUBITS header)");
    }
    GateCircuit circuit(n_qubits);
    for (const Gate& g : gates) {
        circuit.push(g);
    }
    return circuit;
}

GateCircuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    return circuit_from_stream(in);
}

}  // namespace qborn

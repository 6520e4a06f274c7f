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

#include <doctest.h>

#include <cmath>

#include "qborn/errors.hpp"
#include "qborn/simulate.hpp"
#include "test_util.hpp"

using namespace qborn;

namespace {

// Block-diagonal oracle for a uniformly controlled rotation: applies
// R(angles[p]) on the target when the controls (controls[0] most
// significant) read p. Column construction, no circuit machinery.
StateVector mux_oracle_column(GateKind axis, const std::vector<int>& controls, int target,
                              const std::vector<double>& angles, int n_qubits, uint64_t basis) {
    uint64_t pattern = 0;
    for (int c : controls) {
        pattern = (pattern << 1) | ((basis >> qubit_to_bit(c, n_qubits)) & 1);
    }
    const double theta = angles[pattern];
    const int tb = qubit_to_bit(target, n_qubits);
    const uint64_t j0 = basis & ~(uint64_t{1} << tb);
    const uint64_t j1 = j0 | (uint64_t{1} << tb);
    std::vector<cdouble> out(uint64_t{1} << n_qubits, cdouble{0.0, 0.0});
    const bool one = (basis >> tb) & 1;
    if (axis == GateKind::kRy) {
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        if (!one) {
            out[j0] = c;
            out[j1] = s;
        } else {
            out[j0] = -s;
            out[j1] = c;
        }
    } else {
        out[basis] = std::polar(1.0, one ? 0.5 * theta : -0.5 * theta);
    }
    return StateVector(std::move(out));
}

void check_mux(GateKind axis, const std::vector<int>& controls, int target, int n_qubits,
               uint64_t seed, bool mirrored) {
    RngStream rng(seed, 2);
    std::vector<double> angles(uint64_t{1} << controls.size());
    for (double& a : angles) {
        a = rng.uniform(-M_PI, M_PI);
    }
    GateCircuit circuit(n_qubits);
    append_multiplexed_rotation(circuit, axis, controls, target, angles, mirrored);
    CHECK(circuit.cnot_count() == (controls.empty() ? 0 : 1 << controls.size()));
    for (uint64_t basis = 0; basis < (uint64_t{1} << n_qubits); ++basis) {
        const StateVector got = simulate(circuit, StateVector::basis_state(n_qubits, basis));
        const StateVector want =
            mux_oracle_column(axis, controls, target, angles, n_qubits, basis);
        CHECK(test::max_amplitude_delta(got, want) < 1e-12);
    }
}

double fidelity_to(const GateCircuit& circuit, const StateVector& target) {
    return projector_overlap(simulate(circuit), target);
}

}  // namespace

TEST_CASE("multiplexed rotations match the block-diagonal oracle") {
    for (const GateKind axis : {GateKind::kRy, GateKind::kRz}) {
        for (const bool mirrored : {false, true}) {
            check_mux(axis, {}, 0, 1, 3, mirrored);
            check_mux(axis, {0}, 1, 2, 4, mirrored);
            check_mux(axis, {1}, 0, 2, 5, mirrored);
            check_mux(axis, {0, 1}, 2, 3, 6, mirrored);
            check_mux(axis, {2, 0}, 1, 3, 7, mirrored);
            check_mux(axis, {0, 1, 2}, 3, 4, 8, mirrored);
        }
    }
}

TEST_CASE("prepare_state trivial targets") {
    for (int n : {1, 2, 4}) {
        const PrepReport report = prepare_state(StateVector::zero_state(n));
        CHECK(report.circuit.empty());
        CHECK(report.cnot_count == 0);
        CHECK(report.fidelity == doctest::Approx(1.0));
    }

    const PrepReport plus = prepare_state(StateVector({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}));
    REQUIRE(plus.circuit.size() == 1);
    CHECK(plus.circuit.gates()[0].kind == GateKind::kRy);
    CHECK(plus.circuit.gates()[0].angle == doctest::Approx(M_PI / 2.0));
    CHECK(plus.cnot_count == 0);
}

TEST_CASE("prepare_state random targets meet fidelity and the CNOT bound") {
    // 3-qubit batch: bound is 2^4 - 6 = 10.
    for (uint64_t seed = 0; seed < 100; ++seed) {
        const StateVector target = test::random_state(3, seed * 3 + 1);
        const PrepReport report = prepare_state(target);
        CHECK(report.fidelity >= 1.0 - 1e-9);
        CHECK(report.cnot_count <= 10);
    }
    // Smaller sweep across widths, both real and complex targets.
    for (int n = 1; n <= 6; ++n) {
        for (uint64_t seed = 0; seed < 5; ++seed) {
            for (const bool real_only : {false, true}) {
                const StateVector target = test::random_state(n, seed + 31 * n, real_only);
                const PrepReport report = prepare_state(target);
                CHECK(report.fidelity >= 1.0 - 1e-9);
                CHECK(report.cnot_count <= prep_cnot_bound(n));
            }
        }
    }
}

TEST_CASE("prepare_state reproduces the exact state including global phase") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 1 + static_cast<int>(seed % 4);
        const StateVector target = test::random_state(n, seed + 500);
        const PrepReport report = prepare_state(target);
        CHECK(test::max_amplitude_delta(simulate(report.circuit), target) < 1e-9);
    }
}

TEST_CASE("real targets compile without RZ gates") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 1 + static_cast<int>(seed % 4);
        const StateVector target = test::random_state(n, seed + 900, /*real_only=*/true);
        const PrepReport report = prepare_state(target);
        for (const Gate& g : report.circuit.gates()) {
            CHECK(g.kind != GateKind::kRz);
            CHECK(g.kind != GateKind::kGlobalPhase);
        }
        CHECK(report.fidelity >= 1.0 - 1e-9);
    }
}

TEST_CASE("prepare_inverse disentangles the target") {
    // |0..0> needs no gates.
    CHECK(prepare_inverse(StateVector::zero_state(3)).empty());

    for (uint64_t seed = 0; seed < 10; ++seed) {
        const StateVector target = test::random_state(4, seed + 60);
        const GateCircuit inverse = prepare_inverse(target);
        const StateVector rewound = simulate(inverse, target);
        // Up to global phase: |<0..0|rewound>|^2 = 1.
        CHECK(std::norm(rewound.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-9));

        // Definitional equivalence with the adjoint of prepare_state.
        const GateCircuit via_adjoint = adjoint(prepare_state(target).circuit);
        CHECK(inverse == via_adjoint);
    }

    // Round trip: preparing then inverting is the identity on the target.
    const StateVector target = test::random_state(4, 1234);
    const PrepReport report = prepare_state(target);
    const StateVector round = simulate(adjoint(report.circuit), target);
    CHECK(std::norm(round.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("prepare_state rejects bad input") {
    CHECK_THROWS_AS(prepare_state(StateVector::zero_state(0)), ValidationError);
}

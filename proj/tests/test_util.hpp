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

#include <cmath>
#include <vector>

#include "qborn/circuit.hpp"
#include "qborn/rng.hpp"
#include "qborn/statevec.hpp"

namespace qborn::test {

/// Haar-ish random unit vector (normal components, explicit normalization).
inline StateVector random_state(int n_qubits, uint64_t seed, bool real_only = false) {
    RngStream rng(seed, 0);
    std::vector<cdouble> amps(uint64_t{1} << n_qubits);
    for (auto& a : amps) {
        a = real_only ? cdouble{rng.normal(), 0.0} : cdouble{rng.normal(), rng.normal()};
    }
    return StateVector::normalized(std::move(amps), 1e-6);
}

/// Random circuit over the full primitive gate set.
inline GateCircuit random_circuit(int n_qubits, int n_gates, uint64_t seed) {
    RngStream rng(seed, 1);
    GateCircuit circuit(n_qubits);
    while (static_cast<int>(circuit.size()) < n_gates) {
        const int q = static_cast<int>(rng.below(static_cast<uint64_t>(n_qubits)));
        switch (rng.below(5)) {
            case 0:
                circuit.push(Gate::ry(q, rng.uniform(-2.0 * M_PI, 2.0 * M_PI)));
                break;
            case 1:
                circuit.push(Gate::rz(q, rng.uniform(-2.0 * M_PI, 2.0 * M_PI)));
                break;
            case 2:
                circuit.push(Gate::x(q));
                break;
            case 3: {
                if (n_qubits < 2) {
                    continue;
                }
                int t = static_cast<int>(rng.below(static_cast<uint64_t>(n_qubits - 1)));
                if (t >= q) {
                    ++t;
                }
                circuit.push(Gate::cnot(q, t));
                break;
            }
            default:
                circuit.push(Gate::global_phase(rng.uniform(-M_PI, M_PI)));
                break;
        }
    }
    return circuit;
}

inline double max_amplitude_delta(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (uint64_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
    }
    return worst;
}

/// Upper regularized incomplete gamma Q(a, x), for chi-square p-values:
/// p = Q(df/2, chi2/2). Series + continued-fraction split, standard scheme.
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) {
        return 1.0;
    }
    if (x == 0.0) {
        return 1.0;
    }
    const double log_gamma_a = std::lgamma(a);
    if (x < a + 1.0) {
        // Lower series: P(a, x), then Q = 1 - P.
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) {
                break;
            }
        }
        const double p = sum * std::exp(-x + a * std::log(x) - log_gamma_a);
        return 1.0 - p;
    }
    // Lentz continued fraction for Q directly.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - log_gamma_a) * h;
}

}  // namespace qborn::test

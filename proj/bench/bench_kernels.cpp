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

// Compares the serial reference kernels against the OpenMP ones, and times
// the shot samplers. Usage: qborn-bench [max_qubits]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "qborn/kernels.hpp"
#include "qborn/rng.hpp"
#include "qborn/simulate.hpp"
#include "qborn/threads.hpp"

using qborn::cdouble;
using qborn::RngStream;

namespace {

double now_sec() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::vector<cdouble> random_state(int n_qubits, uint64_t seed) {
    RngStream rng(seed, 0);
    std::vector<cdouble> amps(uint64_t{1} << n_qubits);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = cdouble{rng.normal(), rng.normal()};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) {
        a *= inv;
    }
    return amps;
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_sec();
        body();
        const double t1 = now_sec();
        if (t1 - t0 < best) {
            best = t1 - t0;
        }
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int max_qubits = argc > 1 ? std::atoi(argv[1]) : 20;
    std::printf("threads: %d\n\n", qborn::max_threads());
    std::printf("%-22s %8s %12s %12s %8s\n", "kernel", "qubits", "serial ms", "omp ms",
                "speedup");

    for (int n = 14; n <= max_qubits; n += 2) {
        const uint64_t dim = uint64_t{1} << n;
        std::vector<cdouble> base = random_state(n, 7);
        std::vector<cdouble> work = base;

        const double t_ref = time_best_of(3, [&] {
            work = base;
            for (int bit = 0; bit < n; ++bit) {
                qborn::kern::ref::apply_ry(work.data(), dim, bit, 0.3);
            }
        });
        const double t_omp = time_best_of(3, [&] {
            work = base;
            for (int bit = 0; bit < n; ++bit) {
                qborn::kern::apply_ry(work.data(), dim, bit, 0.3);
            }
        });
        std::printf("%-22s %8d %12.3f %12.3f %8.2f\n", "apply_ry (all bits)", n, t_ref * 1e3,
                    t_omp * 1e3, t_ref / t_omp);

        const double d_ref = time_best_of(3, [&] {
            (void)qborn::kern::ref::dot_conj(base.data(), work.data(), dim);
        });
        const double d_omp = time_best_of(3, [&] {
            (void)qborn::kern::dot_conj(base.data(), work.data(), dim);
        });
        std::printf("%-22s %8d %12.3f %12.3f %8.2f\n", "dot_conj", n, d_ref * 1e3, d_omp * 1e3,
                    d_ref / d_omp);
    }

    // Trajectory sampling: the per-shot loop is the parallel axis.
    {
        qborn::GateCircuit circuit(10);
        RngStream rng(11, 0);
        for (int i = 0; i < 60; ++i) {
            const int q = static_cast<int>(rng.below(10));
            circuit.push(qborn::Gate::ry(q, rng.uniform(-3.0, 3.0)));
            circuit.push(qborn::Gate::cnot(q, (q + 1) % 10));
        }
        qborn::NoiseSpec noise;
        noise.p_depol_1q = 0.001;
        noise.p_depol_2q = 0.01;
        const double t = time_best_of(2, [&] {
            (void)qborn::sample_shots_noisy(circuit, noise, 4096, 1);
        });
        std::printf("\n%-22s %8d %12s %12.3f\n", "noisy shots (4096)", 10, "-", t * 1e3);
    }
    return 0;
}

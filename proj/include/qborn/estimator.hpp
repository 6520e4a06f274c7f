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

#include <optional>
#include <span>
#include <vector>

#include "qborn/qfm.hpp"
#include "qborn/simulate.hpp"
#include "qborn/statevec.hpp"

namespace qborn {

/**
 * Normalized superposition of per-sample feature states: the fixed-size
 * summary a whole training set collapses into. `norm_constant` is the norm
 * of the raw amplitude sum before normalization; `split` is present for
 * labeled states and separates feature qubits (left) from label qubits
 * (right).
 */
struct DatasetState {
    StateVector state;
    double norm_constant;
    uint64_t n_samples;
    std::optional<SubsystemSplit> split;

    bool labeled() const {
        return split.has_value();
    }
};

/// Density value with its sampling error. shots == 0 marks the exact path
/// (std_error 0); otherwise value is an M-shot frequency and std_error the
/// Bernoulli normal approximation sqrt(p(1-p)/M).
struct DensityEstimate {
    double value = 0.0;
    double std_error = 0.0;
    uint64_t shots = 0;
};

/// Per-class probabilities. `joint` holds the Born values
/// |<Psi|(psi_star x phi_k)>|^2 (or their shot frequencies); `conditional`
/// is normalized to sum 1. `degenerate` flags queries where every joint
/// vanished and the conditional fell back to uniform.
struct ClassProbabilities {
    std::vector<double> joint;
    std::vector<double> conditional;
    uint64_t shots = 0;
    bool degenerate = false;
};

/// Superposes qfm.map(x) over all samples and normalizes. Amplitude sums are
/// accumulated per basis slot in value order, so the result is exactly
/// invariant under sample reordering. Throws DegeneracyError when the sum
/// cancels (norm < 1e-12).
DatasetState build_dataset_state(std::span<const std::vector<double>> samples,
                                 const FeatureMap& qfm);

/// Labeled variant: superposes qfm.map(x_i) (x) label_map(y_i).
DatasetState build_labeled_state(std::span<const std::vector<double>> samples,
                                 std::span<const int> labels, const FeatureMap& qfm,
                                 const LabelEncoding& enc);

// --- density estimation ---

/// Exact Born value |<Psi|query>|^2.
DensityEstimate density_exact(const DatasetState& dataset, const StateVector& query_state);
DensityEstimate density_exact(const DatasetState& dataset, std::span<const double> x,
                              const FeatureMap& qfm);

/// Shot-based estimate: compiles the dataset and query states, runs the
/// composed circuit (query preparation inverted after the dataset
/// preparation) and returns the all-zeros frequency.
DensityEstimate density_circuit(const DatasetState& dataset, const StateVector& query_state,
                                uint64_t shots, uint64_t seed,
                                const NoiseSpec* noise = nullptr);
DensityEstimate density_circuit(const DatasetState& dataset, std::span<const double> x,
                                const FeatureMap& qfm, uint64_t shots, uint64_t seed,
                                const NoiseSpec* noise = nullptr);
/// Variant reusing an already compiled dataset-preparation circuit
/// (fit-once semantics; `prep` must prepare dataset.state).
DensityEstimate density_circuit(const DatasetState& dataset, const GateCircuit& prep,
                                const StateVector& query_state, uint64_t shots, uint64_t seed,
                                const NoiseSpec* noise = nullptr);

// --- classification ---

/// Exact path. joint[k] by direct Born projection; conditional[k] computed
/// independently as <phi_k| rho_Y |phi_k> where rho_Y is the trace-normalized
/// partial trace of the projected dataset operator (the literal
/// project / normalize / trace-out sequence, kept as a second route so the
/// two can be cross-checked).
ClassProbabilities classify_exact(const DatasetState& dataset, const StateVector& query_state,
                                  const LabelEncoding& enc);
ClassProbabilities classify_exact(const DatasetState& dataset, std::span<const double> x,
                                  const FeatureMap& qfm, const LabelEncoding& enc);

/// Shot path per the one-hot counting scheme: no label-side preparation is
/// inverted; joint[k] is the frequency of the bitstring with all feature
/// bits zero and the class-k label pattern, and conditional normalizes over
/// the label patterns only (bitstrings with nonzero feature bits are
/// discarded).
ClassProbabilities classify_circuit(const DatasetState& dataset, const StateVector& query_state,
                                    const LabelEncoding& enc, uint64_t shots, uint64_t seed,
                                    const NoiseSpec* noise = nullptr);
ClassProbabilities classify_circuit(const DatasetState& dataset, std::span<const double> x,
                                    const FeatureMap& qfm, const LabelEncoding& enc, uint64_t shots,
                                    uint64_t seed, const NoiseSpec* noise = nullptr);
ClassProbabilities classify_circuit(const DatasetState& dataset, const GateCircuit& prep,
                                    const StateVector& query_state, const LabelEncoding& enc,
                                    uint64_t shots, uint64_t seed,
                                    const NoiseSpec* noise = nullptr);

}  // namespace qborn

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

#include "qborn/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "qborn/errors.hpp"
#include "qborn/kernels.hpp"
#include "qborn/stateprep.hpp"

namespace qborn {

namespace {

constexpr double kDegenerateSum = 1e-12;
// The literal conditional route materializes the 4^n projected operator.
constexpr int kMaxExactConditionalQubits = 11;

// Order-independent sum: accumulate each basis slot in sorted value order,
// which makes the dataset state bit-identical under sample permutations.
std::vector<cdouble> sorted_columnwise_sum(const std::vector<StateVector>& states) {
    const uint64_t dim = states.front().dim();
    std::vector<cdouble> total(dim, cdouble{0.0, 0.0});
    std::vector<cdouble> column(states.size());
    for (uint64_t j = 0; j < dim; ++j) {
        for (size_t i = 0; i < states.size(); ++i) {
            column[i] = states[i].amplitude(j);
        }
        std::sort(column.begin(), column.end(), [](const cdouble& a, const cdouble& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        cdouble acc{0.0, 0.0};
        for (const cdouble& v : column) {
            acc += v;
        }
        total[j] = acc;
    }
    return total;
}

DatasetState finish_dataset_state(const std::vector<StateVector>& states,
                                  std::optional<SubsystemSplit> split) {
    std::vector<cdouble> sum = sorted_columnwise_sum(states);
    const double norm = std::sqrt(kern::norm_sq(sum.data(), sum.size()));
    if (norm < kDegenerateSum) {
        throw DegeneracyError("dataset state vanished: per-sample states cancel (norm " +
                              std::to_string(norm) + ")");
    }
    for (cdouble& v : sum) {
        v /= norm;
    }
    return DatasetState{StateVector(std::move(sum)), norm, states.size(), split};
}

double clamp01(double v) {
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

DensityEstimate shot_estimate(uint64_t zero_count, uint64_t shots) {
    const double p = static_cast<double>(zero_count) / static_cast<double>(shots);
    return DensityEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(shots)), shots};
}

ShotRecord run_composed(const GateCircuit& circuit, uint64_t shots, uint64_t seed,
                        const NoiseSpec* noise) {
    if (noise != nullptr && !noise->is_zero()) {
        return sample_shots_noisy(circuit, *noise, shots, seed);
    }
    return sample_shots(circuit, shots, seed);
}

void require_unlabeled(const DatasetState& dataset) {
    if (dataset.labeled()) {
        throw ValidationError("dataset state carries labels: use the classify operations");
    }
}

void require_labeled(const DatasetState& dataset) {
    if (!dataset.labeled()) {
        throw ValidationError("dataset state carries no labels: use the density operations");
    }
}

void require_same_width(const StateVector& a, const StateVector& b, const char* what) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError(std::string(what) + ": dimension mismatch, " +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

DatasetState build_dataset_state(std::span<const std::vector<double>> samples,
                                 const FeatureMap& qfm) {
    if (samples.empty()) {
        throw ValidationError("dataset state needs at least one sample");
    }
    std::vector<StateVector> states;
    states.reserve(samples.size());
    for (const auto& x : samples) {
        states.push_back(qfm.map(x));
    }
    return finish_dataset_state(states, std::nullopt);
}

DatasetState build_labeled_state(std::span<const std::vector<double>> samples,
                                 std::span<const int> labels, const FeatureMap& qfm,
                                 const LabelEncoding& enc) {
    if (samples.empty()) {
        throw ValidationError("dataset state needs at least one sample");
    }
    if (samples.size() != labels.size()) {
        throw DimensionError("got " + std::to_string(samples.size()) + " samples but " +
                             std::to_string(labels.size()) + " labels");
    }
    std::vector<StateVector> label_states;
    label_states.reserve(static_cast<size_t>(enc.num_classes));
    for (int k = 1; k <= enc.num_classes; ++k) {
        label_states.push_back(label_map(k, enc));
    }
    std::vector<StateVector> states;
    states.reserve(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        const int y = labels[i];
        if (y < 1 || y > enc.num_classes) {
            throw ValidationError("label " + std::to_string(y) + " at row " + std::to_string(i) +
                                  " outside 1.." + std::to_string(enc.num_classes));
        }
        states.push_back(
            tensor_product(qfm.map(samples[i]), label_states[static_cast<size_t>(y - 1)]));
    }
    const SubsystemSplit split{qfm.n_qubits(), enc.n_qubits()};
    return finish_dataset_state(states, split);
}

DensityEstimate density_exact(const DatasetState& dataset, const StateVector& query_state) {
    require_unlabeled(dataset);
    require_same_width(dataset.state, query_state, "density_exact");
    return DensityEstimate{clamp01(projector_overlap(dataset.state, query_state)), 0.0, 0};
}

DensityEstimate density_exact(const DatasetState& dataset, std::span<const double> x,
                              const FeatureMap& qfm) {
    return density_exact(dataset, qfm.map(x));
}

DensityEstimate density_circuit(const DatasetState& dataset, const GateCircuit& prep,
                                const StateVector& query_state, uint64_t shots, uint64_t seed,
                                const NoiseSpec* noise) {
    require_unlabeled(dataset);
    require_same_width(dataset.state, query_state, "density_circuit");
    GateCircuit composed = prep;
    composed.append(prepare_inverse(query_state));
    const ShotRecord record = run_composed(composed, shots, seed, noise);
    return shot_estimate(record.count_of(index_to_bits(0, composed.n_qubits())), shots);
}

DensityEstimate density_circuit(const DatasetState& dataset, const StateVector& query_state,
                                uint64_t shots, uint64_t seed, const NoiseSpec* noise) {
    require_unlabeled(dataset);
    return density_circuit(dataset, prepare_state(dataset.state).circuit, query_state, shots, seed,
                           noise);
}

DensityEstimate density_circuit(const DatasetState& dataset, std::span<const double> x,
                                const FeatureMap& qfm, uint64_t shots, uint64_t seed,
                                const NoiseSpec* noise) {
    return density_circuit(dataset, qfm.map(x), shots, seed, noise);
}

ClassProbabilities classify_exact(const DatasetState& dataset, const StateVector& query_state,
                                  const LabelEncoding& enc) {
    require_labeled(dataset);
    const SubsystemSplit split = *dataset.split;
    if (query_state.n_qubits() != split.left_qubits) {
        throw DimensionError("classify_exact: query has " + std::to_string(query_state.n_qubits()) +
                             " qubits, feature register has " + std::to_string(split.left_qubits));
    }
    if (enc.n_qubits() != split.right_qubits) {
        throw DimensionError("classify_exact: label encoding uses " +
                             std::to_string(enc.n_qubits()) + " qubits, label register has " +
                             std::to_string(split.right_qubits));
    }
    const int K = enc.num_classes;
    ClassProbabilities result;
    result.joint.resize(static_cast<size_t>(K));
    result.conditional.assign(static_cast<size_t>(K), 1.0 / K);

    // Born route: project onto psi_star (x) phi_k directly.
    for (int k = 1; k <= K; ++k) {
        const StateVector basis = tensor_product(query_state, label_map(k, enc));
        result.joint[static_cast<size_t>(k - 1)] =
            clamp01(projector_overlap(dataset.state, basis));
    }

    // Reduced-density-matrix route: project the dataset operator onto the
    // query on the feature side, normalize by the trace, trace out the
    // feature register, then read the diagonal in the label states.
    if (split.total() > kMaxExactConditionalQubits) {
        throw DimensionError("exact conditional route materializes a " +
                             std::to_string(split.total()) + "-qubit operator; limit is " +
                             std::to_string(kMaxExactConditionalQubits) + " qubits");
    }
    const uint64_t right_dim = uint64_t{1} << split.right_qubits;
    const uint64_t left_dim = uint64_t{1} << split.left_qubits;
    const auto& psi = dataset.state.amplitudes();
    const auto& q = query_state.amplitudes();
    // u = (|q><q| (x) Id) |Psi>, with c_y = <q (x) e_y | Psi>.
    std::vector<cdouble> c(right_dim, cdouble{0.0, 0.0});
    for (uint64_t x = 0; x < left_dim; ++x) {
        const cdouble qc = std::conj(q[x]);
        for (uint64_t y = 0; y < right_dim; ++y) {
            c[y] += qc * psi[x * right_dim + y];
        }
    }
    double trace = 0.0;
    for (const cdouble& v : c) {
        trace += std::norm(v);
    }
    if (trace < kDegenerateSum) {
        result.degenerate = true;
        return result;
    }
    const uint64_t dim = psi.size();
    ComplexMatrix projected(dim);
    for (uint64_t r = 0; r < dim; ++r) {
        const cdouble lhs = psi[r] / trace;
        for (uint64_t x = 0; x < left_dim; ++x) {
            const cdouble ux = std::conj(q[x]);
            for (uint64_t y = 0; y < right_dim; ++y) {
                // conj of u[(x,y)] = conj(q[x] * c[y])
                projected.at(r, x * right_dim + y) = lhs * ux * std::conj(c[y]);
            }
        }
    }
    const DensityMatrix rho_y(split.right_qubits, partial_trace(projected, split, Keep::kRight));
    for (int k = 1; k <= K; ++k) {
        result.conditional[static_cast<size_t>(k - 1)] =
            clamp01(rho_y.expectation(label_map(k, enc)));
    }
    return result;
}

ClassProbabilities classify_exact(const DatasetState& dataset, std::span<const double> x,
                                  const FeatureMap& qfm, const LabelEncoding& enc) {
    return classify_exact(dataset, qfm.map(x), enc);
}

ClassProbabilities classify_circuit(const DatasetState& dataset, const GateCircuit& prep,
                                    const StateVector& query_state, const LabelEncoding& enc,
                                    uint64_t shots, uint64_t seed, const NoiseSpec* noise) {
    require_labeled(dataset);
    const SubsystemSplit split = *dataset.split;
    if (query_state.n_qubits() != split.left_qubits) {
        throw DimensionError("classify_circuit: query has " +
                             std::to_string(query_state.n_qubits()) +
                             " qubits, feature register has " + std::to_string(split.left_qubits));
    }
    const int K = enc.num_classes;
    GateCircuit composed = prep;
    // Invert the query preparation on the feature qubits only; the label
    // register needs no preparation because the label patterns are read off
    // as plain bitstrings.
    const GateCircuit query_inverse = prepare_inverse(query_state);
    for (const Gate& g : query_inverse.gates()) {
        composed.push(g);
    }
    const ShotRecord record = run_composed(composed, shots, seed, noise);

    ClassProbabilities result;
    result.shots = shots;
    result.joint.resize(static_cast<size_t>(K));
    result.conditional.assign(static_cast<size_t>(K), 1.0 / K);
    uint64_t pattern_total = 0;
    std::vector<uint64_t> pattern_counts(static_cast<size_t>(K), 0);
    for (int k = 1; k <= K; ++k) {
        // Feature bits all zero, label bits carrying the class-k pattern.
        const std::string bits = index_to_bits(label_basis_index(k, enc), split.total());
        pattern_counts[static_cast<size_t>(k - 1)] = record.count_of(bits);
        pattern_total += pattern_counts[static_cast<size_t>(k - 1)];
        result.joint[static_cast<size_t>(k - 1)] =
            static_cast<double>(pattern_counts[static_cast<size_t>(k - 1)]) /
            static_cast<double>(shots);
    }
    if (pattern_total == 0) {
        result.degenerate = true;
        return result;
    }
    for (int k = 0; k < K; ++k) {
        result.conditional[static_cast<size_t>(k)] =
            static_cast<double>(pattern_counts[static_cast<size_t>(k)]) /
            static_cast<double>(pattern_total);
    }
    return result;
}

ClassProbabilities classify_circuit(const DatasetState& dataset, const StateVector& query_state,
                                    const LabelEncoding& enc, uint64_t shots, uint64_t seed,
                                    const NoiseSpec* noise) {
    require_labeled(dataset);
    return classify_circuit(dataset, prepare_state(dataset.state).circuit, query_state, enc, shots,
                            seed, noise);
}

ClassProbabilities classify_circuit(const DatasetState& dataset, std::span<const double> x,
                                    const FeatureMap& qfm, const LabelEncoding& enc, uint64_t shots,
                                    uint64_t seed, const NoiseSpec* noise) {
    return classify_circuit(dataset, qfm.map(x), enc, shots, seed, noise);
}

}  // namespace qborn

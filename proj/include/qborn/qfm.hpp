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

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qborn/statevec.hpp"

namespace qborn {

/// Feature map from classical sample vectors to unit states. Implementations
/// are immutable and safe to share across threads.
class FeatureMap {
  public:
    virtual ~FeatureMap() = default;

    virtual StateVector map(std::span<const double> x) const = 0;
    virtual int n_qubits() const = 0;
    virtual int input_dim() const = 0;
    /// Identifier used in model files: "sincos" or "rff".
    virtual std::string kind() const = 0;
};

/**
 * Per-feature map x_i -> sin(pi x_i)|0> + cos(pi x_i)|1>, tensored over all
 * features (one qubit each). Inner products factor into
 * prod_i cos(pi (x_i - x'_i)). Defined for all reals; components outside
 * [0, 1] are accepted with a one-time warning on stderr.
 */
class SinCosMap final : public FeatureMap {
  public:
    explicit SinCosMap(int dim);

    StateVector map(std::span<const double> x) const override;
    int n_qubits() const override {
        return dim_;
    }
    int input_dim() const override {
        return dim_;
    }
    std::string kind() const override {
        return "sincos";
    }

  private:
    int dim_;
    mutable std::atomic<bool> warned_{false};
};

/// Random Fourier feature parameters approximating the Gaussian kernel
/// exp(-gamma |x - x'|^2): frequencies w_i are i.i.d. zero-mean normal with
/// variance 2*gamma per component and offsets b_i uniform on [0, 2pi).
struct RffParams {
    int feature_count = 0;  // D, a power of two
    double gamma = 0.0;
    int dim = 0;
    uint64_t seed = 0;
    std::vector<std::vector<double>> w;  // D vectors of length dim
    std::vector<double> b;               // D offsets

    /// Draws parameters reproducibly: all w (row by row), then all b, from
    /// RngStream(seed, 0). Throws if D is not a power of two (the amplitude
    /// encoding needs log2(D) qubits) or gamma <= 0.
    static RffParams sample(int feature_count, double gamma, int dim, uint64_t seed);

    int n_qubits() const;
};

/// Component i is sqrt(2/D) * cos(x . w_i + b_i).
std::vector<double> rff_features(std::span<const double> x, const RffParams& params);

/// Amplitude encoding of rff_features: basis amplitude i is feature i
/// divided by the feature vector norm (log2 D qubits). Throws
/// DegeneracyError when every cosine vanishes.
class RffMap final : public FeatureMap {
  public:
    explicit RffMap(RffParams params);

    StateVector map(std::span<const double> x) const override;
    int n_qubits() const override {
        return params_.n_qubits();
    }
    int input_dim() const override {
        return params_.dim;
    }
    std::string kind() const override {
        return "rff";
    }
    const RffParams& params() const {
        return params_;
    }

  private:
    RffParams params_;
};

enum class LabelKind {
    kOneHot,  // K qubits, class k reads 1 at position k only
    kBasis,   // ceil(log2 K) qubits, class k reads the bits of k-1
};

struct LabelEncoding {
    LabelKind kind = LabelKind::kBasis;
    int num_classes = 2;

    int n_qubits() const;
};

/// Basis index of the label pattern for class y (1-based) within the label
/// register.
uint64_t label_basis_index(int y, const LabelEncoding& enc);

/// Label state |pattern(y)>. Classes are 1..K; out-of-range throws.
StateVector label_map(int y, const LabelEncoding& enc);

}  // namespace qborn

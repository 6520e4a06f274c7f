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

#include "qborn/qfm.hpp"

#include <cmath>
#include <cstdio>

#include "qborn/errors.hpp"
#include "qborn/rng.hpp"

namespace qborn {

namespace {

void check_input_dim(size_t got, int want, const char* what) {
    if (got != static_cast<size_t>(want)) {
        throw DimensionError(std::string(what) + ": input has " + std::to_string(got) +
                             " components, map expects " + std::to_string(want));
    }
}

}  // namespace

SinCosMap::SinCosMap(int dim) : dim_(dim) {
    if (dim < 1) {
        throw ValidationError("SinCosMap needs at least one feature");
    }
}

StateVector SinCosMap::map(std::span<const double> x) const {
    check_input_dim(x.size(), dim_, "SinCosMap");
    for (double v : x) {
        if ((v < 0.0 || v > 1.0) && !warned_.exchange(true)) {
            std::fprintf(stderr, "qborn: warning: sin/cos feature %.17g outside [0, 1]\n", v);
        }
    }
    std::vector<cdouble> amps(uint64_t{1} << dim_);
    // Qubit i contributes sin(pi x_i) on bit value 0, cos(pi x_i) on 1;
    // qubit i is index bit (dim - 1 - i).
    for (uint64_t j = 0; j < amps.size(); ++j) {
        double a = 1.0;
        for (int i = 0; i < dim_; ++i) {
            const double angle = M_PI * x[static_cast<size_t>(i)];
            const bool one = (j >> qubit_to_bit(i, dim_)) & 1;
            a *= one ? std::cos(angle) : std::sin(angle);
        }
        amps[j] = a;
    }
    // The per-qubit factors are unit vectors, so the product is normalized
    // up to roundoff; construction validates that.
    return StateVector(std::move(amps));
}

RffParams RffParams::sample(int feature_count, double gamma, int dim, uint64_t seed) {
    if (feature_count < 1 || (feature_count & (feature_count - 1)) != 0) {
        throw ValidationError("RFF feature count " + std::to_string(feature_count) +
                              " must be a power of two (amplitude encoding needs log2 D qubits)");
    }
    if (gamma <= 0.0) {
        throw ValidationError("RFF gamma must be positive");
    }
    if (dim < 1) {
        throw ValidationError("RFF input dimension must be positive");
    }
    RffParams params;
    params.feature_count = feature_count;
    params.gamma = gamma;
    params.dim = dim;
    params.seed = seed;
    RngStream rng(seed, 0);
    const double sigma = std::sqrt(2.0 * gamma);
    params.w.resize(static_cast<size_t>(feature_count));
    for (auto& row : params.w) {
        row.resize(static_cast<size_t>(dim));
        for (double& v : row) {
            v = sigma * rng.normal();
        }
    }
    params.b.resize(static_cast<size_t>(feature_count));
    for (double& v : params.b) {
        v = rng.uniform(0.0, 2.0 * M_PI);
    }
    return params;
}

int RffParams::n_qubits() const {
    int n = 0;
    while ((1 << n) < feature_count) {
        ++n;
    }
    return n;
}

std::vector<double> rff_features(std::span<const double> x, const RffParams& params) {
    check_input_dim(x.size(), params.dim, "rff_features");
    const double scale = std::sqrt(2.0 / params.feature_count);
    std::vector<double> out(static_cast<size_t>(params.feature_count));
    for (size_t i = 0; i < out.size(); ++i) {
        double dot = params.b[i];
        for (size_t d = 0; d < x.size(); ++d) {
            dot += params.w[i][d] * x[d];
        }
        out[i] = scale * std::cos(dot);
    }
    return out;
}

RffMap::RffMap(RffParams params) : params_(std::move(params)) {}

StateVector RffMap::map(std::span<const double> x) const {
    const std::vector<double> features = rff_features(x, params_);
    std::vector<cdouble> amps(features.size());
    for (size_t i = 0; i < features.size(); ++i) {
        amps[i] = features[i];
    }
    try {
        return StateVector::normalized(std::move(amps));
    } catch (const DegeneracyError&) {
        throw DegeneracyError("degenerate feature vector: all RFF cosines vanish at this input");
    }
}

int LabelEncoding::n_qubits() const {
    if (num_classes < 2) {
        throw ValidationError("label encoding needs at least two classes");
    }
    if (kind == LabelKind::kOneHot) {
        return num_classes;
    }
    int n = 0;
    while ((1 << n) < num_classes) {
        ++n;
    }
    return n;
}

uint64_t label_basis_index(int y, const LabelEncoding& enc) {
    if (y < 1 || y > enc.num_classes) {
        throw ValidationError("class " + std::to_string(y) + " outside 1.." +
                              std::to_string(enc.num_classes));
    }
    if (enc.kind == LabelKind::kBasis) {
        return static_cast<uint64_t>(y - 1);
    }
    // One-hot: a single 1 at position y-1 reading qubit 0 first.
    return uint64_t{1} << qubit_to_bit(y - 1, enc.num_classes);
}

StateVector label_map(int y, const LabelEncoding& enc) {
    return StateVector::basis_state(enc.n_qubits(), label_basis_index(y, enc));
}

}  // namespace qborn

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
#include <string>
#include <utility>
#include <vector>

namespace qborn {

/// One data row. `label` is a 1-based class index; 0 means "no label".
struct LabeledSample {
    std::vector<double> features;
    int label = 0;
};

struct Dataset {
    std::vector<LabeledSample> rows;
    bool has_labels = false;

    size_t size() const {
        return rows.size();
    }
    int dim() const {
        return rows.empty() ? 0 : static_cast<int>(rows.front().features.size());
    }
    std::vector<std::vector<double>> feature_matrix() const;
    std::vector<int> labels() const;
};

/// Two-class XOR layout: Gaussian blobs at the quarter points of [0,1]^2,
/// (0.25,0.25) and (0.75,0.75) labeled 1, (0.25,0.75) and (0.75,0.25)
/// labeled 2, clipped to the unit square.
struct XorConfig {
    int n_per_blob = 100;
    double blob_std = 0.1;
    uint64_t seed = 0;
};

Dataset gen_xor(const XorConfig& cfg);

/// 1-D two-component Gaussian mixture.
struct BiGaussConfig {
    int n = 200;
    double means[2] = {0.3, 0.7};
    double stds[2] = {0.05, 0.05};
    double weights[2] = {0.5, 0.5};
    uint64_t seed = 0;
};

std::vector<double> gen_bigaussian(const BiGaussConfig& cfg);

/// Seeded shuffle-split: permutes rows reproducibly and returns
/// (train, test) with round(train_fraction * n) rows in train.
std::pair<Dataset, Dataset> shuffle_split(const Dataset& data, double train_fraction,
                                          uint64_t seed);

// CSV: header `x1,...,xd[,label]`, UTF-8, LF line endings, '.' decimal
// separator, 17 significant digits (exact double round-trip). Malformed
// rows are reported with their line number.
Dataset read_csv(const std::string& path);
void write_csv(const std::string& path, const Dataset& data);

}  // namespace qborn

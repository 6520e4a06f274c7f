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

#include <span>
#include <vector>

namespace qborn {

/// exp(-gamma * |x - x_prime|^2).
double gaussian_kernel(std::span<const double> x, std::span<const double> x_prime, double gamma);

/// Classical Gaussian kernel density estimate configuration. `normalized`
/// applies the (gamma/pi)^(d/2) factor that makes the estimate a pdf.
struct KdeConfig {
    double gamma;
    bool normalized = false;
};

/// (1/N) sum_i C * exp(-gamma |x - x_i|^2) over the training rows.
double kde(std::span<const std::vector<double>> train, std::span<const double> x,
           const KdeConfig& cfg);

/// 1-D convenience overload.
double kde(std::span<const double> train, double x, const KdeConfig& cfg);

/// Area under the ROC curve via the rank (Mann-Whitney) statistic; ties
/// contribute 1/2. `positive` marks the class scored high. Throws when only
/// one class is present.
double roc_auc(std::span<const double> scores, std::span<const int> labels, int positive);

}  // namespace qborn

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

#include "qborn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qborn/errors.hpp"

namespace qborn {

double gaussian_kernel(std::span<const double> x, std::span<const double> x_prime, double gamma) {
    if (x.size() != x_prime.size()) {
        throw DimensionError("gaussian_kernel: dimensions differ, " + std::to_string(x.size()) +
                             " vs " + std::to_string(x_prime.size()));
    }
    double dist_sq = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - x_prime[i];
        dist_sq += d * d;
    }
    return std::exp(-gamma * dist_sq);
}

double kde(std::span<const std::vector<double>> train, std::span<const double> x,
           const KdeConfig& cfg) {
    if (train.empty()) {
        throw ValidationError("kde needs a non-empty training set");
    }
    if (cfg.gamma <= 0.0) {
        throw ValidationError("kde gamma must be positive");
    }
    const double c =
        cfg.normalized ? std::pow(cfg.gamma / M_PI, 0.5 * static_cast<double>(x.size())) : 1.0;
    double acc = 0.0;
    for (const auto& xi : train) {
        acc += gaussian_kernel(x, xi, cfg.gamma);
    }
    return c * acc / static_cast<double>(train.size());
}

double kde(std::span<const double> train, double x, const KdeConfig& cfg) {
    if (train.empty()) {
        throw ValidationError("kde needs a non-empty training set");
    }
    if (cfg.gamma <= 0.0) {
        throw ValidationError("kde gamma must be positive");
    }
    const double c = cfg.normalized ? std::sqrt(cfg.gamma / M_PI) : 1.0;
    double acc = 0.0;
    for (double xi : train) {
        acc += std::exp(-cfg.gamma * (x - xi) * (x - xi));
    }
    return c * acc / static_cast<double>(train.size());
}

double roc_auc(std::span<const double> scores, std::span<const int> labels, int positive) {
    if (scores.size() != labels.size()) {
        throw DimensionError("roc_auc: " + std::to_string(scores.size()) + " scores vs " +
                             std::to_string(labels.size()) + " labels");
    }
    const size_t n = scores.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] < scores[b]; });

    // Average ranks over tie groups, then the Mann-Whitney U statistic.
    std::vector<double> rank(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) {
            ++j;
        }
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (size_t t = i; t <= j; ++t) {
            rank[order[t]] = avg;
        }
        i = j + 1;
    }
    double pos_rank_sum = 0.0;
    size_t n_pos = 0;
    for (size_t t = 0; t < n; ++t) {
        if (labels[t] == positive) {
            pos_rank_sum += rank[t];
            ++n_pos;
        }
    }
    const size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw ValidationError("roc_auc needs both classes present");
    }
    const double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace qborn

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

#include "qborn/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qborn/errors.hpp"
#include "qborn/rng.hpp"

namespace qborn {

namespace {

double clamp_unit(double v) {
    return std::clamp(v, 0.0, 1.0);
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<std::vector<double>> Dataset::feature_matrix() const {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row.features);
    }
    return out;
}

std::vector<int> Dataset::labels() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row.label);
    }
    return out;
}

Dataset gen_xor(const XorConfig& cfg) {
    if (cfg.n_per_blob < 1) {
        throw ValidationError("gen_xor: n_per_blob must be positive");
    }
    if (cfg.blob_std < 0.0) {
        throw ValidationError("gen_xor: blob_std must be non-negative");
    }
    struct Blob {
        double cx, cy;
        int label;
    };
    // Same-label blobs on the diagonals: the layout no line can separate.
    const Blob blobs[4] = {
        {0.25, 0.25, 1},
        {0.75, 0.75, 1},
        {0.25, 0.75, 2},
        {0.75, 0.25, 2},
    };
    Dataset data;
    data.has_labels = true;
    data.rows.reserve(static_cast<size_t>(cfg.n_per_blob) * 4);
    for (uint64_t b = 0; b < 4; ++b) {
        RngStream rng(cfg.seed, b);
        for (int i = 0; i < cfg.n_per_blob; ++i) {
            const double x = clamp_unit(blobs[b].cx + cfg.blob_std * rng.normal());
            const double y = clamp_unit(blobs[b].cy + cfg.blob_std * rng.normal());
            data.rows.push_back({{x, y}, blobs[b].label});
        }
    }
    return data;
}

std::vector<double> gen_bigaussian(const BiGaussConfig& cfg) {
    if (cfg.n < 1) {
        throw ValidationError("gen_bigaussian: n must be positive");
    }
    if (cfg.stds[0] < 0.0 || cfg.stds[1] < 0.0) {
        throw ValidationError("gen_bigaussian: stds must be non-negative");
    }
    if (cfg.weights[0] < 0.0 || cfg.weights[1] < 0.0 ||
        std::abs(cfg.weights[0] + cfg.weights[1] - 1.0) > 1e-12) {
        throw ValidationError("gen_bigaussian: weights must be non-negative and sum to 1");
    }
    std::vector<double> out(static_cast<size_t>(cfg.n));
    RngStream rng(cfg.seed, 0);
    for (double& v : out) {
        const int c = rng.uniform01() < cfg.weights[0] ? 0 : 1;
        v = cfg.means[c] + cfg.stds[c] * rng.normal();
    }
    return out;
}

std::pair<Dataset, Dataset> shuffle_split(const Dataset& data, double train_fraction,
                                          uint64_t seed) {
    if (train_fraction < 0.0 || train_fraction > 1.0) {
        throw ValidationError("train_fraction must be in [0, 1]");
    }
    std::vector<size_t> order(data.size());
    for (size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    RngStream rng(seed, 0);
    for (size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    const size_t n_train =
        static_cast<size_t>(std::llround(train_fraction * static_cast<double>(data.size())));
    std::pair<Dataset, Dataset> out;
    out.first.has_labels = out.second.has_labels = data.has_labels;
    for (size_t i = 0; i < order.size(); ++i) {
        (i < n_train ? out.first : out.second).rows.push_back(data.rows[order[i]]);
    }
    return out;
}

Dataset read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open CSV file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("CSV file is empty: " + path);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::vector<std::string> header;
    {
        std::istringstream fields(line);
        for (std::string tok; std::getline(fields, tok, ',');) {
            header.push_back(tok);
        }
    }
    if (header.empty()) {
        throw DataError("CSV header is empty: " + path);
    }
    const bool has_labels = header.back() == "label";
    const size_t n_features = header.size() - (has_labels ? 1 : 0);
    if (n_features == 0) {
        throw DataError("CSV has no feature columns: " + path);
    }

    Dataset data;
    data.has_labels = has_labels;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string tok; std::getline(fields, tok, ',');) {
            cells.push_back(tok);
        }
        if (cells.size() != header.size()) {
            throw DataError(path + ": line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
        }
        LabeledSample row;
        row.features.resize(n_features);
        for (size_t i = 0; i < n_features; ++i) {
            try {
                size_t used = 0;
                row.features[i] = std::stod(cells[i], &used);
                if (used != cells[i].size()) {
                    throw std::invalid_argument("");
                }
            } catch (...) {
                throw DataError(path + ": line " + std::to_string(line_no) + ": bad value '" +
                                cells[i] + "' in column " + header[i]);
            }
        }
        if (has_labels) {
            try {
                row.label = std::stoi(cells.back());
            } catch (...) {
                throw DataError(path + ": line " + std::to_string(line_no) + ": bad label '" +
                                cells.back() + "'");
            }
            if (row.label < 1) {
                throw DataError(path + ": line " + std::to_string(line_no) + ": label " +
                                std::to_string(row.label) + " must be >= 1");
            }
        }
        data.rows.push_back(std::move(row));
    }
    if (data.rows.empty()) {
        throw DataError("CSV has a header but no data rows: " + path);
    }
    return data;
}

void write_csv(const std::string& path, const Dataset& data) {
    if (data.rows.empty()) {
        throw ValidationError("refusing to write empty dataset: " + path);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open CSV file for writing: " + path);
    }
    const int dim = data.dim();
    for (int i = 1; i <= dim; ++i) {
        out << "x" << i << (i < dim ? "," : "");
    }
    if (data.has_labels) {
        out << ",label";
    }
    out << "\n";
    for (const auto& row : data.rows) {
        if (row.features.size() != static_cast<size_t>(dim)) {
            throw ValidationError("dataset rows have inconsistent dimension");
        }
        for (int i = 0; i < dim; ++i) {
            out << format_value(row.features[static_cast<size_t>(i)]) << (i + 1 < dim ? "," : "");
        }
        if (data.has_labels) {
            out << "," << row.label;
        }
        out << "\n";
    }
    if (!out) {
        throw DataError("failed writing CSV file: " + path);
    }
}

}  // namespace qborn

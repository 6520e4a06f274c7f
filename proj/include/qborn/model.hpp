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

#include <memory>
#include <optional>
#include <string>

#include "qborn/circuit.hpp"
#include "qborn/estimator.hpp"
#include "qborn/qfm.hpp"

namespace qborn {

/// Version tag written into every model document.
inline constexpr const char* kModelFormat = "qborn-model/1";

/// Fitted model: the dataset state, its compiled preparation circuit, the
/// feature map that produced it and (for classifiers) the label encoding.
struct TrainedModel {
    DatasetState dataset;
    GateCircuit prep;
    std::shared_ptr<const FeatureMap> qfm;
    std::optional<LabelEncoding> labels;
    double prep_fidelity = 0.0;
    int cnot_count = 0;
};

/// Serializes the model as a qborn-model/1 JSON document (deterministic:
/// identical models produce identical bytes).
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace qborn

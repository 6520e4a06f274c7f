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

#include <stdexcept>
#include <string>

namespace qborn {

/// Shape or size mismatch between states, circuits and operators.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input violates a construction invariant (normalization, index ranges, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem with external data: files, CSV rows, model documents.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerically degenerate situation: vanishing norms, empty feature vectors.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qborn

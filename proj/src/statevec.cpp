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

#include "qborn/statevec.hpp"

#include <cmath>

#include "qborn/errors.hpp"
#include "qborn/kernels.hpp"

namespace qborn {

namespace {

int qubits_for_dim(uint64_t dim, const char* what) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw ValidationError(std::string(what) + ": dimension " + std::to_string(dim) +
                              " is not a power of two");
    }
    int n = 0;
    while ((uint64_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

}  // namespace

std::string index_to_bits(uint64_t index, int n_qubits) {
    std::string out(static_cast<size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> qubit_to_bit(q, n_qubits)) & 1) {
            out[static_cast<size_t>(q)] = '1';
        }
    }
    return out;
}

uint64_t bits_to_index(const std::string& bits) {
    uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ValidationError("bitstring contains non-binary character: '" + bits + "'");
        }
        index = (index << 1) | static_cast<uint64_t>(c == '1');
    }
    return index;
}

StateVector::StateVector(std::vector<cdouble> amplitudes) : amps_(std::move(amplitudes)) {
    n_qubits_ = qubits_for_dim(amps_.size(), "StateVector");
    const double norm_sq = kern::norm_sq(amps_.data(), amps_.size());
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        throw ValidationError("StateVector is not normalized: sum of |a|^2 = " +
                              std::to_string(norm_sq) +
                              " (use StateVector::normalized for explicit normalization)");
    }
}

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, uint64_t index) {
    if (n_qubits < 0) {
        throw ValidationError("negative qubit count");
    }
    const uint64_t dim = uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw ValidationError("basis index " + std::to_string(index) + " out of range for " +
                              std::to_string(n_qubits) + " qubits");
    }
    std::vector<cdouble> amps(dim, cdouble{0.0, 0.0});
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::normalized(std::vector<cdouble> amplitudes, double min_norm) {
    (void)qubits_for_dim(amplitudes.size(), "StateVector::normalized");
    const double norm = std::sqrt(kern::norm_sq(amplitudes.data(), amplitudes.size()));
    if (norm < min_norm) {
        throw DegeneracyError("cannot normalize amplitude vector: norm " + std::to_string(norm) +
                              " below " + std::to_string(min_norm));
    }
    for (auto& a : amplitudes) {
        a /= norm;
    }
    return StateVector(std::move(amplitudes));
}

cdouble ComplexMatrix::trace() const {
    cdouble t{0.0, 0.0};
    for (uint64_t i = 0; i < dim; ++i) {
        t += at(i, i);
    }
    return t;
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix entries) : entries_(std::move(entries)), n_qubits_(n_qubits) {
    const uint64_t dim = uint64_t{1} << n_qubits;
    if (entries_.dim != dim) {
        throw DimensionError("DensityMatrix: dimension " + std::to_string(entries_.dim) +
                             " does not match " + std::to_string(n_qubits) + " qubits (" +
                             std::to_string(dim) + ")");
    }
    for (uint64_t r = 0; r < dim; ++r) {
        for (uint64_t c = r; c < dim; ++c) {
            if (std::abs(entries_.at(r, c) - std::conj(entries_.at(c, r))) > kHermitianTolerance) {
                throw ValidationError("DensityMatrix is not Hermitian at (" + std::to_string(r) +
                                      ", " + std::to_string(c) + ")");
            }
        }
    }
    const cdouble tr = entries_.trace();
    if (std::abs(tr - cdouble{1.0, 0.0}) > kTraceTolerance) {
        throw ValidationError("DensityMatrix trace is " + std::to_string(tr.real()) + " + " +
                              std::to_string(tr.imag()) + "i, expected 1");
    }
}

double DensityMatrix::expectation(const StateVector& v) const {
    if (v.n_qubits() != n_qubits_) {
        throw DimensionError("expectation: state has " + std::to_string(v.n_qubits()) +
                             " qubits, density matrix has " + std::to_string(n_qubits_));
    }
    const auto& a = v.amplitudes();
    cdouble acc{0.0, 0.0};
    for (uint64_t r = 0; r < dim(); ++r) {
        cdouble row{0.0, 0.0};
        for (uint64_t c = 0; c < dim(); ++c) {
            row += entries_.at(r, c) * a[c];
        }
        acc += std::conj(a[r]) * row;
    }
    return acc.real();
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("inner_product: dimension mismatch, " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    }
    return kern::dot_conj(a.amplitudes().data(), b.amplitudes().data(), a.dim());
}

double projector_overlap(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    std::vector<cdouble> amps(a.dim() * b.dim());
    const uint64_t right_dim = b.dim();
    for (uint64_t j = 0; j < a.dim(); ++j) {
        const cdouble aj = a.amplitude(j);
        for (uint64_t k = 0; k < right_dim; ++k) {
            amps[j * right_dim + k] = aj * b.amplitude(k);
        }
    }
    return StateVector(std::move(amps));
}

ComplexMatrix outer_product(const StateVector& v) {
    ComplexMatrix m(v.dim());
    for (uint64_t r = 0; r < v.dim(); ++r) {
        for (uint64_t c = 0; c < v.dim(); ++c) {
            m.at(r, c) = v.amplitude(r) * std::conj(v.amplitude(c));
        }
    }
    return m;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemSplit& split, Keep keep) {
    if (split.left_qubits <= 0 || split.right_qubits <= 0) {
        throw ValidationError("SubsystemSplit parts must be positive");
    }
    const uint64_t left_dim = uint64_t{1} << split.left_qubits;
    const uint64_t right_dim = uint64_t{1} << split.right_qubits;
    if (m.dim != left_dim * right_dim) {
        throw DimensionError("partial_trace: operator dimension " + std::to_string(m.dim) +
                             " does not match split " + std::to_string(split.left_qubits) + "+" +
                             std::to_string(split.right_qubits));
    }
    // Composite index is (x, y) = x * right_dim + y with x the left block.
    if (keep == Keep::kRight) {
        ComplexMatrix out(right_dim);
        for (uint64_t y = 0; y < right_dim; ++y) {
            for (uint64_t y2 = 0; y2 < right_dim; ++y2) {
                cdouble acc{0.0, 0.0};
                for (uint64_t x = 0; x < left_dim; ++x) {
                    acc += m.at(x * right_dim + y, x * right_dim + y2);
                }
                out.at(y, y2) = acc;
            }
        }
        return out;
    }
    ComplexMatrix out(left_dim);
    for (uint64_t x = 0; x < left_dim; ++x) {
        for (uint64_t x2 = 0; x2 < left_dim; ++x2) {
            cdouble acc{0.0, 0.0};
            for (uint64_t y = 0; y < right_dim; ++y) {
                acc += m.at(x * right_dim + y, x2 * right_dim + y);
            }
            out.at(x, x2) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSplit& split, Keep keep) {
    if (split.total() != rho.n_qubits()) {
        throw DimensionError("partial_trace: split " + std::to_string(split.left_qubits) + "+" +
                             std::to_string(split.right_qubits) + " does not cover " +
                             std::to_string(rho.n_qubits()) + " qubits");
    }
    const int kept = keep == Keep::kLeft ? split.left_qubits : split.right_qubits;
    return DensityMatrix(kept, partial_trace(rho.entries(), split, keep));
}

}  // namespace qborn

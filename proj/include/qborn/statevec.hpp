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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qborn {

using cdouble = std::complex<double>;

/// Qubit ordering convention, used everywhere (states, circuits, counts,
/// files): qubit 0 is the MOST significant bit of the amplitude index, so
/// the bitstring for basis index j reads qubit 0 first. For an n-qubit
/// register, qubit q owns index bit (n - 1 - q).
inline int qubit_to_bit(int qubit, int n_qubits) {
    return n_qubits - 1 - qubit;
}

/// Renders basis index j of an n-qubit register as a bitstring, qubit 0 first.
std::string index_to_bits(uint64_t index, int n_qubits);

/// Inverse of index_to_bits. Throws ValidationError on non-binary characters.
uint64_t bits_to_index(const std::string& bits);

/**
 * Unit-norm pure state of an n-qubit register.
 *
 * Construction validates the norm (sum of |a_j|^2 within kNormTolerance
 * of 1) instead of silently renormalizing; mid-computation accumulators
 * should stay plain std::vector<cdouble> and go through normalized() once.
 * Immutable after construction.
 */
class StateVector {
  public:
    static constexpr double kNormTolerance = 1e-12;

    /// Takes ownership of `amplitudes`; size must be a power of two and the
    /// norm must already be 1 within kNormTolerance.
    explicit StateVector(std::vector<cdouble> amplitudes);

    /// |0...0> on n qubits (n may be 0: the scalar state [1]).
    static StateVector zero_state(int n_qubits);

    /// Computational basis state |index> on n qubits.
    static StateVector basis_state(int n_qubits, uint64_t index);

    /// Explicit L2 normalization of an accumulator. Throws DegeneracyError
    /// when the norm is below min_norm (e.g. perfectly cancelling sums).
    static StateVector normalized(std::vector<cdouble> amplitudes, double min_norm = 1e-12);

    int n_qubits() const {
        return n_qubits_;
    }
    uint64_t dim() const {
        return amps_.size();
    }
    const std::vector<cdouble>& amplitudes() const {
        return amps_;
    }
    cdouble amplitude(uint64_t index) const {
        return amps_[index];
    }

  private:
    std::vector<cdouble> amps_;
    int n_qubits_;
};

/// Which half of a bipartite register survives a partial trace.
enum class Keep { kLeft, kRight };

/// Bipartition of a register into `left` (qubits 0..left-1, the high index
/// bits) and `right` (the remaining low bits).
struct SubsystemSplit {
    int left_qubits;
    int right_qubits;

    int total() const {
        return left_qubits + right_qubits;
    }
};

/// Dense row-major square matrix over the amplitude index space. Plain
/// storage type used for intermediate operators that need not satisfy
/// density-matrix invariants.
struct ComplexMatrix {
    uint64_t dim = 0;
    std::vector<cdouble> data;  // row-major, dim*dim entries

    ComplexMatrix() = default;
    explicit ComplexMatrix(uint64_t d) : dim(d), data(d * d, cdouble{0.0, 0.0}) {}

    cdouble& at(uint64_t row, uint64_t col) {
        return data[row * dim + col];
    }
    const cdouble& at(uint64_t row, uint64_t col) const {
        return data[row * dim + col];
    }

    cdouble trace() const;
};

/**
 * Validated density operator on n qubits: Hermitian within 1e-12 and
 * unit trace within 1e-12. Positivity is not checked eagerly (it is
 * exercised through quadratic forms, which the tests cover).
 */
class DensityMatrix {
  public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;

    DensityMatrix(int n_qubits, ComplexMatrix entries);

    int n_qubits() const {
        return n_qubits_;
    }
    uint64_t dim() const {
        return entries_.dim;
    }
    const ComplexMatrix& entries() const {
        return entries_;
    }
    cdouble entry(uint64_t row, uint64_t col) const {
        return entries_.at(row, col);
    }

    /// <v|rho|v>; the imaginary part (roundoff) is discarded.
    double expectation(const StateVector& v) const;

  private:
    ComplexMatrix entries_;
    int n_qubits_;
};

/// <a|b>, conjugate-linear in `a`. Throws DimensionError on size mismatch.
cdouble inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double projector_overlap(const StateVector& a, const StateVector& b);

/// a (x) b; amplitude at index j*2^{b.n_qubits} + k is a_j * b_k, i.e. the
/// qubits of `a` become the high (left) qubits of the product.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// |v><v|.
ComplexMatrix outer_product(const StateVector& v);

/// Partial trace by direct index summation, O(4^n). `m` must be consistent
/// with the split. Works on arbitrary (not necessarily Hermitian) operators.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemSplit& split, Keep keep);

/// Partial trace of a density matrix; the result is validated again.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSplit& split, Keep keep);

}  // namespace qborn

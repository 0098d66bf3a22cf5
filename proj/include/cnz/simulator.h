// Copyright 2026 The cnz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "cnz/circuit.h"

namespace cnz {

using Complex = std::complex<double>;

/// Squared-norm below which a measurement projection is discarded.
inline constexpr double kPruneThreshold = 1e-12;

/// Largest register `unitary_of` will materialize (a 2^10 x 2^10 dense matrix).
inline constexpr uint32_t kMaxUnitaryQubits = 10;

/// Largest register the statevector simulator accepts.
inline constexpr uint32_t kMaxSimulatedQubits = 24;

/// Dense square complex matrix, row-major.
struct Operator {
    size_t dim = 0;
    std::vector<Complex> entries;

    Operator() = default;
    explicit Operator(size_t dim);
    static Operator identity(size_t dim);
    static Operator diagonal(const std::vector<Complex> &diag);

    Complex &operator()(size_t row, size_t col) {
        return entries[row * dim + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries[row * dim + col];
    }

    Operator operator*(const Operator &rhs) const;
    Operator adjoint() const;
    /// max |a_ij - b_ij|.
    double max_abs_diff(const Operator &other) const;
    bool is_unitary(double tolerance) const;
    std::string str() const;
};

/// Amplitudes over 2^q basis states; bit k of the index is the value of qubit k.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0> on `qubit_count` qubits.
    explicit StateVector(uint32_t qubit_count);
    StateVector(uint32_t qubit_count, std::vector<Complex> amplitudes);
    static StateVector basis(uint32_t qubit_count, uint64_t index);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    std::vector<Complex> &mutable_amplitudes() {
        return amplitudes_;
    }
    Complex operator[](uint64_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;
    /// Divides by the 2-norm. No-op on the zero vector.
    void normalize();

   private:
    uint32_t qubit_count_ = 0;
    std::vector<Complex> amplitudes_{Complex{1, 0}};
};

/// One measurement history.
struct BranchRecord {
    /// Indexed by bit id. Every bit of a validated circuit is written, so every entry is 0 or 1.
    std::vector<uint8_t> outcomes;
    /// Hidden outcomes of Reset ops, in op order. Distinguishes branches a reset split.
    std::vector<uint8_t> reset_outcomes;
    double probability = 0;
    StateVector final_state;
};

/// Exact matrix of a unitary gate. Two-qubit matrices use basis index (operand0) + 2*(operand1);
/// for CX operand0 is the control.
///
/// SqrtXdg is H·diag(1, -i)·H = (1/2)[[1-i, 1+i], [1+i, 1-i]]: eigenvalue 1 on |+>, -i on |->.
Operator gate_matrix(GateType type);

/// Applies one unitary op (conditions are ignored; callers evaluate them).
StateVector apply(const StateVector &state, const Op &op);

/// In-place variant used by the hot loops.
void apply_in_place(StateVector &state, const Op &op);

/// Depth-first enumeration of all measurement (and reset) outcomes, outcome 0 first.
/// Branches with squared norm below kPruneThreshold are dropped.
std::vector<BranchRecord> run_branches(const Circuit &circuit, const StateVector &input);

/// Product of the gate matrices on the full register.
Operator unitary_of(const Circuit &circuit);

}  // namespace cnz

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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cnz {

struct QubitId {
    uint32_t index = 0;
    auto operator<=>(const QubitId &) const = default;
};

struct BitId {
    uint32_t index = 0;
    auto operator<=>(const BitId &) const = default;
};

/// The closed gate alphabet. T and Tdg are the only non-Clifford kinds.
enum class GateType : uint8_t {
    H,
    X,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    SqrtX,
    SqrtXdg,
    CX,
    CZ,
    Measure,
    Reset,
};

std::string_view gate_name(GateType type);
bool is_two_qubit(GateType type);
bool is_unitary(GateType type);
bool is_non_clifford(GateType type);

/// Single-bit equality test on a previously written measurement bit.
struct Condition {
    BitId bit;
    bool value = true;
    bool operator==(const Condition &) const = default;
};

/// One instruction. `qubits[1]` is only meaningful for two-qubit kinds (CX: control, target).
/// `bit` is only meaningful for Measure.
struct Op {
    GateType type = GateType::H;
    std::array<QubitId, 2> qubits{};
    BitId bit{};
    std::optional<Condition> condition;

    static Op single(GateType type, QubitId q);
    static Op cx(QubitId control, QubitId target);
    static Op cz(QubitId a, QubitId b);
    static Op measure(QubitId q, BitId b);
    static Op reset(QubitId q);

    /// Returns a copy conditioned on `bit == value`.
    Op when(BitId bit, bool value) const;

    size_t arity() const {
        return is_two_qubit(type) ? 2 : 1;
    }
    bool touches(QubitId q) const;
    bool operator==(const Op &other) const;
    std::string str() const;
};

struct Violation {
    std::optional<size_t> op_index;
    std::string message;
    std::string str() const;
};

/// Clifford+T circuit with measurements and classically conditioned gates.
///
/// Qubits listed in `data_qubits` form the logical interface. Everything else is an
/// ancilla: it starts in |0> and must end in |0> or be measured out.
struct Circuit {
    uint32_t qubit_count = 0;
    uint32_t bit_count = 0;
    std::vector<Op> ops;
    std::vector<QubitId> data_qubits;
    std::vector<QubitId> ancilla_qubits;

    /// Circuit on `qubit_count` qubits, all of them data.
    static Circuit all_data(uint32_t qubit_count);
    /// Circuit whose ancillas are the qubits not listed in `data`.
    static Circuit with_data(uint32_t qubit_count, std::vector<QubitId> data);

    Circuit &append(const Op &op);
    /// Allocates the next classical bit.
    BitId new_bit();

    bool is_ancilla(QubitId q) const;
    bool has_measurement_or_condition() const;

    bool operator==(const Circuit &other) const = default;
    std::string str() const;
};

/// Returns every well-formedness violation; empty iff the simulator can execute the circuit.
std::vector<Violation> validate(const Circuit &circuit);

/// Throws std::invalid_argument listing the violations when `validate` is non-empty.
void require_valid(const Circuit &circuit);

/// Runs `first` then `second`. Bits of `second` are renumbered past those of `first`.
Circuit compose(const Circuit &first, const Circuit &second);

/// Reversed, gate-inverted copy of a measurement-free, unconditioned circuit.
Circuit inverse_unitary_segment(const Circuit &circuit);

GateType inverse_gate(GateType type);

/// For each ancilla that is measured out (its last touching op is a Measure), the bit
/// holding its final value. Other ancillas are expected to end in |0>.
std::vector<std::pair<QubitId, BitId>> measured_out_ancillas(const Circuit &circuit);

}  // namespace cnz

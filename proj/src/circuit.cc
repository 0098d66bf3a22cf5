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

#include "cnz/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cnz {

std::string_view gate_name(GateType type) {
    switch (type) {
        case GateType::H:
            return "H";
        case GateType::X:
            return "X";
        case GateType::Z:
            return "Z";
        case GateType::S:
            return "S";
        case GateType::Sdg:
            return "SDG";
        case GateType::T:
            return "T";
        case GateType::Tdg:
            return "TDG";
        case GateType::SqrtX:
            return "SQRT_X";
        case GateType::SqrtXdg:
            return "SQRT_X_DAG";
        case GateType::CX:
            return "CX";
        case GateType::CZ:
            return "CZ";
        case GateType::Measure:
            return "M";
        case GateType::Reset:
            return "R";
    }
    return "?";
}

bool is_two_qubit(GateType type) {
    return type == GateType::CX || type == GateType::CZ;
}

bool is_unitary(GateType type) {
    return type != GateType::Measure && type != GateType::Reset;
}

bool is_non_clifford(GateType type) {
    return type == GateType::T || type == GateType::Tdg;
}

Op Op::single(GateType type, QubitId q) {
    if (is_two_qubit(type)) {
        throw std::invalid_argument("Op::single called with a two-qubit gate");
    }
    Op op;
    op.type = type;
    op.qubits = {q, QubitId{}};
    return op;
}

Op Op::cx(QubitId control, QubitId target) {
    Op op;
    op.type = GateType::CX;
    op.qubits = {control, target};
    return op;
}

Op Op::cz(QubitId a, QubitId b) {
    Op op;
    op.type = GateType::CZ;
    op.qubits = {a, b};
    return op;
}

Op Op::measure(QubitId q, BitId b) {
    Op op;
    op.type = GateType::Measure;
    op.qubits = {q, QubitId{}};
    op.bit = b;
    return op;
}

Op Op::reset(QubitId q) {
    return single(GateType::Reset, q);
}

Op Op::when(BitId b, bool value) const {
    Op copy = *this;
    copy.condition = Condition{b, value};
    return copy;
}

bool Op::touches(QubitId q) const {
    return qubits[0] == q || (arity() == 2 && qubits[1] == q);
}

bool Op::operator==(const Op &other) const {
    if (type != other.type || condition != other.condition || qubits[0] != other.qubits[0]) {
        return false;
    }
    if (arity() == 2 && qubits[1] != other.qubits[1]) {
        return false;
    }
    return type != GateType::Measure || bit == other.bit;
}

std::string Op::str() const {
    std::ostringstream out;
    out << gate_name(type) << ' ' << qubits[0].index;
    if (arity() == 2) {
        out << ' ' << qubits[1].index;
    }
    if (type == GateType::Measure) {
        out << " -> b" << bit.index;
    }
    if (condition.has_value()) {
        out << " if b" << condition->bit.index << "==" << (condition->value ? 1 : 0);
    }
    return out.str();
}

std::string Violation::str() const {
    if (op_index.has_value()) {
        return "op " + std::to_string(*op_index) + ": " + message;
    }
    return message;
}

Circuit Circuit::all_data(uint32_t qubit_count) {
    Circuit c;
    c.qubit_count = qubit_count;
    for (uint32_t q = 0; q < qubit_count; q++) {
        c.data_qubits.push_back(QubitId{q});
    }
    return c;
}

Circuit Circuit::with_data(uint32_t qubit_count, std::vector<QubitId> data) {
    Circuit c;
    c.qubit_count = qubit_count;
    std::sort(data.begin(), data.end());
    for (uint32_t q = 0; q < qubit_count; q++) {
        if (!std::binary_search(data.begin(), data.end(), QubitId{q})) {
            c.ancilla_qubits.push_back(QubitId{q});
        }
    }
    c.data_qubits = std::move(data);
    return c;
}

Circuit &Circuit::append(const Op &op) {
    ops.push_back(op);
    return *this;
}

BitId Circuit::new_bit() {
    return BitId{bit_count++};
}

bool Circuit::is_ancilla(QubitId q) const {
    return std::find(ancilla_qubits.begin(), ancilla_qubits.end(), q) != ancilla_qubits.end();
}

bool Circuit::has_measurement_or_condition() const {
    return std::any_of(ops.begin(), ops.end(), [](const Op &op) {
        return !is_unitary(op.type) || op.condition.has_value();
    });
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "Circuit(qubits=" << qubit_count << ", bits=" << bit_count << ", data=[";
    for (size_t k = 0; k < data_qubits.size(); k++) {
        out << (k ? " " : "") << data_qubits[k].index;
    }
    out << "])";
    for (const auto &op : ops) {
        out << "\n    " << op.str();
    }
    return out.str();
}

std::vector<Violation> validate(const Circuit &circuit) {
    std::vector<Violation> result;
    auto n = circuit.qubit_count;

    std::vector<int> role(n, 0);  // 1 = data, 2 = ancilla
    auto mark = [&](const std::vector<QubitId> &ids, int r, const char *label) {
        for (auto q : ids) {
            if (q.index >= n) {
                result.push_back({std::nullopt, std::string(label) + " qubit " + std::to_string(q.index) + " out of range"});
            } else if (role[q.index] != 0) {
                result.push_back({std::nullopt, "qubit " + std::to_string(q.index) + " designated more than once"});
            } else {
                role[q.index] = r;
            }
        }
    };
    mark(circuit.data_qubits, 1, "data");
    mark(circuit.ancilla_qubits, 2, "ancilla");
    for (uint32_t q = 0; q < n; q++) {
        if (role[q] == 0) {
            result.push_back({std::nullopt, "qubit " + std::to_string(q) + " is neither data nor ancilla"});
        }
    }

    std::vector<bool> written(circuit.bit_count, false);
    std::vector<std::optional<size_t>> measured_at(n);
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const auto &op = circuit.ops[k];
        bool operands_ok = true;
        for (size_t j = 0; j < op.arity(); j++) {
            if (op.qubits[j].index >= n) {
                result.push_back({k, "qubit " + std::to_string(op.qubits[j].index) + " out of range"});
                operands_ok = false;
            }
        }
        if (op.arity() == 2 && op.qubits[0] == op.qubits[1]) {
            result.push_back({k, "identical operands"});
        }
        if (op.condition.has_value()) {
            auto b = op.condition->bit.index;
            if (!is_unitary(op.type)) {
                result.push_back({k, "only unitary gates may be conditioned"});
            }
            if (b >= circuit.bit_count) {
                result.push_back({k, "condition bit b" + std::to_string(b) + " out of range"});
            } else if (!written[b]) {
                result.push_back({k, "condition on bit b" + std::to_string(b) + " precedes its write"});
            }
        }
        if (op.type == GateType::Measure) {
            auto b = op.bit.index;
            if (b >= circuit.bit_count) {
                result.push_back({k, "measurement bit b" + std::to_string(b) + " out of range"});
            } else if (written[b]) {
                result.push_back({k, "bit b" + std::to_string(b) + " written twice"});
            } else {
                written[b] = true;
            }
        }
        if (operands_ok) {
            for (size_t j = 0; j < op.arity(); j++) {
                auto q = op.qubits[j].index;
                if (op.type == GateType::Measure) {
                    measured_at[q] = k;
                } else if (op.type == GateType::Reset) {
                    measured_at[q].reset();
                }
            }
        }
    }
    for (uint32_t b = 0; b < circuit.bit_count; b++) {
        if (!written[b]) {
            result.push_back({std::nullopt, "bit b" + std::to_string(b) + " is never written"});
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (measured_at[q] && role[q] == 1) {
            result.push_back({measured_at[q], "data qubit " + std::to_string(q) + " is measured and not reset"});
        }
    }
    return result;
}

void require_valid(const Circuit &circuit) {
    auto violations = validate(circuit);
    if (violations.empty()) {
        return;
    }
    std::string msg = "invalid circuit:";
    for (const auto &v : violations) {
        msg += "\n    " + v.str();
    }
    throw std::invalid_argument(msg);
}

Circuit compose(const Circuit &first, const Circuit &second) {
    if (first.qubit_count != second.qubit_count) {
        throw std::invalid_argument(
            "compose: qubit counts differ (" + std::to_string(first.qubit_count) + " vs " +
            std::to_string(second.qubit_count) + ")");
    }
    auto sorted = [](std::vector<QubitId> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(first.data_qubits) != sorted(second.data_qubits) ||
        sorted(first.ancilla_qubits) != sorted(second.ancilla_qubits)) {
        throw std::invalid_argument("compose: data/ancilla designations conflict");
    }

    Circuit result = first;
    result.bit_count = first.bit_count + second.bit_count;
    for (Op op : second.ops) {
        if (op.type == GateType::Measure) {
            op.bit.index += first.bit_count;
        }
        if (op.condition.has_value()) {
            op.condition->bit.index += first.bit_count;
        }
        result.ops.push_back(op);
    }
    return result;
}

GateType inverse_gate(GateType type) {
    switch (type) {
        case GateType::S:
            return GateType::Sdg;
        case GateType::Sdg:
            return GateType::S;
        case GateType::T:
            return GateType::Tdg;
        case GateType::Tdg:
            return GateType::T;
        case GateType::SqrtX:
            return GateType::SqrtXdg;
        case GateType::SqrtXdg:
            return GateType::SqrtX;
        case GateType::Measure:
        case GateType::Reset:
            throw std::invalid_argument("no inverse for non-unitary " + std::string(gate_name(type)));
        default:
            return type;
    }
}

Circuit inverse_unitary_segment(const Circuit &circuit) {
    if (circuit.has_measurement_or_condition()) {
        throw std::invalid_argument("inverse_unitary_segment: circuit contains measurement, reset or conditions");
    }
    Circuit result = circuit;
    result.ops.clear();
    for (auto it = circuit.ops.rbegin(); it != circuit.ops.rend(); ++it) {
        Op op = *it;
        op.type = inverse_gate(op.type);
        result.ops.push_back(op);
    }
    return result;
}

std::vector<std::pair<QubitId, BitId>> measured_out_ancillas(const Circuit &circuit) {
    std::vector<std::pair<QubitId, BitId>> result;
    for (auto q : circuit.ancilla_qubits) {
        for (auto it = circuit.ops.rbegin(); it != circuit.ops.rend(); ++it) {
            if (it->touches(q)) {
                if (it->type == GateType::Measure) {
                    result.emplace_back(q, it->bit);
                }
                break;
            }
        }
    }
    return result;
}

}  // namespace cnz

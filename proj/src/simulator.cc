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

#include "cnz/simulator.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cnz/kernels/kernels.h"

namespace cnz {

namespace {

const Complex kI{0, 1};
const double kInvSqrt2 = 1 / std::numbers::sqrt2;

Complex eighth_turn(int k) {
    double angle = std::numbers::pi / 4 * k;
    return std::polar(1.0, angle);
}

kernels::Mat2 mat2(GateType type) {
    Complex h{kInvSqrt2, 0};
    Complex p{0.5, 0.5};   // (1+i)/2
    Complex m{0.5, -0.5};  // (1-i)/2
    switch (type) {
        case GateType::H:
            return {h, h, h, -h};
        case GateType::X:
            return {0, 1, 1, 0};
        case GateType::Z:
            return {1, 0, 0, -1};
        case GateType::S:
            return {1, 0, 0, kI};
        case GateType::Sdg:
            return {1, 0, 0, -kI};
        case GateType::T:
            return {1, 0, 0, eighth_turn(1)};
        case GateType::Tdg:
            return {1, 0, 0, eighth_turn(-1)};
        case GateType::SqrtX:
            return {p, m, m, p};
        case GateType::SqrtXdg:
            return {m, p, p, m};
        default:
            throw std::invalid_argument("no 2x2 matrix for " + std::string(gate_name(type)));
    }
}

void check_operands(const StateVector &state, const Op &op) {
    for (size_t j = 0; j < op.arity(); j++) {
        if (op.qubits[j].index >= state.qubit_count()) {
            throw std::out_of_range(
                "operand qubit " + std::to_string(op.qubits[j].index) + " out of range for " +
                std::to_string(state.qubit_count()) + "-qubit state");
        }
    }
    if (op.arity() == 2 && op.qubits[0] == op.qubits[1]) {
        throw std::invalid_argument("identical operands in " + op.str());
    }
}

}  // namespace

Operator::Operator(size_t dim) : dim(dim), entries(dim * dim) {
}

Operator Operator::identity(size_t dim) {
    Operator r(dim);
    for (size_t k = 0; k < dim; k++) {
        r(k, k) = 1;
    }
    return r;
}

Operator Operator::diagonal(const std::vector<Complex> &diag) {
    Operator r(diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        r(k, k) = diag[k];
    }
    return r;
}

Operator Operator::operator*(const Operator &rhs) const {
    if (dim != rhs.dim) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    Operator r(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t k = 0; k < dim; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < dim; j++) {
                r(i, j) += a * rhs(k, j);
            }
        }
    }
    return r;
}

Operator Operator::adjoint() const {
    Operator r(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

double Operator::max_abs_diff(const Operator &other) const {
    if (dim != other.dim) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < entries.size(); k++) {
        worst = std::max(worst, std::abs(entries[k] - other.entries[k]));
    }
    return worst;
}

bool Operator::is_unitary(double tolerance) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim)) <= tolerance;
}

std::string Operator::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            auto v = (*this)(i, j);
            out << (j ? " " : "") << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
        }
        out << "\n";
    }
    return out.str();
}

StateVector::StateVector(uint32_t qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count > kMaxSimulatedQubits) {
        throw std::invalid_argument("register of " + std::to_string(qubit_count) + " qubits is too large to simulate");
    }
    amplitudes_.assign(size_t{1} << qubit_count, Complex{});
    amplitudes_[0] = 1;
}

StateVector::StateVector(uint32_t qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
    if (qubit_count > kMaxSimulatedQubits) {
        throw std::invalid_argument("register of " + std::to_string(qubit_count) + " qubits is too large to simulate");
    }
    if (amplitudes_.size() != (size_t{1} << qubit_count)) {
        throw std::invalid_argument("amplitude count does not match 2^qubit_count");
    }
}

StateVector StateVector::basis(uint32_t qubit_count, uint64_t index) {
    StateVector s(qubit_count);
    if (index >= s.amplitudes_.size()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amplitudes_[0] = 0;
    s.amplitudes_[index] = 1;
    return s;
}

double StateVector::norm_squared() const {
    return kernels::active().norm_squared(amplitudes_);
}

void StateVector::normalize() {
    double n2 = norm_squared();
    if (n2 == 0) {
        return;
    }
    double inv = 1 / std::sqrt(n2);
    for (auto &a : amplitudes_) {
        a *= inv;
    }
}

Operator gate_matrix(GateType type) {
    if (!is_unitary(type)) {
        throw std::invalid_argument("no matrix for non-unitary " + std::string(gate_name(type)));
    }
    if (type == GateType::CX) {
        Operator r = Operator::identity(4);
        r(1, 1) = r(3, 3) = 0;
        r(1, 3) = r(3, 1) = 1;
        return r;
    }
    if (type == GateType::CZ) {
        return Operator::diagonal({1, 1, 1, -1});
    }
    auto m = mat2(type);
    Operator r(2);
    r.entries.assign(m.begin(), m.end());
    return r;
}

void apply_in_place(StateVector &state, const Op &op) {
    check_operands(state, op);
    const auto &k = kernels::active();
    auto amps = std::span<Complex>(state.mutable_amplitudes());
    unsigned q0 = op.qubits[0].index;
    unsigned q1 = op.qubits[1].index;
    switch (op.type) {
        case GateType::Z:
            k.apply_phase(amps, q0, -1);
            return;
        case GateType::S:
            k.apply_phase(amps, q0, kI);
            return;
        case GateType::Sdg:
            k.apply_phase(amps, q0, -kI);
            return;
        case GateType::T:
            k.apply_phase(amps, q0, eighth_turn(1));
            return;
        case GateType::Tdg:
            k.apply_phase(amps, q0, eighth_turn(-1));
            return;
        case GateType::CX:
            k.apply_cx(amps, q0, q1);
            return;
        case GateType::CZ:
            k.apply_cz(amps, q0, q1);
            return;
        case GateType::Measure:
        case GateType::Reset:
            throw std::invalid_argument("apply: " + op.str() + " is not unitary");
        default:
            k.apply_matrix(amps, q0, mat2(op.type));
            return;
    }
}

StateVector apply(const StateVector &state, const Op &op) {
    StateVector result = state;
    apply_in_place(result, op);
    return result;
}

namespace {

struct BranchWalker {
    const Circuit &circuit;
    std::vector<BranchRecord> out;
    std::vector<uint8_t> outcomes;
    std::vector<uint8_t> resets;

    void walk(StateVector state, size_t start) {
        const auto &ops = circuit.ops;
        for (size_t k = start; k < ops.size(); k++) {
            const Op &op = ops[k];
            if (op.condition.has_value() && outcomes[op.condition->bit.index] != (op.condition->value ? 1 : 0)) {
                continue;
            }
            if (is_unitary(op.type)) {
                apply_in_place(state, op);
                continue;
            }
            unsigned q = op.qubits[0].index;
            for (uint8_t v = 0; v < 2; v++) {
                StateVector branch = state;
                kernels::project(branch.mutable_amplitudes(), q, v != 0);
                if (branch.norm_squared() < kPruneThreshold) {
                    continue;
                }
                if (op.type == GateType::Measure) {
                    outcomes[op.bit.index] = v;
                    walk(std::move(branch), k + 1);
                } else {
                    if (v) {
                        apply_in_place(branch, Op::single(GateType::X, op.qubits[0]));
                    }
                    resets.push_back(v);
                    walk(std::move(branch), k + 1);
                    resets.pop_back();
                }
            }
            return;
        }
        BranchRecord record;
        record.outcomes = outcomes;
        record.reset_outcomes = resets;
        record.probability = state.norm_squared();
        state.normalize();
        record.final_state = std::move(state);
        out.push_back(std::move(record));
    }
};

}  // namespace

std::vector<BranchRecord> run_branches(const Circuit &circuit, const StateVector &input) {
    require_valid(circuit);
    if (input.qubit_count() != circuit.qubit_count) {
        throw std::invalid_argument(
            "run_branches: input has " + std::to_string(input.qubit_count()) + " qubits, circuit has " +
            std::to_string(circuit.qubit_count));
    }
    if (std::abs(input.norm_squared() - 1) > 1e-9) {
        throw std::invalid_argument("run_branches: input state is not normalized");
    }
    uint64_t ancilla_mask = 0;
    for (auto q : circuit.ancilla_qubits) {
        ancilla_mask |= uint64_t{1} << q.index;
    }
    double leaked = 0;
    const auto &amps = input.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i & ancilla_mask) {
            leaked += std::norm(amps[i]);
        }
    }
    if (leaked > 1e-9) {
        throw std::invalid_argument("run_branches: ancilla qubits are not in |0> at input");
    }

    BranchWalker walker{circuit, {}, std::vector<uint8_t>(circuit.bit_count, 0), {}};
    walker.walk(input, 0);
    return std::move(walker.out);
}

Operator unitary_of(const Circuit &circuit) {
    if (circuit.has_measurement_or_condition()) {
        throw std::invalid_argument("unitary_of: circuit contains measurement, reset or conditions");
    }
    if (circuit.qubit_count > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary_of: register too large for a dense matrix");
    }
    require_valid(circuit);
    size_t dim = size_t{1} << circuit.qubit_count;
    Operator result(dim);
    for (size_t col = 0; col < dim; col++) {
        StateVector s = StateVector::basis(circuit.qubit_count, col);
        for (const auto &op : circuit.ops) {
            apply_in_place(s, op);
        }
        for (size_t row = 0; row < dim; row++) {
            result(row, col) = s[row];
        }
    }
    return result;
}

}  // namespace cnz

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
#include <random>

#include "cnz/kernels/kernels.h"
#include "cnz/synthesis.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cnz;

namespace {

QubitId q(uint32_t k) {
    return QubitId{k};
}

const double kS = 1 / std::numbers::sqrt2;

double state_diff(const StateVector &a, const std::vector<Complex> &b) {
    double worst = 0;
    for (size_t k = 0; k < b.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

/// The 16 data amplitudes of a 5-qubit branch state with the ancilla (qubit 4) in |0>.
std::vector<Complex> data_part(const StateVector &s) {
    std::vector<Complex> r(16);
    for (size_t x = 0; x < 16; x++) {
        r[x] = s[x];
    }
    return r;
}

}  // namespace

TEST(gate_matrix, t_squared_is_s) {
    auto s = StateVector::basis(1, 1);
    s = apply(s, Op::single(GateType::T, q(0)));
    s = apply(s, Op::single(GateType::T, q(0)));
    EXPECT_NEAR(std::abs(s[1] - Complex(0, 1)), 0, 1e-12);
    EXPECT_EQ(s[0], Complex(0, 0));
}

TEST(gate_matrix, sqrt_x_dag_squared_is_x) {
    auto m = gate_matrix(GateType::SqrtXdg);
    EXPECT_LT((m * m).max_abs_diff(gate_matrix(GateType::X)), 1e-12);
    auto p = gate_matrix(GateType::SqrtX);
    EXPECT_LT((p * p).max_abs_diff(gate_matrix(GateType::X)), 1e-12);
    EXPECT_LT((p * m).max_abs_diff(Operator::identity(2)), 1e-12);
}

TEST(gate_matrix, sqrt_x_dag_convention) {
    // H diag(1, -i) H: eigenvalue 1 on |+>, -i on |->.
    auto h = gate_matrix(GateType::H);
    auto expected = h * Operator::diagonal({1, Complex(0, -1)}) * h;
    EXPECT_LT(gate_matrix(GateType::SqrtXdg).max_abs_diff(expected), 1e-12);
    EXPECT_LT(std::abs(gate_matrix(GateType::SqrtXdg)(0, 0) - Complex(0.5, -0.5)), 1e-15);
    EXPECT_LT(std::abs(gate_matrix(GateType::SqrtXdg)(0, 1) - Complex(0.5, 0.5)), 1e-15);
}

TEST(gate_matrix, h_is_self_inverse) {
    auto h = gate_matrix(GateType::H);
    EXPECT_LT((h * h).max_abs_diff(Operator::identity(2)), 1e-12);
}

TEST(gate_matrix, all_unitary_and_inverse_pairs) {
    for (auto g : test_util::kUnitaryGates) {
        auto m = gate_matrix(g);
        EXPECT_TRUE(m.is_unitary(1e-12)) << gate_name(g);
        EXPECT_LT((gate_matrix(inverse_gate(g)) * m).max_abs_diff(Operator::identity(m.dim)), 1e-12) << gate_name(g);
    }
    EXPECT_THROW(gate_matrix(GateType::Measure), std::invalid_argument);
    EXPECT_THROW(gate_matrix(GateType::Reset), std::invalid_argument);
}

TEST(apply, hadamard_on_qubit0_sets_low_bit) {
    auto s = apply(StateVector(4), Op::single(GateType::H, q(0)));
    std::vector<Complex> expected(16);
    expected[0] = kS;
    expected[1] = kS;  // qubit 0 is the least significant bit
    EXPECT_LT(state_diff(s, expected), 1e-12);
}

TEST(apply, cz_on_11) {
    auto s = apply(StateVector::basis(2, 3), Op::cz(q(0), q(1)));
    EXPECT_EQ(s[3], Complex(-1, 0));
}

TEST(apply, cx_direction) {
    // control 0 set, target 1 clear: |01> (index 1) -> index 3.
    auto s = apply(StateVector::basis(2, 1), Op::cx(q(0), q(1)));
    EXPECT_EQ(s[3], Complex(1, 0));
    auto t = apply(StateVector::basis(2, 2), Op::cx(q(0), q(1)));
    EXPECT_EQ(t[2], Complex(1, 0));
}

TEST(apply, errors) {
    EXPECT_THROW(apply(StateVector(2), Op::single(GateType::H, q(2))), std::out_of_range);
    EXPECT_THROW(apply(StateVector(2), Op::cx(q(0), q(5))), std::out_of_range);
    EXPECT_THROW(apply(StateVector(2), Op::measure(q(0), BitId{0})), std::invalid_argument);
    EXPECT_THROW(apply(StateVector(2), Op::reset(q(0))), std::invalid_argument);
}

TEST(apply, preserves_norm_for_every_gate) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; trial++) {
        auto s = test_util::random_state(5, rng);
        for (int k = 0; k < 40; k++) {
            s = apply(s, test_util::random_unitary_op(5, rng));
            ASSERT_NEAR(s.norm_squared(), 1, 1e-9);
        }
    }
}

TEST(apply, matches_dense_oracle) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto c = test_util::random_unitary_circuit(4, 25, rng);
        auto s = test_util::random_state(4, rng);
        auto expected = test_util::mat_vec(test_util::dense_unitary(c), s.amplitudes());
        for (const auto &op : c.ops) {
            s = apply(s, op);
        }
        EXPECT_LT(state_diff(s, expected), 1e-12);
    }
}

TEST(run_branches, deterministic_measurement) {
    Circuit c = Circuit::with_data(1, {});
    c.append(Op::measure(q(0), c.new_bit()));
    auto branches = run_branches(c, StateVector(1));
    ASSERT_EQ(branches.size(), 1u);
    EXPECT_EQ(branches[0].outcomes, std::vector<uint8_t>{0});
    EXPECT_DOUBLE_EQ(branches[0].probability, 1);
}

TEST(run_branches, uniform_superposition) {
    Circuit c = Circuit::with_data(1, {});
    c.append(Op::single(GateType::H, q(0)));
    c.append(Op::measure(q(0), c.new_bit()));
    auto branches = run_branches(c, StateVector(1));
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].outcomes, std::vector<uint8_t>{0});
    EXPECT_EQ(branches[1].outcomes, std::vector<uint8_t>{1});
    EXPECT_NEAR(branches[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(branches[1].probability, 0.5, 1e-12);
    EXPECT_NEAR(std::abs(branches[1].final_state[1]), 1, 1e-12);
}

TEST(run_branches, conditions_follow_outcomes) {
    // Measure |+>, then flip qubit 1 only on outcome 1.
    Circuit c = Circuit::all_data(2);
    c.data_qubits = {q(1)};
    c.ancilla_qubits = {q(0)};
    BitId b = c.new_bit();
    c.append(Op::single(GateType::H, q(0)));
    c.append(Op::measure(q(0), b));
    c.append(Op::single(GateType::X, q(1)).when(b, true));
    auto branches = run_branches(c, StateVector(2));
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_NEAR(std::abs(branches[0].final_state[0]), 1, 1e-12);
    EXPECT_NEAR(std::abs(branches[1].final_state[3]), 1, 1e-12);
}

TEST(run_branches, cccz_on_ghz_input) {
    // (|0000> + |1111>)/sqrt2 with the ancilla in |0>. Frozen from brute-force simulation:
    // each outcome has probability 1/2 and leaves (|0000> - |1111>)/sqrt2 on the data.
    std::vector<Complex> amps(32);
    amps[0] = kS;
    amps[15] = kS;
    auto branches = run_branches(cccz_6t(), StateVector(5, amps));
    ASSERT_EQ(branches.size(), 2u);
    for (size_t m = 0; m < 2; m++) {
        const auto &br = branches[m];
        EXPECT_EQ(br.outcomes, std::vector<uint8_t>{uint8_t(m)});
        EXPECT_NEAR(br.probability, 0.5, 1e-12);
        auto d = data_part(br.final_state);
        Complex phase = d[0] / std::abs(d[0]);
        EXPECT_NEAR(std::abs(d[0] - phase * kS), 0, 1e-12);
        EXPECT_NEAR(std::abs(d[15] + phase * kS), 0, 1e-12);
    }
}

TEST(run_branches, cccz_on_all_ones_flips_sign) {
    auto branches = run_branches(cccz_6t(), StateVector::basis(5, 15));
    ASSERT_EQ(branches.size(), 2u);
    for (size_t m = 0; m < 2; m++) {
        auto d = data_part(branches[m].final_state);
        // Global phase on this branch is +1, so the flipped sign is visible directly.
        EXPECT_NEAR(std::abs(d[15] - Complex(-1, 0)), 0, 1e-12);
    }
}

TEST(run_branches, measurement_free_matches_unitary) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; trial++) {
        auto c = test_util::random_unitary_circuit(4, 30, rng);
        auto input = test_util::random_state(4, rng);
        auto branches = run_branches(c, input);
        ASSERT_EQ(branches.size(), 1u);
        EXPECT_NEAR(branches[0].probability, 1, 1e-9);
        auto expected = test_util::mat_vec(unitary_of(c), input.amplitudes());
        EXPECT_LT(state_diff(branches[0].final_state, expected), 1e-9);
    }
}

TEST(run_branches, probabilities_sum_to_one) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = Circuit::with_data(5, {q(0), q(1), q(2)});
        for (int k = 0; k < 30; k++) {
            c.append(test_util::random_unitary_op(5, rng));
        }
        c.append(Op::measure(q(3), c.new_bit()));
        c.append(Op::single(GateType::H, q(0)).when(BitId{0}, true));
        c.append(Op::measure(q(4), c.new_bit()));
        double total = 0;
        for (const auto &b : run_branches(c, StateVector(5))) {
            total += b.probability;
            EXPECT_NEAR(b.final_state.norm_squared(), 1, 1e-9);
        }
        EXPECT_NEAR(total, 1, 1e-9);
    }
}

TEST(run_branches, impossible_outcomes_are_pruned) {
    Circuit c = Circuit::with_data(2, {q(0)});
    c.append(Op::measure(q(1), c.new_bit()));
    auto branches = run_branches(c, StateVector(2));
    EXPECT_EQ(branches.size(), 1u);
    for (const auto &b : branches) {
        EXPECT_FALSE(std::isnan(b.final_state[0].real()));
    }
}

TEST(run_branches, reset_splits_and_returns_to_zero) {
    Circuit c = Circuit::with_data(1, {});
    c.append(Op::single(GateType::H, q(0)));
    c.append(Op::reset(q(0)));
    auto branches = run_branches(c, StateVector(1));
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].reset_outcomes, std::vector<uint8_t>{0});
    EXPECT_EQ(branches[1].reset_outcomes, std::vector<uint8_t>{1});
    for (const auto &b : branches) {
        EXPECT_NEAR(b.probability, 0.5, 1e-12);
        EXPECT_NEAR(std::abs(b.final_state[0]), 1, 1e-12);
    }
}

TEST(run_branches, input_checks) {
    Circuit c = Circuit::with_data(2, {q(0)});
    EXPECT_THROW(run_branches(c, StateVector::basis(2, 2)), std::invalid_argument);
    EXPECT_THROW(run_branches(c, StateVector(3)), std::invalid_argument);
    EXPECT_THROW(run_branches(c, StateVector(2, {2, 0, 0, 0})), std::invalid_argument);
    Circuit bad = Circuit::all_data(2);
    bad.append(Op::cx(q(1), q(1)));
    EXPECT_THROW(run_branches(bad, StateVector(2)), std::invalid_argument);
}

TEST(run_branches, reproducible) {
    auto c = synth_cnz(CnZSpec{4}, Method::Optimized);
    auto input = StateVector::basis(c.qubit_count, 0b11011);
    auto a = run_branches(c, input);
    auto b = run_branches(c, input);
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a[k].outcomes, b[k].outcomes);
        EXPECT_EQ(a[k].probability, b[k].probability);
        EXPECT_EQ(a[k].final_state.amplitudes(), b[k].final_state.amplitudes());
    }
}

TEST(run_branches, backends_agree) {
    if (!kernels::backend_available(kernels::Backend::Avx2)) {
        GTEST_SKIP() << "no SIMD backend on this CPU";
    }
    auto c = synth_cnz(CnZSpec{5}, Method::Baseline);
    auto input = StateVector::basis(c.qubit_count, 0b101111);
    kernels::set_active_backend(kernels::Backend::Scalar);
    auto a = run_branches(c, input);
    kernels::set_active_backend(kernels::Backend::Avx2);
    auto b = run_branches(c, input);
    kernels::set_active_backend(kernels::best_backend());
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a[k].outcomes, b[k].outcomes);
        EXPECT_NEAR(a[k].probability, b[k].probability, 1e-12);
        EXPECT_LT(state_diff(a[k].final_state, b[k].final_state.amplitudes()), 1e-12);
    }
}

TEST(unitary_of, empty_is_identity) {
    EXPECT_EQ(unitary_of(Circuit::all_data(2)).max_abs_diff(Operator::identity(4)), 0);
}

TEST(unitary_of, t_then_tdg) {
    Circuit c = Circuit::all_data(1);
    c.append(Op::single(GateType::T, q(0)));
    c.append(Op::single(GateType::Tdg, q(0)));
    EXPECT_LT(unitary_of(c).max_abs_diff(Operator::identity(2)), 1e-12);
}

TEST(unitary_of, and_compute_then_inverse) {
    auto c = and_compute(q(0), q(1), q(2));
    auto u = unitary_of(compose(c, inverse_unitary_segment(c)));
    EXPECT_LT(u.max_abs_diff(Operator::identity(8)), 1e-9);
}

TEST(unitary_of, matches_dense_oracle) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; trial++) {
        auto c = test_util::random_unitary_circuit(4, 30, rng);
        auto u = unitary_of(c);
        EXPECT_LT(u.max_abs_diff(test_util::dense_unitary(c)), 1e-12);
        EXPECT_TRUE(u.is_unitary(1e-9));
    }
}

TEST(unitary_of, rejects_non_unitary) {
    EXPECT_THROW(unitary_of(cccz_6t()), std::invalid_argument);
    EXPECT_THROW(unitary_of(Circuit::all_data(kMaxUnitaryQubits + 1)), std::invalid_argument);
}

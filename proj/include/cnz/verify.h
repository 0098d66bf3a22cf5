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
#include <utility>
#include <vector>

#include "cnz/circuit.h"
#include "cnz/simulator.h"

namespace cnz {

inline constexpr double kDefaultTolerance = 1e-9;

/// Diagonal C^nZ on n+1 qubits: -1 on the all-ones basis state, +1 elsewhere.
Operator oracle_cnz(uint32_t n);

/// Finds the largest-magnitude entry of `b` and uses a/b there as the phase.
/// Returns (||a - phase*b||_max <= tolerance, phase).
/// Throws std::invalid_argument when b is ~0 but a is not.
std::pair<bool, Complex> equal_up_to_global_phase(const Operator &a, const Operator &b, double tolerance);

/// Per measurement-outcome-group summary.
struct OutcomeGroupReport {
    /// Measurement bits (by bit id) followed by any hidden reset outcomes.
    std::vector<uint8_t> outcomes;
    std::vector<uint8_t> reset_outcomes;
    /// Mean over data basis inputs of the branch probability.
    double probability = 0;
    /// Unit complex lambda with K_m = lambda * sqrt(p) * target.
    Complex phase{1, 0};
    /// max |K_m - lambda sqrt(p) target|.
    double max_deviation = 0;
    /// max over inputs of |per-input phase - phase|.
    double phase_spread = 0;
    /// Number of data basis inputs that reached this group.
    size_t inputs_reached = 0;
};

struct ChannelVerdict {
    bool passed = false;
    std::vector<OutcomeGroupReport> branch_reports;
    bool ancilla_clean = true;
    /// Largest ancilla amplitude mass found outside the expected ancilla pattern.
    double ancilla_leak = 0;
    double probability_total = 0;
    /// Non-empty when the verdict failed, explaining the first failure found.
    std::string failure;

    std::string str() const;
};

/// Checks that, on every measurement branch, `circuit` acts on its data qubits as `target`
/// times a phase that depends only on the outcomes, with every ancilla returned to |0> or
/// measured out. Data basis states are simulated one by one.
///
/// `target` is indexed with data_qubits[k] as bit k, in the order `data_qubits` lists them.
ChannelVerdict check_implements(const Circuit &circuit, const Operator &target, double tolerance = kDefaultTolerance);

/// i^k with k taken mod 4, as an exact Gaussian integer.
std::complex<int> i_power(int k);

/// Both sides of i^(ab xor cd) = i^(ab) * i^(cd) * (-1)^(abcd) for one assignment.
std::pair<std::complex<int>, std::complex<int>> phase_identity_sides(bool a, bool b, bool c, bool d);

/// True iff the identity holds for all 16 assignments.
bool check_phase_identity();

}  // namespace cnz

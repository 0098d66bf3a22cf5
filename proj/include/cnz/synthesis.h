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

#include <string_view>

#include "cnz/circuit.h"

namespace cnz {

/// Multi-controlled Z with `controls` controls (n+1 data qubits in total).
struct CnZSpec {
    uint32_t controls = 2;
};

enum class Method {
    /// n-2 temporary ANDs plus a 4-T AND-based CCZ core: 4n-4 T.
    Baseline,
    /// n-3 temporary ANDs plus the 6-T CCCZ core: 4n-6 T. Requires n >= 3.
    Optimized,
};

std::string_view method_name(Method method);

/// Appends a 4-T temporary AND: |a, b, 0> -> |a, b, a&b> with no phase error.
/// `anc` must be in |0>.
void append_and_compute(Circuit &circuit, QubitId a, QubitId b, QubitId anc);

/// Appends the zero-T erasure of an AND ancilla: X-basis measurement of `anc` into a new
/// bit, then CZ(a, b) when the outcome is 1, then a reset of `anc`.
void append_and_uncompute(Circuit &circuit, QubitId a, QubitId b, QubitId anc);

/// Appends the 6-T CCCZ on (a, b, c, d) using `anc` (in |0>) and one new measurement bit.
///
/// Relies on i^(ab xor cd) = i^(ab) i^(cd) (-1)^(abcd). Two phase-kickback Toffolis that meet
/// on the ancilla compute ab xor cd there; the ancilla is phased and measured out after an
/// X^(-1/2). Outcome 0 is fixed up with CZ(c, d), outcome 1 with CZ(a, b). A final reset
/// returns the ancilla to |0> so the gadget can be chained on the same wire.
void append_cccz_6t(Circuit &circuit, QubitId a, QubitId b, QubitId c, QubitId d, QubitId anc);

/// 5 qubits: data a,b,c,d = 0..3, ancilla 4, one bit.
Circuit cccz_6t();

/// Measurement-free AND on a register of max(a,b,anc)+1 qubits; only `anc` is an ancilla.
Circuit and_compute(QubitId a, QubitId b, QubitId anc);

/// The matching uncompute on the same register layout as `and_compute`.
Circuit and_uncompute(QubitId a, QubitId b, QubitId anc);

/// C^nZ on data qubits 0..n (qubit n plays the target). Ancillas are appended after the
/// data qubits in creation order.
Circuit synth_cnz(CnZSpec spec, Method method);

/// Wraps the last data qubit of a C^nZ in H, giving C^nX.
Circuit as_cnx(const Circuit &cnz);

}  // namespace cnz

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

#include "cnz/resources.h"

#include <stdexcept>

#include "json.hpp"

namespace cnz {

std::string ResourceCount::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["clifford"] = clifford;
    j["measurements"] = measurements;
    j["resets"] = resets;
    j["ancillas"] = ancillas;
    j["conditioned_gates"] = conditioned_gates;
    return j.dump();
}

ResourceCount count(const Circuit &circuit) {
    require_valid(circuit);
    ResourceCount r;
    r.ancillas = circuit.ancilla_qubits.size();
    for (const auto &op : circuit.ops) {
        if (op.condition.has_value()) {
            r.conditioned_gates++;
        }
        if (op.type == GateType::Measure) {
            r.measurements++;
        } else if (op.type == GateType::Reset) {
            r.resets++;
        } else if (is_non_clifford(op.type)) {
            r.t++;
        } else {
            r.clifford++;
        }
    }
    return r;
}

ComparisonRow compare(CnZSpec spec) {
    if (spec.controls < 3) {
        throw std::invalid_argument("compare: n must be >= 3 (got " + std::to_string(spec.controls) + ")");
    }
    ComparisonRow row;
    row.n = spec.controls;
    row.baseline_t = count(synth_cnz(spec, Method::Baseline)).t;
    row.optimized_t = count(synth_cnz(spec, Method::Optimized)).t;
    row.saving = int64_t(row.baseline_t) - int64_t(row.optimized_t);
    return row;
}

}  // namespace cnz

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

#include <cstdint>
#include <string>

#include "cnz/circuit.h"
#include "cnz/synthesis.h"

namespace cnz {

/// Static tallies. Conditioned gates count whether or not they fire at runtime.
struct ResourceCount {
    uint64_t t = 0;
    uint64_t clifford = 0;
    uint64_t measurements = 0;
    uint64_t resets = 0;
    uint64_t ancillas = 0;
    uint64_t conditioned_gates = 0;

    bool operator==(const ResourceCount &) const = default;
    /// Single-line JSON object with keys in declaration order.
    std::string to_json() const;
};

ResourceCount count(const Circuit &circuit);

struct ComparisonRow {
    uint32_t n = 0;
    uint64_t baseline_t = 0;
    uint64_t optimized_t = 0;
    int64_t saving = 0;
};

/// Synthesizes both methods for `spec` and counts their T gates. Requires n >= 3.
ComparisonRow compare(CnZSpec spec);

}  // namespace cnz

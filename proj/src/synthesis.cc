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

#include "cnz/synthesis.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cnz {

namespace {

void require_distinct(std::initializer_list<QubitId> qs, const char *what) {
    std::vector<QubitId> v(qs);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw std::invalid_argument(std::string(what) + ": operands must be distinct");
    }
}

Circuit register_for(QubitId a, QubitId b, QubitId anc) {
    uint32_t n = std::max({a.index, b.index, anc.index}) + 1;
    std::vector<QubitId> data;
    for (uint32_t q = 0; q < n; q++) {
        if (q != anc.index) {
            data.push_back(QubitId{q});
        }
    }
    return Circuit::with_data(n, std::move(data));
}

}  // namespace

std::string_view method_name(Method method) {
    return method == Method::Baseline ? "baseline" : "optimized";
}

void append_and_compute(Circuit &c, QubitId a, QubitId b, QubitId anc) {
    require_distinct({a, b, anc}, "and_compute");
    c.append(Op::single(GateType::H, anc));
    c.append(Op::single(GateType::T, anc));
    c.append(Op::cx(a, anc));
    c.append(Op::cx(b, anc));
    c.append(Op::cx(anc, a));
    c.append(Op::cx(anc, b));
    c.append(Op::single(GateType::Tdg, a));
    c.append(Op::single(GateType::Tdg, b));
    c.append(Op::single(GateType::T, anc));
    c.append(Op::cx(anc, a));
    c.append(Op::cx(anc, b));
    c.append(Op::single(GateType::H, anc));
    c.append(Op::single(GateType::S, anc));
}

void append_and_uncompute(Circuit &c, QubitId a, QubitId b, QubitId anc) {
    require_distinct({a, b, anc}, "and_uncompute");
    BitId m = c.new_bit();
    c.append(Op::single(GateType::H, anc));
    c.append(Op::measure(anc, m));
    c.append(Op::cz(a, b).when(m, true));
    c.append(Op::reset(anc));
}

void append_cccz_6t(Circuit &c, QubitId a, QubitId b, QubitId cq, QubitId d, QubitId anc) {
    require_distinct({a, b, cq, d, anc}, "cccz_6t");
    BitId m = c.new_bit();
    c.append(Op::single(GateType::H, anc));

    c.append(Op::single(GateType::T, anc));
    c.append(Op::cx(b, anc));
    c.append(Op::single(GateType::Tdg, anc));
    c.append(Op::cx(a, anc));
    c.append(Op::single(GateType::T, anc));
    c.append(Op::cx(b, anc));
    c.append(Op::cx(cq, anc));
    c.append(Op::single(GateType::Tdg, anc));
    c.append(Op::cx(d, anc));
    c.append(Op::single(GateType::T, anc));
    c.append(Op::cx(cq, anc));
    c.append(Op::single(GateType::Tdg, anc));
    c.append(Op::cx(d, anc));

    c.append(Op::single(GateType::SqrtXdg, anc));
    c.append(Op::measure(anc, m));
    c.append(Op::cz(cq, d).when(m, false));
    c.append(Op::cz(a, b).when(m, true));
    c.append(Op::reset(anc));
}

Circuit cccz_6t() {
    Circuit c = Circuit::with_data(5, {QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}});
    append_cccz_6t(c, QubitId{0}, QubitId{1}, QubitId{2}, QubitId{3}, QubitId{4});
    return c;
}

Circuit and_compute(QubitId a, QubitId b, QubitId anc) {
    require_distinct({a, b, anc}, "and_compute");
    Circuit c = register_for(a, b, anc);
    append_and_compute(c, a, b, anc);
    return c;
}

Circuit and_uncompute(QubitId a, QubitId b, QubitId anc) {
    require_distinct({a, b, anc}, "and_uncompute");
    Circuit c = register_for(a, b, anc);
    append_and_uncompute(c, a, b, anc);
    return c;
}

Circuit synth_cnz(CnZSpec spec, Method method) {
    uint32_t n = spec.controls;
    if (n < 2) {
        throw std::invalid_argument("synth_cnz: n must be >= 2 (got " + std::to_string(n) + ")");
    }
    if (method == Method::Optimized && n < 3) {
        throw std::invalid_argument("synth_cnz: optimized requires n ≥ 3 (got " + std::to_string(n) + ")");
    }

    // Ladder length: ANDs that fold controls before the core.
    uint32_t ladder = method == Method::Baseline ? n - 2 : n - 3;
    uint32_t ancillas = ladder + 1;
    std::vector<QubitId> data;
    for (uint32_t q = 0; q <= n; q++) {
        data.push_back(QubitId{q});
    }
    Circuit c = Circuit::with_data(n + 1 + ancillas, data);
    QubitId target{n};
    auto control = [](uint32_t k) {
        return QubitId{k};
    };
    auto ancilla = [n](uint32_t k) {
        return QubitId{n + 1 + k};
    };

    // ANDs: anc0 = c0 & c1, anc_k = anc_{k-1} & c_{k+1}.
    struct AndStep {
        QubitId a, b, anc;
    };
    std::vector<AndStep> steps;
    for (uint32_t k = 0; k < ladder; k++) {
        QubitId lhs = k == 0 ? control(0) : ancilla(k - 1);
        steps.push_back({lhs, control(k + 1), ancilla(k)});
    }
    for (const auto &s : steps) {
        append_and_compute(c, s.a, s.b, s.anc);
    }

    // Controls not yet folded into the ladder, with the ladder's output in front.
    std::vector<QubitId> remaining;
    if (ladder > 0) {
        remaining.push_back(ancilla(ladder - 1));
    }
    for (uint32_t k = ladder == 0 ? 0 : ladder + 1; k < n; k++) {
        remaining.push_back(control(k));
    }

    QubitId core = ancilla(ladder);
    if (method == Method::Baseline) {
        // remaining = {x, y}: CCZ(x, y, target) as AND + CZ + measured uncompute.
        append_and_compute(c, remaining[0], remaining[1], core);
        c.append(Op::cz(core, target));
        append_and_uncompute(c, remaining[0], remaining[1], core);
    } else {
        // remaining = {x, y, z}.
        append_cccz_6t(c, remaining[0], remaining[1], remaining[2], target, core);
    }

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        append_and_uncompute(c, it->a, it->b, it->anc);
    }
    return c;
}

Circuit as_cnx(const Circuit &cnz) {
    if (cnz.data_qubits.empty()) {
        throw std::invalid_argument("as_cnx: circuit has no data qubits");
    }
    QubitId target = *std::max_element(cnz.data_qubits.begin(), cnz.data_qubits.end());
    Circuit result = cnz;
    result.ops.clear();
    result.append(Op::single(GateType::H, target));
    result.ops.insert(result.ops.end(), cnz.ops.begin(), cnz.ops.end());
    result.append(Op::single(GateType::H, target));
    return result;
}

}  // namespace cnz

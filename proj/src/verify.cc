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

#include "cnz/verify.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cnz {

Operator oracle_cnz(uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("oracle_cnz: n must be >= 1");
    }
    if (n + 1 > kMaxSimulatedQubits) {
        throw std::invalid_argument("oracle_cnz: n too large");
    }
    std::vector<Complex> diag(size_t{1} << (n + 1), Complex{1, 0});
    diag.back() = -1;
    return Operator::diagonal(diag);
}

namespace {

size_t argmax_abs(const Operator &m) {
    size_t best = 0;
    double best_abs = -1;
    for (size_t k = 0; k < m.entries.size(); k++) {
        double v = std::abs(m.entries[k]);
        if (v > best_abs) {
            best_abs = v;
            best = k;
        }
    }
    return best;
}

double max_abs(const Operator &m) {
    double r = 0;
    for (const auto &v : m.entries) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

}  // namespace

std::pair<bool, Complex> equal_up_to_global_phase(const Operator &a, const Operator &b, double tolerance) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
    }
    if (a.dim == 0) {
        return {true, Complex{1, 0}};
    }
    size_t ref = argmax_abs(b);
    if (std::abs(b.entries[ref]) <= tolerance) {
        if (max_abs(a) <= tolerance) {
            return {true, Complex{1, 0}};
        }
        throw std::invalid_argument("equal_up_to_global_phase: reference operator is zero");
    }
    Complex phase = a.entries[ref] / b.entries[ref];
    double worst = 0;
    for (size_t k = 0; k < a.entries.size(); k++) {
        worst = std::max(worst, std::abs(a.entries[k] - phase * b.entries[k]));
    }
    return {worst <= tolerance, phase};
}

std::string ChannelVerdict::str() const {
    std::ostringstream out;
    out << (passed ? "PASSED" : "FAILED") << " probability_total=" << probability_total
        << " ancilla_clean=" << (ancilla_clean ? "true" : "false");
    for (const auto &g : branch_reports) {
        out << "\n    outcomes=";
        for (auto b : g.outcomes) {
            out << int(b);
        }
        out << " p=" << g.probability << " phase=" << g.phase << " deviation=" << g.max_deviation
            << " spread=" << g.phase_spread;
    }
    if (!failure.empty()) {
        out << "\n    " << failure;
    }
    return out.str();
}

namespace {

using GroupKey = std::pair<std::vector<uint8_t>, std::vector<uint8_t>>;

struct ColumnPiece {
    GroupKey key;
    double probability = 0;
    std::vector<Complex> column;  // sqrt(p) * data amplitudes
    double leak = 0;
};

struct Layout {
    std::vector<uint64_t> data_bits;  // data_qubits[k] -> 1 << index
    std::vector<std::pair<uint64_t, BitId>> measured_out;
    uint64_t ancilla_mask = 0;

    uint64_t spread(uint64_t x) const {
        uint64_t r = 0;
        for (size_t k = 0; k < data_bits.size(); k++) {
            if ((x >> k) & 1) {
                r |= data_bits[k];
            }
        }
        return r;
    }
};

std::vector<ColumnPiece> simulate_column(const Circuit &circuit, const Layout &layout, uint64_t x) {
    size_t dim = size_t{1} << layout.data_bits.size();
    auto input = StateVector::basis(circuit.qubit_count, layout.spread(x));
    std::vector<ColumnPiece> pieces;
    for (auto &branch : run_branches(circuit, input)) {
        uint64_t pattern = 0;
        for (const auto &[bit, id] : layout.measured_out) {
            if (branch.outcomes[id.index]) {
                pattern |= bit;
            }
        }
        ColumnPiece piece;
        piece.key = {branch.outcomes, branch.reset_outcomes};
        piece.probability = branch.probability;
        piece.column.resize(dim);
        double scale = std::sqrt(branch.probability);
        for (uint64_t y = 0; y < dim; y++) {
            piece.column[y] = scale * branch.final_state[pattern | layout.spread(y)];
        }
        // Amplitude mass with the ancilla register anywhere but `pattern`.
        double leaked = 0;
        const auto &amps = branch.final_state.amplitudes();
        for (uint64_t i = 0; i < amps.size(); i++) {
            if ((i & layout.ancilla_mask) != pattern) {
                leaked += std::norm(amps[i]);
            }
        }
        piece.leak = std::sqrt(leaked);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

struct Group {
    Operator k;
    std::vector<bool> reached;
    double probability_sum = 0;
};

}  // namespace

ChannelVerdict check_implements(const Circuit &circuit, const Operator &target, double tolerance) {
    require_valid(circuit);
    size_t data_count = circuit.data_qubits.size();
    size_t dim = size_t{1} << data_count;
    if (target.dim != dim) {
        throw std::invalid_argument(
            "check_implements: target is " + std::to_string(target.dim) + "x" + std::to_string(target.dim) +
            " but the circuit has " + std::to_string(data_count) + " data qubits");
    }

    Layout layout;
    for (auto q : circuit.data_qubits) {
        layout.data_bits.push_back(uint64_t{1} << q.index);
    }
    for (auto q : circuit.ancilla_qubits) {
        layout.ancilla_mask |= uint64_t{1} << q.index;
    }
    for (const auto &[q, bit] : measured_out_ancillas(circuit)) {
        layout.measured_out.emplace_back(uint64_t{1} << q.index, bit);
    }

    // Fan out over data basis inputs; merge afterwards in input order.
    std::vector<std::vector<ColumnPiece>> columns(dim);
    size_t workers = std::clamp<size_t>(std::thread::hardware_concurrency(), 1, 16);
    workers = std::min(workers, dim);
    if (workers <= 1 || dim < 8) {
        for (uint64_t x = 0; x < dim; x++) {
            columns[x] = simulate_column(circuit, layout, x);
        }
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (uint64_t x = w; x < dim; x += workers) {
                        columns[x] = simulate_column(circuit, layout, x);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    ChannelVerdict verdict;
    std::map<GroupKey, Group> groups;
    for (uint64_t x = 0; x < dim; x++) {
        for (auto &piece : columns[x]) {
            auto [it, inserted] = groups.try_emplace(piece.key);
            Group &g = it->second;
            if (inserted) {
                g.k = Operator(dim);
                g.reached.assign(dim, false);
            }
            g.reached[x] = true;
            g.probability_sum += piece.probability;
            for (uint64_t y = 0; y < dim; y++) {
                g.k(y, x) = piece.column[y];
            }
            verdict.ancilla_leak = std::max(verdict.ancilla_leak, piece.leak);
        }
    }
    verdict.ancilla_clean = verdict.ancilla_leak <= tolerance;

    size_t ref = argmax_abs(target);
    Complex ref_value = target.entries[ref];
    bool groups_ok = true;
    for (auto &[key, g] : groups) {
        OutcomeGroupReport report;
        report.outcomes = key.first;
        report.reset_outcomes = key.second;
        report.probability = g.probability_sum / double(dim);
        report.inputs_reached = size_t(std::count(g.reached.begin(), g.reached.end(), true));
        verdict.probability_total += report.probability;

        if (max_abs(g.k) <= tolerance) {
            report.max_deviation = max_abs(g.k);
        } else {
            Complex c = g.k.entries[ref] / ref_value;
            report.phase = std::abs(c) > 0 ? c / std::abs(c) : Complex{1, 0};
            double worst = 0;
            for (size_t k = 0; k < g.k.entries.size(); k++) {
                worst = std::max(worst, std::abs(g.k.entries[k] - c * target.entries[k]));
            }
            report.max_deviation = worst;

            // Phase seen by each input column on its own.
            for (uint64_t x = 0; x < dim; x++) {
                size_t row = 0;
                for (size_t y = 1; y < dim; y++) {
                    if (std::abs(target(y, x)) > std::abs(target(row, x))) {
                        row = y;
                    }
                }
                Complex local = g.k(row, x) / target(row, x);
                if (std::abs(local) <= tolerance) {
                    continue;
                }
                report.phase_spread = std::max(report.phase_spread, std::abs(local / std::abs(local) - report.phase));
            }
        }
        if (report.max_deviation > tolerance || report.phase_spread > tolerance) {
            if (groups_ok) {
                std::ostringstream msg;
                msg << "outcome group ";
                for (auto b : key.first) {
                    msg << int(b);
                }
                msg << " deviates from target by " << report.max_deviation << " (phase spread "
                    << report.phase_spread << ")";
                verdict.failure = msg.str();
            }
            groups_ok = false;
        }
        verdict.branch_reports.push_back(std::move(report));
    }

    bool probability_ok = std::abs(verdict.probability_total - 1) <= tolerance;
    if (groups_ok && !verdict.ancilla_clean) {
        verdict.failure = "ancilla not returned to |0> or measured out (leak " + std::to_string(verdict.ancilla_leak) + ")";
    } else if (groups_ok && !probability_ok) {
        verdict.failure = "outcome probabilities sum to " + std::to_string(verdict.probability_total);
    }
    verdict.passed = groups_ok && verdict.ancilla_clean && probability_ok;
    return verdict;
}

std::complex<int> i_power(int k) {
    k = ((k % 4) + 4) % 4;
    std::complex<int> r{1, 0};
    for (int j = 0; j < k; j++) {
        r *= std::complex<int>{0, 1};
    }
    return r;
}

std::pair<std::complex<int>, std::complex<int>> phase_identity_sides(bool a, bool b, bool c, bool d) {
    int ab = a && b;
    int cd = c && d;
    auto lhs = i_power(ab ^ cd);
    auto rhs = i_power(ab) * i_power(cd) * std::complex<int>{(ab && cd) ? -1 : 1, 0};
    return {lhs, rhs};
}

bool check_phase_identity() {
    for (int bits = 0; bits < 16; bits++) {
        auto [lhs, rhs] = phase_identity_sides(bits & 1, bits & 2, bits & 4, bits & 8);
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

}  // namespace cnz

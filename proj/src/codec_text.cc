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

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cnz/codec.h"

namespace cnz {

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
}

namespace {

struct Mnemonic {
    std::string_view text;
    GateType type;
};

constexpr Mnemonic kMnemonics[] = {
    {"h", GateType::H},
    {"x", GateType::X},
    {"z", GateType::Z},
    {"s", GateType::S},
    {"sdg", GateType::Sdg},
    {"t", GateType::T},
    {"tdg", GateType::Tdg},
    {"sx", GateType::SqrtX},
    {"sxdg", GateType::SqrtXdg},
    {"cx", GateType::CX},
    {"cz", GateType::CZ},
    {"m", GateType::Measure},
    {"reset", GateType::Reset},
};

std::string_view mnemonic(GateType type) {
    for (const auto &m : kMnemonics) {
        if (m.type == type) {
            return m.text;
        }
    }
    return "?";
}

std::optional<GateType> gate_for(std::string_view text) {
    for (const auto &m : kMnemonics) {
        if (m.text == text) {
            return m.type;
        }
    }
    return std::nullopt;
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            words.push_back(line.substr(start, k - start));
        }
    }
    return words;
}

uint32_t parse_index(std::string_view word, size_t line, const char *what) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size() || word.empty()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
    }
    return value;
}

uint32_t parse_bit_ref(std::string_view word, size_t line) {
    if (word.size() < 2 || word[0] != 'b') {
        throw ParseError(line, "expected bit reference b<k>, got '" + std::string(word) + "'");
    }
    return parse_index(word.substr(1), line, "bit index");
}

}  // namespace

std::string emit_text(const Circuit &circuit) {
    require_valid(circuit);
    std::ostringstream out;
    out << "qubits " << circuit.qubit_count << "\n";
    out << "bits " << circuit.bit_count << "\n";
    out << "data";
    for (auto q : circuit.data_qubits) {
        out << ' ' << q.index;
    }
    out << "\n";
    for (const auto &op : circuit.ops) {
        out << mnemonic(op.type) << ' ' << op.qubits[0].index;
        if (op.arity() == 2) {
            out << ' ' << op.qubits[1].index;
        }
        if (op.type == GateType::Measure) {
            out << " -> b" << op.bit.index;
        }
        if (op.condition.has_value()) {
            out << " if b" << op.condition->bit.index << "==" << (op.condition->value ? 1 : 0);
        }
        out << "\n";
    }
    return out.str();
}

Circuit parse_text(std::string_view doc) {
    std::optional<uint32_t> qubits;
    std::optional<uint32_t> bits;
    std::optional<std::vector<QubitId>> data;
    std::vector<Op> ops;
    std::vector<size_t> op_lines;
    std::vector<bool> written;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= doc.size()) {
        size_t end = doc.find('\n', pos);
        if (end == std::string_view::npos) {
            end = doc.size();
        }
        std::string_view line = doc.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }

        auto head = words[0];
        if (head == "qubits" || head == "bits" || head == "data") {
            if (!ops.empty()) {
                throw ParseError(line_no, "header '" + std::string(head) + "' after the first op");
            }
            if (head == "data") {
                if (data.has_value()) {
                    throw ParseError(line_no, "duplicate 'data' header");
                }
                data.emplace();
                for (size_t k = 1; k < words.size(); k++) {
                    data->push_back(QubitId{parse_index(words[k], line_no, "qubit index")});
                }
                continue;
            }
            auto &slot = head == "qubits" ? qubits : bits;
            if (slot.has_value()) {
                throw ParseError(line_no, "duplicate '" + std::string(head) + "' header");
            }
            if (words.size() != 2) {
                throw ParseError(line_no, "expected '" + std::string(head) + " <count>'");
            }
            slot = parse_index(words[1], line_no, "count");
            if (head == "bits") {
                written.assign(*bits, false);
            }
            continue;
        }

        auto type = gate_for(head);
        if (!type.has_value()) {
            throw ParseError(line_no, "unknown instruction '" + std::string(head) + "'");
        }
        uint32_t qubit_count = qubits.value_or(0);
        uint32_t bit_count = bits.value_or(0);
        auto qubit = [&](std::string_view w) {
            auto q = parse_index(w, line_no, "qubit index");
            if (q >= qubit_count) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range (qubits " + std::to_string(qubit_count) + ")");
            }
            return QubitId{q};
        };

        Op op;
        size_t next = 0;
        if (*type == GateType::Measure) {
            if (words.size() != 4 || words[2] != "->") {
                throw ParseError(line_no, "expected 'm <qubit> -> b<k>'");
            }
            auto b = parse_bit_ref(words[3], line_no);
            if (b >= bit_count) {
                throw ParseError(line_no, "bit b" + std::to_string(b) + " out of range (bits " + std::to_string(bit_count) + ")");
            }
            if (written[b]) {
                throw ParseError(line_no, "bit b" + std::to_string(b) + " written twice");
            }
            written[b] = true;
            op = Op::measure(qubit(words[1]), BitId{b});
            next = 4;
        } else if (is_two_qubit(*type)) {
            if (words.size() < 3) {
                throw ParseError(line_no, "expected '" + std::string(head) + " <qubit> <qubit>'");
            }
            auto a = qubit(words[1]);
            auto b = qubit(words[2]);
            if (a == b) {
                throw ParseError(line_no, "identical operands");
            }
            op = *type == GateType::CX ? Op::cx(a, b) : Op::cz(a, b);
            next = 3;
        } else {
            if (words.size() < 2) {
                throw ParseError(line_no, "expected '" + std::string(head) + " <qubit>'");
            }
            op = Op::single(*type, qubit(words[1]));
            next = 2;
        }

        if (next < words.size()) {
            if (!is_unitary(*type)) {
                throw ParseError(line_no, "only unitary gates may be conditioned");
            }
            if (words.size() != next + 2 || words[next] != "if") {
                throw ParseError(line_no, "expected optional suffix 'if b<k>==0|1'");
            }
            auto cond = words[next + 1];
            auto eq = cond.find("==");
            if (eq == std::string_view::npos || eq + 3 != cond.size() || (cond.back() != '0' && cond.back() != '1')) {
                throw ParseError(line_no, "malformed condition '" + std::string(cond) + "'");
            }
            auto b = parse_bit_ref(cond.substr(0, eq), line_no);
            if (b >= bit_count) {
                throw ParseError(line_no, "condition bit b" + std::to_string(b) + " out of range");
            }
            if (!written[b]) {
                throw ParseError(line_no, "condition on bit b" + std::to_string(b) + " before it is written");
            }
            op = op.when(BitId{b}, cond.back() == '1');
        }
        ops.push_back(op);
        op_lines.push_back(line_no);
    }

    uint32_t qubit_count = qubits.value_or(0);
    Circuit circuit;
    if (data.has_value()) {
        for (auto q : *data) {
            if (q.index >= qubit_count) {
                throw ParseError(0, "data qubit " + std::to_string(q.index) + " out of range");
            }
        }
        circuit = Circuit::with_data(qubit_count, *data);
    } else {
        circuit = Circuit::all_data(qubit_count);
    }
    circuit.bit_count = bits.value_or(0);
    circuit.ops = std::move(ops);

    auto violations = validate(circuit);
    if (!violations.empty()) {
        const auto &v = violations.front();
        size_t line = v.op_index.has_value() ? op_lines[*v.op_index] : 0;
        throw ParseError(line, v.message);
    }
    return circuit;
}

}  // namespace cnz

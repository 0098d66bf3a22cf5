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
#include <map>
#include <optional>
#include <set>

#include "cnz/codec.h"
#include "json.hpp"

namespace cnz {

namespace {

using nlohmann::json;

constexpr std::string_view kControl = "•";
constexpr std::string_view kAntiControl = "◦";
constexpr std::string_view kAncillaMarkerId = "~zero";
constexpr std::string_view kResetId = "~reset";
constexpr std::string_view kResetName = "reset";
constexpr std::string_view kIdentityMatrix = "{{1,0},{0,1}}";

struct QuirkName {
    std::string_view name;
    GateType type;
};

constexpr QuirkName kQuirkNames[] = {
    {"H", GateType::H},
    {"X", GateType::X},
    {"Z", GateType::Z},
    {"Z^½", GateType::S},
    {"Z^-½", GateType::Sdg},
    {"Z^¼", GateType::T},
    {"Z^-¼", GateType::Tdg},
    {"X^½", GateType::SqrtX},
    {"X^-½", GateType::SqrtXdg},
    {"Measure", GateType::Measure},
};

std::optional<std::string_view> quirk_name(GateType type) {
    for (const auto &q : kQuirkNames) {
        if (q.type == type) {
            return q.name;
        }
    }
    return std::nullopt;
}

std::optional<GateType> quirk_gate(std::string_view name) {
    for (const auto &q : kQuirkNames) {
        if (q.name == name) {
            return q.type;
        }
    }
    return std::nullopt;
}

bool is_ancilla_marker_name(std::string_view name) {
    return name == "|0>" || name == "|0⟩";
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

std::string strip_whitespace(std::string_view s) {
    std::string r;
    for (char c : s) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            r.push_back(c);
        }
    }
    return r;
}

}  // namespace

std::string percent_encode(std::string_view text) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : text) {
        bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                          c == '_' || c == '.' || c == '~';
        if (unreserved) {
            out.push_back(char(c));
        } else {
            out.push_back('%');
            out.push_back(kHex[c >> 4]);
            out.push_back(kHex[c & 15]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view text) {
    std::string out;
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '%' && k + 2 < text.size() && hex_value(text[k + 1]) >= 0 && hex_value(text[k + 2]) >= 0) {
            out.push_back(char(hex_value(text[k + 1]) * 16 + hex_value(text[k + 2])));
            k += 2;
        } else {
            out.push_back(text[k]);
        }
    }
    return out;
}

std::string export_quirk_url(const Circuit &circuit) {
    require_valid(circuit);
    size_t n = circuit.qubit_count;
    json cols = json::array();
    json gates = json::array();

    if (!circuit.ancilla_qubits.empty()) {
        json marker(std::vector<json>(n, 1));
        for (auto q : circuit.ancilla_qubits) {
            marker[q.index] = kAncillaMarkerId;
        }
        cols.push_back(marker);
        gates.push_back({{"id", kAncillaMarkerId}, {"name", "|0>"}, {"matrix", kIdentityMatrix}});
    }

    // Wires that hold a classical value, and which bit that value is.
    std::vector<std::optional<uint32_t>> wire_bit(n);
    std::map<uint32_t, uint32_t> bit_wire;
    std::vector<size_t> last_touch(n, 0);
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        for (size_t j = 0; j < circuit.ops[k].arity(); j++) {
            last_touch[circuit.ops[k].qubits[j].index] = k;
        }
    }
    bool used_reset = false;

    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const Op &op = circuit.ops[k];
        auto fail = [&](const std::string &why) {
            throw QuirkError("op " + std::to_string(k) + " (" + op.str() + "): " + why);
        };
        json col(std::vector<json>(n, 1));
        if (op.type == GateType::Reset) {
            // Quirk has no reset; a final reset only marks the wire as returned to |0>.
            if (last_touch[op.qubits[0].index] != k || op.condition.has_value()) {
                fail("Quirk has no reset gate; only an unconditioned final reset can be shown");
            }
            col[op.qubits[0].index] = kResetId;
            cols.push_back(col);
            used_reset = true;
            continue;
        }
        for (size_t j = 0; j < op.arity(); j++) {
            if (wire_bit[op.qubits[j].index].has_value()) {
                fail("Quirk cannot apply a gate to a measured wire");
            }
        }
        switch (op.type) {
            case GateType::CX:
                col[op.qubits[0].index] = kControl;
                col[op.qubits[1].index] = "X";
                break;
            case GateType::CZ:
                col[op.qubits[0].index] = kControl;
                col[op.qubits[1].index] = "Z";
                break;
            default:
                col[op.qubits[0].index] = *quirk_name(op.type);
                break;
        }
        if (op.condition.has_value()) {
            auto it = bit_wire.find(op.condition->bit.index);
            if (it == bit_wire.end()) {
                fail("condition bit is no longer held by a measured wire");
            }
            col[it->second] = op.condition->value ? kControl : kAntiControl;
        }
        if (op.type == GateType::Measure) {
            uint32_t w = op.qubits[0].index;
            wire_bit[w] = op.bit.index;
            bit_wire[op.bit.index] = w;
        }
        cols.push_back(col);
    }

    if (used_reset) {
        gates.push_back({{"id", kResetId}, {"name", kResetName}, {"matrix", kIdentityMatrix}});
    }
    json doc = {{"cols", cols}};
    if (!gates.empty()) {
        doc["gates"] = gates;
    }
    return std::string(kQuirkUrlPrefix) + percent_encode(doc.dump());
}

namespace {

struct CustomGate {
    std::string name;
    bool identity = false;
};

std::string describe_entry(const json &entry) {
    if (entry.is_string()) {
        return entry.get<std::string>();
    }
    if (entry.is_object() && entry.contains("id") && entry["id"].is_string()) {
        return entry["id"].get<std::string>();
    }
    return entry.dump();
}

/// Index of the first column made only of blanks and the named identity marker.
std::optional<size_t> find_marker_column(
    const json &cols, const std::map<std::string, CustomGate> &custom, std::string_view name, size_t from) {
    for (size_t c = from; c < cols.size(); c++) {
        bool saw = false;
        bool only = true;
        for (const auto &e : cols[c]) {
            if (e.is_number() && e.get<double>() == 1) {
                continue;
            }
            auto it = e.is_string() ? custom.find(e.get<std::string>()) : custom.end();
            if (it != custom.end() && it->second.identity && it->second.name == name) {
                saw = true;
            } else {
                only = false;
            }
        }
        if (saw && only) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace

Circuit parse_quirk_url(std::string_view url) {
    auto at = url.find("circuit=");
    if (at == std::string_view::npos) {
        throw QuirkError("not a Quirk circuit URL (missing 'circuit=')");
    }
    // LaTeX sources escape the link as \%7B...; drop only those backslashes.
    std::string payload;
    auto raw = url.substr(at + 8);
    for (size_t k = 0; k < raw.size(); k++) {
        if (raw[k] == '\\' && k + 1 < raw.size() && (raw[k + 1] == '%' || raw[k + 1] == '#')) {
            continue;
        }
        payload.push_back(raw[k]);
    }
    for (int round = 0; round < 3 && !payload.empty() && payload.front() != '{' && payload.find('%') != std::string::npos; round++) {
        payload = percent_decode(payload);
    }

    json doc;
    try {
        doc = json::parse(payload);
    } catch (const json::parse_error &e) {
        throw QuirkError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cols") || !doc["cols"].is_array()) {
        throw QuirkError("malformed JSON: expected an object with a 'cols' array");
    }

    std::map<std::string, CustomGate> custom;
    if (doc.contains("gates")) {
        for (const auto &g : doc["gates"]) {
            if (!g.is_object() || !g.contains("id")) {
                throw QuirkError("malformed JSON: custom gate without an id");
            }
            CustomGate cg;
            cg.name = g.value("name", "");
            cg.identity = g.contains("matrix") && g["matrix"].is_string() &&
                          strip_whitespace(g["matrix"].get<std::string>()) == kIdentityMatrix;
            custom[g["id"].get<std::string>()] = cg;
        }
    }

    const json &cols = doc["cols"];
    for (const auto &col : cols) {
        if (!col.is_array()) {
            throw QuirkError("malformed JSON: column is not an array");
        }
    }
    size_t first = 0;
    size_t last = cols.size();
    bool harness = false;
    if (auto test = find_marker_column(cols, custom, "test", 0)) {
        if (auto verify = find_marker_column(cols, custom, "verify", *test + 1)) {
            first = *test + 1;
            last = *verify;
            harness = true;
        }
    }

    size_t wire_count = 0;
    std::set<uint32_t> marked;
    std::set<uint32_t> measured;
    std::vector<std::optional<uint32_t>> wire_bit;
    std::vector<Op> ops;
    uint32_t bit_count = 0;

    for (size_t c = first; c < last; c++) {
        const json &col = cols[c];
        auto fail = [&](const std::string &why) {
            throw QuirkError("column " + std::to_string(c) + ": " + why);
        };
        if (!harness) {
            wire_count = std::max(wire_count, col.size());
        }
        if (wire_bit.size() < col.size()) {
            wire_bit.resize(col.size());
        }

        std::vector<uint32_t> controls;
        std::vector<std::pair<uint32_t, bool>> conditions;
        std::vector<std::pair<uint32_t, GateType>> targets;
        for (size_t w = 0; w < col.size(); w++) {
            const json &e = col[w];
            if (e.is_number() && e.get<double>() == 1) {
                continue;
            }
            if (!e.is_string()) {
                fail("unsupported gate '" + describe_entry(e) + "'");
            }
            auto id = e.get<std::string>();
            wire_count = std::max(wire_count, w + 1);
            if (id == "…") {
                continue;
            }
            if (auto it = custom.find(id); it != custom.end()) {
                if (!it->second.identity) {
                    fail("unsupported gate '" + id + "'");
                }
                if (is_ancilla_marker_name(it->second.name)) {
                    marked.insert(uint32_t(w));
                } else if (it->second.name == kResetName) {
                    targets.emplace_back(uint32_t(w), GateType::Reset);
                }
                continue;
            }
            if (id == kControl || id == kAntiControl) {
                if (wire_bit[w].has_value()) {
                    conditions.emplace_back(*wire_bit[w], id == kControl);
                } else if (id == kAntiControl) {
                    fail("anti-control on a quantum wire is not supported");
                } else {
                    controls.push_back(uint32_t(w));
                }
                continue;
            }
            auto type = quirk_gate(id);
            if (!type.has_value()) {
                fail("unsupported gate '" + id + "'");
            }
            if (wire_bit[w].has_value()) {
                fail("gate '" + id + "' on a measured wire");
            }
            targets.emplace_back(uint32_t(w), *type);
        }

        if (targets.empty()) {
            continue;
        }
        if (conditions.size() > 1) {
            fail("more than one classical control");
        }
        if (controls.size() > 1) {
            fail("gate with " + std::to_string(controls.size()) + " quantum controls");
        }
        std::optional<Condition> condition;
        if (!conditions.empty()) {
            condition = Condition{BitId{conditions[0].first}, conditions[0].second};
        }
        for (auto [w, type] : targets) {
            Op op;
            if (!controls.empty()) {
                if (type == GateType::X) {
                    op = Op::cx(QubitId{controls[0]}, QubitId{w});
                } else if (type == GateType::Z) {
                    op = Op::cz(QubitId{controls[0]}, QubitId{w});
                } else {
                    fail("controlled '" + std::string(gate_name(type)) + "' is not supported");
                }
            } else if (type == GateType::Reset) {
                if (condition.has_value()) {
                    fail("classically controlled reset");
                }
                op = Op::reset(QubitId{w});
                wire_bit[w].reset();
            } else if (type == GateType::Measure) {
                if (condition.has_value()) {
                    fail("classically controlled measurement");
                }
                op = Op::measure(QubitId{w}, BitId{bit_count});
                wire_bit[w] = bit_count;
                measured.insert(w);
                bit_count++;
            } else {
                op = Op::single(type, QubitId{w});
            }
            if (condition.has_value()) {
                op.condition = condition;
            }
            ops.push_back(op);
        }
    }

    std::set<uint32_t> ancillas = marked;
    ancillas.insert(measured.begin(), measured.end());
    std::vector<QubitId> data;
    for (uint32_t w = 0; w < wire_count; w++) {
        if (!ancillas.count(w)) {
            data.push_back(QubitId{w});
        }
    }
    Circuit circuit = Circuit::with_data(uint32_t(wire_count), std::move(data));
    circuit.bit_count = bit_count;
    circuit.ops = std::move(ops);
    auto violations = validate(circuit);
    if (!violations.empty()) {
        throw QuirkError("imported circuit is invalid: " + violations.front().str());
    }
    return circuit;
}

}  // namespace cnz

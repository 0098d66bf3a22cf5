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

#include "cnz/cli.h"

#include <bit>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cnz/codec.h"
#include "cnz/resources.h"
#include "cnz/synthesis.h"
#include "cnz/verify.h"
#include "json.hpp"

namespace cnz::cli {

namespace {

/// Usage or input problem; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_quirk(std::string_view text) {
    auto start = text.find_first_not_of(" \t\r\n");
    return start != std::string_view::npos && text.find("circuit=") != std::string_view::npos &&
           (text.substr(start, 4) == "http" || text.substr(start, 6) == "quirk#");
}

/// A path to a text circuit, a path to a file holding a Quirk URL, or a Quirk URL itself.
Circuit load_circuit(const std::string &in) {
    if (looks_like_quirk(in)) {
        return parse_quirk_url(in);
    }
    std::string text = read_file(in);
    if (looks_like_quirk(text)) {
        auto start = text.find_first_not_of(" \t\r\n");
        auto end = text.find_last_not_of(" \t\r\n");
        return parse_quirk_url(std::string_view(text).substr(start, end - start + 1));
    }
    return parse_text(text);
}

Operator parse_target(const std::string &against) {
    if (against == "cccz") {
        return oracle_cnz(3);
    }
    if (against.rfind("cnz:", 0) == 0) {
        auto rest = against.substr(4);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos && rest.size() < 4) {
            int n = std::stoi(rest);
            if (n >= 1) {
                return oracle_cnz(uint32_t(n));
            }
        }
    }
    throw UsageError("--against must be 'cccz' or 'cnz:N' with N >= 1 (got '" + against + "')");
}

struct SynthArgs {
    std::string gate;
    int n = -1;
    std::string method = "optimized";
    std::string out_path;
    bool cnx = false;
};

int cmd_synth(const SynthArgs &a, std::ostream &out, std::ostream &err) {
    Method method = a.method == "baseline" ? Method::Baseline : Method::Optimized;
    Circuit circuit;
    if (a.gate == "cccz") {
        if (a.n != -1 && a.n != 3) {
            throw UsageError("--gate cccz fixes n = 3 (got -n " + std::to_string(a.n) + ")");
        }
        circuit = method == Method::Optimized ? cccz_6t() : synth_cnz(CnZSpec{3}, Method::Baseline);
    } else {
        if (a.n == -1) {
            throw UsageError("--gate cnz requires -n");
        }
        if (a.n < 2) {
            throw UsageError("n must be ≥ 2 (got " + std::to_string(a.n) + ")");
        }
        if (method == Method::Optimized && a.n < 3) {
            throw UsageError("optimized requires n ≥ 3 (got n = " + std::to_string(a.n) + ")");
        }
        circuit = synth_cnz(CnZSpec{uint32_t(a.n)}, method);
    }
    if (a.cnx) {
        circuit = as_cnx(circuit);
    }
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + a.out_path + "'");
        }
        f << emit_text(circuit);
        err << "wrote " << a.out_path << "\n";
    }
    out << count(circuit).to_json() << "\n";
    return kExitOk;
}

std::string bits_str(const std::vector<uint8_t> &bits) {
    std::string s;
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

int cmd_verify(const std::string &in, const std::string &against, double tolerance, std::ostream &out, std::ostream &err) {
    Circuit circuit = load_circuit(in);
    Operator target = parse_target(against);
    if (target.dim != (size_t{1} << circuit.data_qubits.size())) {
        throw UsageError(
            "target '" + against + "' acts on " + std::to_string(std::countr_zero(target.dim)) +
            " qubits but the circuit has " + std::to_string(circuit.data_qubits.size()) + " data qubits");
    }
    auto verdict = check_implements(circuit, target, tolerance);

    nlohmann::ordered_json j;
    j["passed"] = verdict.passed;
    j["ancilla_clean"] = verdict.ancilla_clean;
    j["probability_total"] = verdict.probability_total;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto &g : verdict.branch_reports) {
        nlohmann::ordered_json row;
        row["outcomes"] = bits_str(g.outcomes);
        if (!g.reset_outcomes.empty()) {
            row["reset_outcomes"] = bits_str(g.reset_outcomes);
        }
        row["probability"] = g.probability;
        row["phase"] = {g.phase.real(), g.phase.imag()};
        row["max_deviation"] = g.max_deviation;
        row["phase_spread"] = g.phase_spread;
        j["groups"].push_back(row);

        err << "outcomes=" << (g.outcomes.empty() ? "-" : bits_str(g.outcomes)) << " p=" << g.probability
            << " phase=" << std::showpos << g.phase.real() << g.phase.imag() << "i" << std::noshowpos
            << " max_deviation=" << g.max_deviation << "\n";
    }
    if (!verdict.failure.empty()) {
        j["failure"] = verdict.failure;
        err << verdict.failure << "\n";
    }
    out << j.dump() << "\n";
    err << (verdict.passed ? "PASSED" : "FAILED") << "\n";
    return verdict.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_table(int n_max, std::ostream &out) {
    if (n_max < 3) {
        throw UsageError("--n-max must be ≥ 3 (the improvement needs n > 2)");
    }
    out << std::left << std::setw(4) << "n" << std::setw(12) << "baseline_t" << std::setw(13) << "optimized_t"
        << "saving\n";
    for (int n = 3; n <= n_max; n++) {
        auto row = compare(CnZSpec{uint32_t(n)});
        out << std::left << std::setw(4) << row.n << std::setw(12) << row.baseline_t << std::setw(13)
            << row.optimized_t << row.saving << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford+T synthesis and verification for multi-controlled Z gates", "cnz"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto *synth_cmd = app.add_subcommand("synth", "Synthesize a circuit and print its resource count");
    synth_cmd->add_option("--gate", synth.gate, "cccz or cnz")->required()->check(CLI::IsMember({"cccz", "cnz"}));
    synth_cmd->add_option("-n", synth.n, "Number of controls");
    synth_cmd->add_option("--method", synth.method, "baseline or optimized")
        ->check(CLI::IsMember({"baseline", "optimized"}));
    synth_cmd->add_option("--out", synth.out_path, "Write the circuit text here");
    synth_cmd->add_flag("--cnx", synth.cnx, "Conjugate the target by H (C^nX)");

    std::string verify_in, against;
    double tolerance = kDefaultTolerance;
    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit against a target channel");
    verify_cmd->add_option("--in", verify_in, "Circuit file or Quirk URL")->required();
    verify_cmd->add_option("--against", against, "cccz or cnz:N")->required();
    verify_cmd->add_option("--tolerance", tolerance, "Per-entry tolerance")->check(CLI::PositiveNumber);

    std::string count_in;
    auto *count_cmd = app.add_subcommand("count", "Print the resource count of a circuit");
    count_cmd->add_option("--in", count_in, "Circuit file or Quirk URL")->required();

    int n_max = 0;
    auto *table_cmd = app.add_subcommand("table", "Compare baseline and optimized T counts for n = 3..n-max");
    table_cmd->add_option("--n-max", n_max, "Largest n")->required();

    std::string export_in, format = "quirk";
    auto *export_cmd = app.add_subcommand("export", "Convert a circuit file to another format");
    export_cmd->add_option("--in", export_in, "Circuit file")->required();
    export_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"quirk"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*synth_cmd) {
            return cmd_synth(synth, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_in, against, tolerance, out, err);
        }
        if (*count_cmd) {
            out << count(load_circuit(count_in)).to_json() << "\n";
            return kExitOk;
        }
        if (*table_cmd) {
            return cmd_table(n_max, out);
        }
        if (*export_cmd) {
            out << export_quirk_url(load_circuit(export_in)) << "\n";
            return kExitOk;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cnz::cli

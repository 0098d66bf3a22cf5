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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cnz/codec.h"
#include "cnz/synthesis.h"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace cnz;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("cnz_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream f(path(name), std::ios::binary);
        f << text;
        return path(name);
    }
    static std::string read(const std::string &p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

size_t count_lines_starting(const std::string &text, std::initializer_list<std::string_view> heads) {
    std::istringstream in(text);
    std::string line;
    size_t n = 0;
    while (std::getline(in, line)) {
        for (auto h : heads) {
            if (line.rfind(std::string(h) + " ", 0) == 0) {
                n++;
            }
        }
    }
    return n;
}

}  // namespace

TEST_F(CliTest, synth_cccz_writes_six_t_lines) {
    auto r = run_cli({"synth", "--gate", "cccz", "--out", path("c.qct")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines_starting(read(path("c.qct")), {"t", "tdg"}), 6u);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["t"], 6);
    EXPECT_EQ(parse_text(read(path("c.qct"))), cccz_6t());
}

TEST_F(CliTest, synth_cnz_five_optimized) {
    auto r = run_cli({"synth", "--gate", "cnz", "-n", "5", "--method", "optimized"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["t"], 14);
}

TEST_F(CliTest, synth_baseline_counts) {
    auto r = run_cli({"synth", "--gate", "cnz", "-n", "5", "--method", "baseline"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["t"], 16);
    r = run_cli({"synth", "--gate", "cccz", "--method", "baseline"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["t"], 8);
}

TEST_F(CliTest, synth_optimized_small_n_is_usage_error) {
    auto r = run_cli({"synth", "--gate", "cnz", "-n", "2", "--method", "optimized"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("optimized requires n ≥ 3"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, synth_usage_errors) {
    EXPECT_EQ(run_cli({"synth", "--gate", "cnz"}).code, 2);
    EXPECT_EQ(run_cli({"synth", "--gate", "cnz", "-n", "1", "--method", "baseline"}).code, 2);
    EXPECT_EQ(run_cli({"synth", "--gate", "ccz"}).code, 2);
    EXPECT_EQ(run_cli({"synth", "--gate", "cccz", "-n", "4"}).code, 2);
    EXPECT_EQ(run_cli({"synth", "--gate", "cnz", "-n", "4", "--method", "fast"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST_F(CliTest, help_exits_zero) {
    auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("synth"), std::string::npos);
}

TEST_F(CliTest, synth_cnx_flag) {
    auto r = run_cli({"synth", "--gate", "cnz", "-n", "4", "--cnx", "--out", path("x.qct")});
    EXPECT_EQ(r.code, 0);
    auto c = parse_text(read(path("x.qct")));
    EXPECT_EQ(c.ops.front(), Op::single(GateType::H, QubitId{4}));
    EXPECT_EQ(c.ops.back(), Op::single(GateType::H, QubitId{4}));
}

TEST_F(CliTest, verify_synthesized_cccz) {
    run_cli({"synth", "--gate", "cccz", "--out", path("c.qct")});
    auto r = run_cli({"verify", "--in", path("c.qct"), "--against", "cccz"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["groups"].size(), 2u);
    EXPECT_NE(r.err.find("max_deviation="), std::string::npos);
    EXPECT_NE(r.err.find("PASSED"), std::string::npos);
}

TEST_F(CliTest, verify_t_against_cz_fails) {
    auto f = write("t.qct", "qubits 2\nt 0\n");
    auto r = run_cli({"verify", "--in", f, "--against", "cnz:1"});
    EXPECT_EQ(r.code, 1);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_GT(j["groups"][0]["max_deviation"].get<double>(), 1);
    EXPECT_NE(r.err.find("FAILED"), std::string::npos);
}

TEST_F(CliTest, verify_published_url) {
    std::string url = read(std::string(CNZ_TEST_DATA_DIR) + "/cccz_quirk_url.txt");
    while (!url.empty() && (url.back() == '\n' || url.back() == '\r')) {
        url.pop_back();
    }
    auto r = run_cli({"verify", "--in", url, "--against", "cccz"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto from_file = run_cli({"verify", "--in", std::string(CNZ_TEST_DATA_DIR) + "/cccz_quirk_url_escaped.txt",
                              "--against", "cccz"});
    EXPECT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, r.out);
}

TEST_F(CliTest, verify_input_errors) {
    EXPECT_EQ(run_cli({"verify", "--in", path("missing.qct"), "--against", "cccz"}).code, 2);
    auto bad = write("bad.qct", "qubits 2\nfoo 1\n");
    auto r = run_cli({"verify", "--in", bad, "--against", "cccz"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    run_cli({"synth", "--gate", "cccz", "--out", path("c.qct")});
    EXPECT_EQ(run_cli({"verify", "--in", path("c.qct"), "--against", "cnz:2"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--in", path("c.qct"), "--against", "cnz:x"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--in", path("c.qct"), "--against", "cnz:0"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--in", path("c.qct"), "--against", "cccz", "--tolerance", "-1"}).code, 2);
    std::string qft = std::string(kQuirkUrlPrefix) + percent_encode(R"({"cols":[["QFT3"]]})");
    r = run_cli({"verify", "--in", qft, "--against", "cccz"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unsupported gate 'QFT3'"), std::string::npos) << r.err;
}

TEST_F(CliTest, count_outputs) {
    run_cli({"synth", "--gate", "cccz", "--out", path("c.qct")});
    auto r = run_cli({"count", "--in", path("c.qct")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["t"], 6);

    auto empty = write("empty.qct", "");
    r = run_cli({"count", "--in", empty});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"t\":0,\"clifford\":0,\"measurements\":0,\"resets\":0,\"ancillas\":0,\"conditioned_gates\":0}\n");

    run_cli({"synth", "--gate", "cnz", "-n", "6", "--out", path("c6.qct")});
    r = run_cli({"count", "--in", path("c6.qct")});
    EXPECT_EQ(nlohmann::json::parse(r.out)["t"], 18);
}

TEST_F(CliTest, table_rows) {
    auto r = run_cli({"table", "--n-max", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "n   baseline_t  optimized_t  saving\n"
              "3   8           6            2\n");
    r = run_cli({"table", "--n-max", "6"});
    EXPECT_EQ(r.out,
              "n   baseline_t  optimized_t  saving\n"
              "3   8           6            2\n"
              "4   12          10           2\n"
              "5   16          14           2\n"
              "6   20          18           2\n");
    EXPECT_EQ(run_cli({"table", "--n-max", "2"}).code, 2);
}

TEST_F(CliTest, export_round_trip) {
    run_cli({"synth", "--gate", "cccz", "--out", path("c.qct")});
    auto r = run_cli({"export", "--in", path("c.qct"), "--format", "quirk"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::string url = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(url.rfind(kQuirkUrlPrefix, 0), 0u);
    EXPECT_EQ(parse_quirk_url(url), cccz_6t());
    auto v = run_cli({"verify", "--in", url, "--against", "cccz"});
    EXPECT_EQ(v.code, 0);
}

TEST_F(CliTest, export_unsupported_and_empty) {
    auto f = write("reuse.qct", "qubits 2\ndata 0\nreset 1\nh 1\n");
    auto r = run_cli({"export", "--in", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("reset"), std::string::npos) << r.err;

    auto empty = write("empty.qct", "");
    r = run_cli({"export", "--in", empty});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, std::string(kQuirkUrlPrefix) + percent_encode(R"({"cols":[]})") + "\n");
    EXPECT_EQ(run_cli({"export", "--in", empty, "--format", "qasm"}).code, 2);
}

TEST_F(CliTest, output_is_deterministic) {
    auto a = run_cli({"synth", "--gate", "cnz", "-n", "5", "--out", path("a.qct")});
    auto b = run_cli({"synth", "--gate", "cnz", "-n", "5", "--out", path("b.qct")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(read(path("a.qct")), read(path("b.qct")));
    auto va = run_cli({"verify", "--in", path("a.qct"), "--against", "cnz:5"});
    auto vb = run_cli({"verify", "--in", path("b.qct"), "--against", "cnz:5"});
    EXPECT_EQ(va.code, 0);
    EXPECT_EQ(va.out, vb.out);
    EXPECT_EQ(va.err, vb.err);
}

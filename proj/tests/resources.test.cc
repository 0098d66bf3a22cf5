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

#include "cnz/synthesis.h"
#include "gtest/gtest.h"

using namespace cnz;

TEST(count, cccz_6t) {
    ResourceCount expected;
    expected.t = 6;
    expected.clifford = 11;
    expected.measurements = 1;
    expected.resets = 1;
    expected.ancillas = 1;
    expected.conditioned_gates = 2;
    EXPECT_EQ(count(cccz_6t()), expected);
}

TEST(count, json_key_order) {
    EXPECT_EQ(
        count(cccz_6t()).to_json(),
        R"({"t":6,"clifford":11,"measurements":1,"resets":1,"ancillas":1,"conditioned_gates":2})");
}

TEST(count, empty) {
    EXPECT_EQ(count(Circuit::all_data(3)), ResourceCount{});
}

TEST(count, resets_and_sqrt_x_are_not_t) {
    Circuit c = Circuit::with_data(2, {QubitId{0}});
    c.append(Op::single(GateType::SqrtX, QubitId{1}));
    c.append(Op::single(GateType::SqrtXdg, QubitId{1}));
    c.append(Op::reset(QubitId{1}));
    auto r = count(c);
    EXPECT_EQ(r.t, 0u);
    EXPECT_EQ(r.clifford, 2u);
    EXPECT_EQ(r.resets, 1u);
}

TEST(count, rejects_invalid) {
    Circuit c = Circuit::all_data(1);
    c.append(Op::single(GateType::T, QubitId{4}));
    EXPECT_THROW(count(c), std::invalid_argument);
}

TEST(count, synthesized_ancillas_and_measurements) {
    for (uint32_t n = 3; n <= 8; n++) {
        auto b = count(synth_cnz(CnZSpec{n}, Method::Baseline));
        auto o = count(synth_cnz(CnZSpec{n}, Method::Optimized));
        EXPECT_EQ(b.ancillas, n - 1);
        EXPECT_EQ(b.measurements, n - 1);
        EXPECT_EQ(o.ancillas, n - 2);
        EXPECT_EQ(o.measurements, n - 2);
        EXPECT_EQ(o.conditioned_gates, n - 1);
        EXPECT_EQ(b.resets, n - 1);
        EXPECT_EQ(o.resets, n - 2);
    }
}

TEST(compare, table_three_to_eight) {
    // n: baseline 4n-4, optimized 4n-6.
    const ComparisonRow expected[] = {
        {3, 8, 6, 2}, {4, 12, 10, 2}, {5, 16, 14, 2}, {6, 20, 18, 2}, {7, 24, 22, 2}, {8, 28, 26, 2},
    };
    for (const auto &e : expected) {
        auto row = compare(CnZSpec{e.n});
        EXPECT_EQ(row.n, e.n);
        EXPECT_EQ(row.baseline_t, e.baseline_t);
        EXPECT_EQ(row.optimized_t, e.optimized_t);
        EXPECT_EQ(row.saving, e.saving);
    }
}

TEST(compare, rejects_small_n) {
    EXPECT_THROW(compare(CnZSpec{2}), std::invalid_argument);
}

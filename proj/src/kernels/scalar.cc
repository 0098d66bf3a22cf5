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
#include <utility>

#include "impl.h"

namespace cnz::kernels::scalar {

namespace {

// Explicit component arithmetic; std::complex operator* carries NaN recovery we don't need.
inline amp mul(amp a, amp b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void apply_matrix(std::span<amp> state, unsigned q, const Mat2 &m) {
    size_t n = state.size();
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            amp a0 = state[i];
            amp a1 = state[i + stride];
            state[i] = mul(m[0], a0) + mul(m[1], a1);
            state[i + stride] = mul(m[2], a0) + mul(m[3], a1);
        }
    }
}

void apply_phase(std::span<amp> state, unsigned q, amp phase) {
    size_t n = state.size();
    size_t stride = size_t{1} << q;
    for (size_t base = stride; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            state[i] = mul(state[i], phase);
        }
    }
}

void apply_cx(std::span<amp> state, unsigned control, unsigned target) {
    unsigned lo = std::min(control, target);
    unsigned hi = std::max(control, target);
    size_t cbit = size_t{1} << control;
    size_t tbit = size_t{1} << target;
    size_t quarter = state.size() >> 2;
    for (size_t k = 0; k < quarter; k++) {
        size_t i = insert_zero_bits(k, lo, hi) | cbit;
        std::swap(state[i], state[i | tbit]);
    }
}

void apply_cz(std::span<amp> state, unsigned a, unsigned b) {
    unsigned lo = std::min(a, b);
    unsigned hi = std::max(a, b);
    size_t both = (size_t{1} << a) | (size_t{1} << b);
    size_t quarter = state.size() >> 2;
    for (size_t k = 0; k < quarter; k++) {
        size_t i = insert_zero_bits(k, lo, hi) | both;
        state[i] = -state[i];
    }
}

double norm_squared(std::span<const amp> state) {
    double total = 0;
    for (const auto &a : state) {
        total += a.real() * a.real() + a.imag() * a.imag();
    }
    return total;
}

}  // namespace cnz::kernels::scalar

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

#include <cstddef>

#include "cnz/kernels/kernels.h"

namespace cnz::kernels {

/// Spreads `k` around a zero bit inserted at `pos`.
inline size_t insert_zero_bit(size_t k, unsigned pos) {
    size_t low = k & ((size_t{1} << pos) - 1);
    return ((k >> pos) << (pos + 1)) | low;
}

/// Spreads `k` around zero bits at `lo` < `hi`.
inline size_t insert_zero_bits(size_t k, unsigned lo, unsigned hi) {
    return insert_zero_bit(insert_zero_bit(k, lo), hi);
}

namespace scalar {
void apply_matrix(std::span<amp> state, unsigned q, const Mat2 &m);
void apply_phase(std::span<amp> state, unsigned q, amp phase);
void apply_cx(std::span<amp> state, unsigned control, unsigned target);
void apply_cz(std::span<amp> state, unsigned a, unsigned b);
double norm_squared(std::span<const amp> state);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CNZ_HAVE_AVX2_KERNELS 1
namespace avx2 {
void apply_matrix(std::span<amp> state, unsigned q, const Mat2 &m);
void apply_phase(std::span<amp> state, unsigned q, amp phase);
void apply_cx(std::span<amp> state, unsigned control, unsigned target);
void apply_cz(std::span<amp> state, unsigned a, unsigned b);
double norm_squared(std::span<const amp> state);
}  // namespace avx2
#else
#define CNZ_HAVE_AVX2_KERNELS 0
#endif

}  // namespace cnz::kernels

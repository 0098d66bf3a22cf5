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

// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a CPUID check.

#include "impl.h"

#if CNZ_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <algorithm>

namespace cnz::kernels::avx2 {

namespace {

// Each __m256d holds two complex doubles laid out {re0, im0, re1, im1}.

inline __m256d load2(const amp *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(amp *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

/// Lane-wise complex product x * y.
inline __m256d cmul(__m256d x, __m256d y) {
    __m256d yr = _mm256_movedup_pd(y);
    __m256d yi = _mm256_permute_pd(y, 0xF);
    __m256d xs = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(x, yr, _mm256_mul_pd(xs, yi));
}

/// x * c for a scalar complex c pre-split into broadcast real/imag parts.
inline __m256d cmul_bcast(__m256d x, __m256d cr, __m256d ci) {
    __m256d xs = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(x, cr, _mm256_mul_pd(xs, ci));
}

inline __m256d pair(amp lo, amp hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

}  // namespace

void apply_matrix(std::span<amp> state, unsigned q, const Mat2 &m) {
    size_t n = state.size();
    if (n < 2) {
        return;
    }
    amp *v = state.data();
    if (q == 0) {
        __m256d col0 = pair(m[0], m[2]);
        __m256d col1 = pair(m[1], m[3]);
        for (size_t i = 0; i < n; i += 2) {
            __m256d x = load2(v + i);
            __m256d a0 = _mm256_permute2f128_pd(x, x, 0x00);
            __m256d a1 = _mm256_permute2f128_pd(x, x, 0x11);
            store2(v + i, _mm256_add_pd(cmul(a0, col0), cmul(a1, col1)));
        }
        return;
    }
    __m256d r[4], im[4];
    for (int k = 0; k < 4; k++) {
        r[k] = _mm256_set1_pd(m[k].real());
        im[k] = _mm256_set1_pd(m[k].imag());
    }
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i += 2) {
            __m256d a0 = load2(v + i);
            __m256d a1 = load2(v + i + stride);
            store2(v + i, _mm256_add_pd(cmul_bcast(a0, r[0], im[0]), cmul_bcast(a1, r[1], im[1])));
            store2(v + i + stride, _mm256_add_pd(cmul_bcast(a0, r[2], im[2]), cmul_bcast(a1, r[3], im[3])));
        }
    }
}

void apply_phase(std::span<amp> state, unsigned q, amp phase) {
    size_t n = state.size();
    if (n < 2) {
        return;
    }
    amp *v = state.data();
    if (q == 0) {
        __m256d y = pair(amp{1, 0}, phase);
        for (size_t i = 0; i < n; i += 2) {
            store2(v + i, cmul(load2(v + i), y));
        }
        return;
    }
    __m256d pr = _mm256_set1_pd(phase.real());
    __m256d pi = _mm256_set1_pd(phase.imag());
    size_t stride = size_t{1} << q;
    for (size_t base = stride; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i += 2) {
            store2(v + i, cmul_bcast(load2(v + i), pr, pi));
        }
    }
}

void apply_cx(std::span<amp> state, unsigned control, unsigned target) {
    unsigned lo = std::min(control, target);
    if (lo == 0) {
        scalar::apply_cx(state, control, target);
        return;
    }
    unsigned hi = std::max(control, target);
    size_t cbit = size_t{1} << control;
    size_t tbit = size_t{1} << target;
    size_t quarter = state.size() >> 2;
    amp *v = state.data();
    for (size_t k = 0; k < quarter; k += 2) {
        size_t i = insert_zero_bits(k, lo, hi) | cbit;
        __m256d a = load2(v + i);
        __m256d b = load2(v + (i | tbit));
        store2(v + i, b);
        store2(v + (i | tbit), a);
    }
}

void apply_cz(std::span<amp> state, unsigned a, unsigned b) {
    unsigned lo = std::min(a, b);
    if (lo == 0) {
        scalar::apply_cz(state, a, b);
        return;
    }
    unsigned hi = std::max(a, b);
    size_t both = (size_t{1} << a) | (size_t{1} << b);
    size_t quarter = state.size() >> 2;
    amp *v = state.data();
    __m256d sign = _mm256_set1_pd(-0.0);
    for (size_t k = 0; k < quarter; k += 2) {
        size_t i = insert_zero_bits(k, lo, hi) | both;
        store2(v + i, _mm256_xor_pd(load2(v + i), sign));
    }
}

double norm_squared(std::span<const amp> state) {
    size_t n = state.size();
    const amp *v = state.data();
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = load2(v + i);
        acc = _mm256_fmadd_pd(x, x, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; i++) {
        total += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
    return total;
}

}  // namespace cnz::kernels::avx2

#endif

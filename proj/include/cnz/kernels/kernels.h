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

#include <array>
#include <complex>
#include <span>
#include <string_view>

/// Statevector inner loops.
///
/// Every kernel has a portable scalar reference and, on x86-64, an AVX2+FMA variant.
/// The variant is picked once at runtime from CPUID. Amplitude index bit `q` is the
/// value of qubit `q` (qubit 0 is the least significant bit).
namespace cnz::kernels {

using amp = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<amp, 4>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

struct KernelTable {
    Backend backend;
    void (*apply_matrix)(std::span<amp> state, unsigned q, const Mat2 &m);
    /// Multiplies amplitudes whose bit `q` is set by `phase`.
    void (*apply_phase)(std::span<amp> state, unsigned q, amp phase);
    void (*apply_cx)(std::span<amp> state, unsigned control, unsigned target);
    void (*apply_cz)(std::span<amp> state, unsigned a, unsigned b);
    double (*norm_squared)(std::span<const amp> state);
};

bool backend_available(Backend backend);

/// Throws std::invalid_argument if the backend is not available on this CPU.
const KernelTable &table(Backend backend);

/// Fastest available backend.
Backend best_backend();

/// The table used by the simulator. Defaults to `best_backend()`.
const KernelTable &active();
void set_active_backend(Backend backend);

/// Zeroes amplitudes whose bit `q` differs from `value`. Memory bound; no SIMD variant.
void project(std::span<amp> state, unsigned q, bool value);

}  // namespace cnz::kernels

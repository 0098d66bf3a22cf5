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

#include <atomic>
#include <stdexcept>
#include <string>

#include "impl.h"

namespace cnz::kernels {

namespace {

constexpr KernelTable kScalarTable{
    Backend::Scalar,
    scalar::apply_matrix,
    scalar::apply_phase,
    scalar::apply_cx,
    scalar::apply_cz,
    scalar::norm_squared,
};

#if CNZ_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{
    Backend::Avx2,
    avx2::apply_matrix,
    avx2::apply_phase,
    avx2::apply_cx,
    avx2::apply_cz,
    avx2::norm_squared,
};
#endif

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{&table(best_backend())};
    return slot;
}

}  // namespace

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "?";
}

bool backend_available(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if CNZ_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable &table(Backend backend) {
    if (!backend_available(backend)) {
        throw std::invalid_argument("kernel backend '" + std::string(backend_name(backend)) + "' is not available");
    }
#if CNZ_HAVE_AVX2_KERNELS
    if (backend == Backend::Avx2) {
        return kAvx2Table;
    }
#endif
    return kScalarTable;
}

Backend best_backend() {
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

const KernelTable &active() {
    return *active_slot().load(std::memory_order_acquire);
}

void set_active_backend(Backend backend) {
    active_slot().store(&table(backend), std::memory_order_release);
}

void project(std::span<amp> state, unsigned q, bool value) {
    size_t bit = size_t{1} << q;
    size_t keep = value ? bit : 0;
    for (size_t i = 0; i < state.size(); i++) {
        if ((i & bit) != keep) {
            state[i] = 0;
        }
    }
}

}  // namespace cnz::kernels

// Copyright 2026 The whichway Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <atomic>
#include <string>

#include "whichway/errors.hpp"
#include "whichway/kernels.hpp"

namespace whichway::kernels {

namespace {

constexpr KernelSet kScalar{Isa::scalar, &scalar::direct, &scalar::closed_form};
#if defined(WHICHWAY_HAVE_AVX2)
constexpr KernelSet kAvx2{Isa::avx2, &avx2::direct, &avx2::closed_form};
#endif

bool cpu_has_avx2() noexcept {
#if defined(WHICHWAY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelSet *detect() noexcept {
#if defined(WHICHWAY_HAVE_AVX2)
    if (cpu_has_avx2()) {
        return &kAvx2;
    }
#endif
    return &kScalar;
}

std::atomic<const KernelSet *> &selected() noexcept {
    static std::atomic<const KernelSet *> current{detect()};
    return current;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
        return cpu_has_avx2();
    }
    return false;
}

const KernelSet &kernels_for(Isa isa) {
    WW_REQUIRE(isa_available(isa),
               "kernel set '" + std::string(isa_name(isa)) +
                   "' is not available on this build/CPU");
#if defined(WHICHWAY_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return kAvx2;
    }
#endif
    return kScalar;
}

const KernelSet &active_kernels() noexcept {
    return *selected().load(std::memory_order_acquire);
}

void select_isa(Isa isa) {
    selected().store(&kernels_for(isa), std::memory_order_release);
}

void reset_isa() noexcept {
    selected().store(detect(), std::memory_order_release);
}

} // namespace whichway::kernels

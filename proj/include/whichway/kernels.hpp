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
#pragma once

/**
 * @file kernels.hpp
 * Screen-grid evaluation kernels.
 *
 * Each kernel maps a span of screen positions to four output arrays:
 * the total intensity, the two which-way resolved branch intensities, and
 * the interference (cross) term. Two kernel families exist:
 *
 *  - direct: coherent sum of the packet amplitudes, channel by channel, for
 *    an arbitrary 2 x M weight matrix (M detector components kept).
 *  - closed form: the Gaussian-cosh envelope times (1 + overlap cosine).
 *
 * Every family has a scalar reference implementation and, on x86-64, an
 * AVX2/FMA implementation chosen at runtime from CPUID.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace whichway::kernels {

using Complex = std::complex<double>;

/// Packet i is centered at +half_sep (i = 0) or -half_sep (i = 1). With
/// z = 1 / (4 eps^2 + 2 i tau) = alpha - i beta, packet amplitudes are
/// G_i(x) = amplitude * exp(-alpha (x -+ h)^2) * exp(-+ i beta d x) up to a
/// phase common to both packets, which drops out of every output.
struct DirectParams {
    double half_sep;
    double alpha;
    double beta;
    double amplitude;
    /// Number of detector components summed incoherently (1 or 2).
    int channels;
    /// weights[m][i]: coefficient of packet i in detector component m.
    std::array<std::array<Complex, 2>, 2> weights;
};

/// I(x) = 2|A_t|^2 exp(-(x^2 + h^2) / 2 sigma_t^2)
///        * (cosh(b x) + s cos(k x + phi))
struct ClosedFormParams {
    double half_sep;
    double inv_two_sigma2; ///< 1 / (2 sigma_t^2)
    double cosh_rate;      ///< b = d / (2 sigma_t^2)
    double wavenumber;     ///< k = d tau / (4 eps^4 + tau^2)
    double phase;          ///< phi = arg <d1|d2>
    double overlap;        ///< s
    double branch_scale;   ///< |A_t|^2
};

struct PatternOut {
    std::span<double> intensity;
    std::span<double> branch1;
    std::span<double> branch2;
    std::span<double> interference;
};

using DirectFn = void (*)(std::span<const double>, const DirectParams &,
                          const PatternOut &);
using ClosedFormFn = void (*)(std::span<const double>,
                              const ClosedFormParams &, const PatternOut &);

enum class Isa { scalar, avx2 };

struct KernelSet {
    Isa isa;
    DirectFn direct;
    ClosedFormFn closed_form;
};

std::string_view isa_name(Isa isa) noexcept;

/// True if the kernels for `isa` were compiled in and the CPU can run them.
bool isa_available(Isa isa) noexcept;

/// Kernel set for `isa`; throws ValidationError if unavailable.
const KernelSet &kernels_for(Isa isa);

/// Best available set, chosen on first use.
const KernelSet &active_kernels() noexcept;

/// Override the runtime choice (tests, benchmarks). Throws if unavailable.
void select_isa(Isa isa);

/// Restore the CPUID-based choice.
void reset_isa() noexcept;

namespace scalar {
void direct(std::span<const double> x, const DirectParams &p,
            const PatternOut &out);
void closed_form(std::span<const double> x, const ClosedFormParams &p,
                 const PatternOut &out);
} // namespace scalar

#if defined(WHICHWAY_HAVE_AVX2)
namespace avx2 {
void direct(std::span<const double> x, const DirectParams &p,
            const PatternOut &out);
void closed_form(std::span<const double> x, const ClosedFormParams &p,
                 const PatternOut &out);

/// Vector math used by the kernels, exposed for accuracy tests.
/// out[i] = exp(in[i]).
void exp_array(std::span<const double> in, std::span<double> out);
void sincos_array(std::span<const double> in, std::span<double> sin_out,
                  std::span<double> cos_out);
} // namespace avx2
#endif

} // namespace whichway::kernels

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
 * @file wavepacket.hpp
 * Transverse Gaussian packets leaving each slit and their free spreading on
 * the way to the screen.
 *
 * Mass, flight time and forward momentum only enter through the combination
 * tau = hbar t / m, which for a screen at distance L equals lambda_d L / 2 pi.
 * Everything here is SI: lengths in m, tau in m^2.
 */

#include <complex>

namespace whichway {

struct Geometry {
    double lambda_d;     ///< de Broglie wavelength [m]
    double slit_sep;     ///< slit separation d [m]
    double screen_dist;  ///< slit plane to screen L [m]
    double packet_width; ///< initial packet width epsilon [m]

    /// Throws ValidationError unless every field is finite and > 0.
    void validate() const;

    /// True when d <= 4 epsilon: the two packets overlap already at the slits.
    [[nodiscard]] bool overlapping_packets() const noexcept {
        return slit_sep <= 4.0 * packet_width;
    }
};

/// Geometry used throughout the tests and docs:
/// lambda_d = 500 nm, d = 100 um, L = 1 m, epsilon = 10 um.
inline constexpr Geometry kStandardGeometry{5e-7, 1e-4, 1.0, 1e-5};

struct PropagationContext {
    double tau;     ///< hbar t / m [m^2]
    double sigma_t; ///< packet width at the screen [m]
};

/// lambda_d L / 2 pi
double effective_tau(const Geometry &geom);

/// sqrt(epsilon^2 + (tau / 2 epsilon)^2)
double spread_sigma(double eps, double tau);

PropagationContext propagation_context(const Geometry &geom);

/// (8 pi eps^2)^(-1/4) exp(-(x - center)^2 / 4 eps^2). Its square integrates
/// to 1/2 in this convention.
double initial_amplitude(double x, double center, double eps);

/// Prefactor A_t = 2^(-1/2) [sqrt(2 pi) (eps + i tau / 2 eps)]^(-1/2),
/// principal branch.
std::complex<double> spread_prefactor(double eps, double tau);

/// A_t exp(-(x - center)^2 / (4 eps^2 + 2 i tau)). Negative tau is accepted
/// and runs the packet backwards: the result is the complex conjugate of the
/// forward evolution.
std::complex<double> evolved_amplitude(double x, double center, double eps,
                                       double tau);

} // namespace whichway

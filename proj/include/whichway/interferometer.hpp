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
 * @file interferometer.hpp
 * Particle-detector joint state at the screen and the resulting screen
 * patterns.
 *
 * The joint state is a1 |d1> G(x - d/2) + a2 |d2> G(x + d/2), where G is the
 * spread packet scaled to unit norm (sqrt(2) times evolved_amplitude). With
 * equal path amplitudes the total probability is
 * 1 + s cos(theta) exp(-d^2 / 8 eps^2); patterns are always renormalized on
 * the grid and the raw integral is kept as norm_constant.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "whichway/kernels.hpp"
#include "whichway/qubit.hpp"
#include "whichway/wavepacket.hpp"

namespace whichway {

class JointState {
  public:
    /// Throws ValidationError on an invalid geometry or if
    /// |a1|^2 + |a2|^2 deviates from 1 by more than kNormTolerance.
    JointState(const Geometry &geom, const DetectorPair &pair,
               const std::array<Complex, 2> &path_amps);

    /// a1 = a2 = 1/sqrt(2).
    static JointState symmetric(const Geometry &geom, const DetectorPair &pair);

    [[nodiscard]] const Geometry &geometry() const noexcept { return geom_; }
    [[nodiscard]] const DetectorPair &pair() const noexcept { return pair_; }
    [[nodiscard]] const std::array<Complex, 2> &path_amps() const noexcept {
        return amps_;
    }
    /// a1 == a2 within kNormTolerance.
    [[nodiscard]] bool has_equal_paths() const noexcept;

  private:
    Geometry geom_;
    DetectorPair pair_;
    std::array<Complex, 2> amps_;
};

/// Uniform screen grid, both ends included.
struct ScreenGrid {
    double x_min;
    double x_max;
    std::size_t n_points;

    /// Throws ValidationError unless x_min < x_max (finite) and n_points >= 2.
    void validate() const;
    [[nodiscard]] double spacing() const noexcept {
        return (x_max - x_min) / static_cast<double>(n_points - 1);
    }
    [[nodiscard]] std::vector<double> positions() const;

    /// [-5w, 5w] with 8192 points.
    static ScreenGrid default_for(const Geometry &geom);
};

enum class Provenance { direct, closed_form, conditional };
enum class IntensityMode { direct, closed_form };

/// Screen pattern normalized to unit trapezoid integral. For conditioned
/// (eraser) branches the unconditioned integral is used instead, so a branch
/// integrates to its weight and the branches add up to the full pattern.
struct PatternSamples {
    ScreenGrid grid;
    std::vector<double> x;
    std::vector<double> intensity;
    /// Which-way resolved contributions |a_i|^2 |G_i|^2 (times the detector
    /// projection weight for conditioned patterns).
    std::array<std::vector<double>, 2> branches;
    /// branches[0] + branches[1]; the non-oscillating part.
    std::vector<double> envelope;
    /// Cross term 2 Re(conj(w1) w2 conj(G1) G2).
    std::vector<double> interference;
    /// Raw trapezoid integral the arrays were divided by.
    double norm_constant = 0.0;
    Provenance provenance = Provenance::direct;
};

struct EraserResult {
    PatternSamples i_b;
    PatternSamples i_b_perp;
    PatternSamples i_sum;
    /// Integrated weight of each conditioned branch; sums to 1.
    std::array<double, 2> branch_weights;
};

/// Values in [-kClampWindow, 0) are rounding and become 0; anything more
/// negative is a NumericError.
inline constexpr double kClampWindow = 1e-15;

/// Kernel parameters for the coherent sum. Exposed for tests and benchmarks.
kernels::DirectParams direct_params(const JointState &js);
/// Same, restricted to detector projection onto `b`.
kernels::DirectParams conditional_params(const JointState &js,
                                         const DetectorState &b);
/// Throws ValidationError unless the path amplitudes are equal.
kernels::ClosedFormParams closed_form_params(const JointState &js);

/// sum_m |sum_i a_i <m|d_i> G_i(x)|^2, i.e. the squared norm of the joint
/// state's detector-space amplitude at x. Unnormalized.
double intensity_direct(double x, const JointState &js);

/// 2|A_t|^2 exp(-(x^2 + d^2/4) / 2 sigma_t^2)
///   * (cosh(x d / 2 sigma_t^2) + s cos(k x + arg <d1|d2>)),
/// k = x d tau / (4 eps^4 + tau^2). Requires equal path amplitudes.
double intensity_closed_form(double x, const JointState &js);

/// w = lambda_d L / d + 16 pi^2 eps^4 / (lambda_d d L)
double fringe_width(const Geometry &geom);

/// Evaluates the chosen intensity on every grid point with the active
/// kernel set. Throws ValidationError when the spacing exceeds w/8 and the
/// detector states overlap, NumericError on non-finite or clearly negative
/// values or a vanishing integral.
PatternSamples pattern_on_grid(const ScreenGrid &grid, const JointState &js,
                               IntensityMode mode);

/// Patterns conditioned on finding the detector in b1 or b2.
EraserResult conditional_patterns(const ScreenGrid &grid, const JointState &js,
                                  const MeasurementBasis &basis);

/// Trapezoid rule on a uniform grid.
double trapezoid(const std::vector<double> &y, double spacing) noexcept;

} // namespace whichway

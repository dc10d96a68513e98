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
 * @file metrics.hpp
 * Complementarity measures: distinguishability, fringe visibility (analytic
 * bound and measured from sampled patterns), the duality inequalities and
 * Bohr's recoil estimate.
 *
 * Measured visibility works on the envelope-normalized fringe
 * n(x) = I(x) / (I_1(x) + I_2(x)). Near the screen center the spread packets
 * are narrower than a fringe, so raw Michelson contrast of I picks up the
 * Gaussian slope between a maximum and its neighbouring minima; n removes it
 * and leaves s cos(kx + phi) / cosh(x d / 2 sigma_t^2).
 */

#include <array>
#include <vector>

#include "whichway/interferometer.hpp"
#include "whichway/qubit.hpp"
#include "whichway/wavepacket.hpp"

namespace whichway {

/// sqrt(1 - s^2)
double distinguishability(const DetectorPair &pair) noexcept;

/// s, the largest visibility any screen point can show.
double visibility_bound(const DetectorPair &pair) noexcept;

/// s / cosh(x d / 2 sigma_t^2)
double local_visibility(double x, const Geometry &geom, const DetectorPair &pair);

/// A sampled extremum after 3-point parabolic refinement.
struct Extremum {
    std::size_t index;
    double x;
    double value;
};

/// Vertex of the parabola through (i-1, i, i+1). Falls back to the sample
/// itself at the ends or when the three points are collinear.
Extremum refine_extremum(const std::vector<double> &x,
                         const std::vector<double> &y, std::size_t i);

/// Indices of strict interior local maxima (y[i-1] <= y[i] > y[i+1]).
std::vector<std::size_t> local_maxima(const std::vector<double> &y);
/// Indices of strict interior local minima (y[i-1] >= y[i] < y[i+1]).
std::vector<std::size_t> local_minima(const std::vector<double> &y);

/// max |I - envelope| / max I. Zero for a pattern without cross term.
double oscillatory_residual(const PatternSamples &pattern);

/// I / envelope, the envelope-normalized fringe. Points where the envelope
/// has underflowed relative to its peak are set to 1.
std::vector<double> normalized_fringe(const PatternSamples &pattern);

/// interference / (2 sqrt(I_1 I_2)): exactly s' cos(k x + phi) for a
/// two-packet pattern, with the envelope fully divided out. Points where
/// either branch has underflowed are set to 0.
std::vector<double> fringe_function(const PatternSamples &pattern);

/// Residual below which a pattern counts as fringe-free.
inline constexpr double kFlatnessThreshold = 1e-9;

/// Michelson contrast of the fringe around the brightest sample: the local
/// maximum of n nearest to it and the two flanking minima, all parabola
/// refined, minima averaged. Returns 0 for a flat pattern. Throws
/// NumericError when the fringes are not resolved on the grid.
double numeric_visibility(const PatternSamples &pattern);

/// Same estimator, anchored at the local maximum of n nearest to x_ref.
double numeric_visibility_at(const PatternSamples &pattern, double x_ref);

/// Mean distance between the maximum of fringe_function nearest the axis
/// x = 0 and its two neighbouring maxima.
double measured_fringe_spacing(const PatternSamples &pattern);

/// numeric_visibility of (i_b, i_b_perp).
std::array<double, 2> eraser_branch_visibilities(const EraserResult &er);

struct DualityReport {
    double D;
    double V_bound;
    double V_numeric;
    double dP2;
    double dQ2;
    double lhs;     ///< D^2 + V_numeric^2
    double rhs_unc; ///< 2 - (dP2 + dQ2)
    bool egy_ok;
    bool unc_ok;
};

inline constexpr double kDualityTolerance = 1e-9;

/// Squared magnitudes of the branch amplitudes a1, a2 obtained by projecting
/// the detector side of `js` onto mub_basis(). They sum to 1.
std::array<double, 2> mub_branch_weights(const JointState &js);

/// Builds the symmetric joint state, evaluates the pattern on `grid` by
/// direct summation and assembles the report.
DualityReport duality_report(const Geometry &geom, const DetectorPair &pair,
                             const ScreenGrid &grid);

struct BohrReport {
    double delta_px;   ///< (h / lambda_d)(d / L) [kg m / s]
    double delta_x;    ///< hbar / (2 delta_px) = lambda_d L / (4 pi d) [m]
    double fringe_sep; ///< lambda_d L / d [m]
    double ratio;      ///< delta_x / fringe_sep
};

inline constexpr double kPlanck = 6.62607015e-34;

BohrReport bohr_analysis(const Geometry &geom);

} // namespace whichway

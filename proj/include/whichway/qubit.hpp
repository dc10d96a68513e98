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
 * @file qubit.hpp
 * Two-level algebra for the which-way detector.
 *
 * Detector states are written in the eigenbasis {|p1>, |p2>} of the
 * which-way observable P (represented by sigma_3). Observables are carried
 * as Bloch vectors n, standing for W = n . sigma, so every observable is
 * dichotomic (eigenvalues +1 and -1) by construction.
 */

#include <array>
#include <complex>

namespace whichway {

using Complex = std::complex<double>;

/// Tolerance on |c1|^2 + |c2|^2 = 1 and on unit Bloch vectors.
inline constexpr double kNormTolerance = 1e-12;

/// Throws ValidationError unless both parts are finite.
Complex checked_amplitude(Complex c);

/// Normalized pure state c1|p1> + c2|p2>. Immutable once constructed.
class DetectorState {
  public:
    /// Throws ValidationError if |c1|^2 + |c2|^2 deviates from 1 by more
    /// than kNormTolerance or a component is non-finite. No renormalization.
    DetectorState(Complex c1, Complex c2);

    /// State with Bloch vector n (|n| = 1): cos(t/2)|p1> + e^{i phi} sin(t/2)|p2>.
    static DetectorState from_bloch(const std::array<double, 3> &n);

    [[nodiscard]] Complex c1() const noexcept { return c1_; }
    [[nodiscard]] Complex c2() const noexcept { return c2_; }

    /// (<sigma_1>, <sigma_2>, <sigma_3>)
    [[nodiscard]] std::array<double, 3> bloch() const noexcept;

  private:
    Complex c1_;
    Complex c2_;
};

/// <a|b> = conj(a1) b1 + conj(a2) b2.
Complex inner_product(const DetectorState &a, const DetectorState &b) noexcept;

/// The two detector states correlated with the two slits, parametrized as
/// |d1> = c1|p1> + c2|p2>, |d2> = conj(c2)|p1> + conj(c1)|p2>.
class DetectorPair {
  public:
    /// Builds |d2> from |d1> using the parametrization above.
    explicit DetectorPair(const DetectorState &d1);

    /// Validates that d2 has the components (conj(c2), conj(c1)) of d1.
    DetectorPair(const DetectorState &d1, const DetectorState &d2);

    [[nodiscard]] const DetectorState &d1() const noexcept { return d1_; }
    [[nodiscard]] const DetectorState &d2() const noexcept { return d2_; }

    /// s = |<d1|d2>|
    [[nodiscard]] double overlap() const noexcept { return overlap_; }
    /// theta = arg <d2|d1>
    [[nodiscard]] double phase() const noexcept { return phase_; }

  private:
    DetectorState d1_;
    DetectorState d2_;
    double overlap_;
    double phase_;
};

/// Inverse of the pair parametrization: |c1|^2 = (1 + sqrt(1 - s^2))/2,
/// |c2|^2 = (1 - sqrt(1 - s^2))/2, arg c1 = arg c2 = theta/2.
/// Throws ValidationError unless 0 <= s <= 1 and theta is finite.
DetectorPair make_detector_pair(double overlap, double phase);

/// W = n . sigma with |n| = 1.
class DichotomicObservable {
  public:
    explicit DichotomicObservable(const std::array<double, 3> &bloch);

    [[nodiscard]] const std::array<double, 3> &bloch() const noexcept {
        return n_;
    }

  private:
    std::array<double, 3> n_;
};

DichotomicObservable sigma1();
DichotomicObservable sigma2();
/// The which-way observable P.
DichotomicObservable sigma3();

/// <W> for W = n . sigma.
double expectation(const DetectorState &state, const DichotomicObservable &obs) noexcept;

/// <W^2> - <W>^2 = 1 - <W>^2, in [0, 1].
double variance(const DetectorState &state, const DichotomicObservable &obs) noexcept;

struct SumUncertainty {
    double var_sigma2;
    double var_sigma3;
    double sum;
};

/// Var(sigma_2) + Var(sigma_3) for a pure state. Always >= 1, with equality
/// exactly when <sigma_1> = 0.
SumUncertainty sum_uncertainty(const DetectorState &state) noexcept;

/// Orthonormal pair of detector states.
class MeasurementBasis {
  public:
    /// Throws ValidationError if |<b1|b2>| > kNormTolerance.
    MeasurementBasis(const DetectorState &b1, const DetectorState &b2);

    [[nodiscard]] const DetectorState &b1() const noexcept { return b1_; }
    [[nodiscard]] const DetectorState &b2() const noexcept { return b2_; }

  private:
    DetectorState b1_;
    DetectorState b2_;
};

/// {|p1>, |p2>}
MeasurementBasis which_way_basis();

/// |q1> = (|p1> + |p2>)/sqrt(2), |q2> = (|p1> - |p2>)/sqrt(2).
MeasurementBasis mub_basis();

/// b1 = cos(a)|p1> + sin(a)|p2>, b2 = sin(a)|p1> - cos(a)|p2>.
/// a = 0 is the which-way basis (up to the sign of b2), a = pi/4 is mub_basis().
MeasurementBasis rotated_basis(double angle);

} // namespace whichway

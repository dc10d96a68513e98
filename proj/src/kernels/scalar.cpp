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
#include <cmath>

#include "whichway/kernels.hpp"

namespace whichway::kernels::scalar {

void direct(std::span<const double> x, const DirectParams &p,
            const PatternOut &out) {
    const double d = 2.0 * p.half_sep;
    double wsum1 = 0.0;
    double wsum2 = 0.0;
    Complex cross{0.0, 0.0};
    for (int m = 0; m < p.channels; ++m) {
        wsum1 += std::norm(p.weights[m][0]);
        wsum2 += std::norm(p.weights[m][1]);
        cross += std::conj(p.weights[m][0]) * p.weights[m][1];
    }

    for (std::size_t i = 0; i < x.size(); ++i) {
        const double u1 = x[i] - p.half_sep;
        const double u2 = x[i] + p.half_sep;
        const double m1 = p.amplitude * std::exp(-p.alpha * u1 * u1);
        const double m2 = p.amplitude * std::exp(-p.alpha * u2 * u2);
        const double phi = p.beta * d * x[i];
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const Complex g1{m1 * c, -m1 * s};
        const Complex g2{m2 * c, m2 * s};

        double total = 0.0;
        for (int m = 0; m < p.channels; ++m) {
            total += std::norm(p.weights[m][0] * g1 + p.weights[m][1] * g2);
        }
        const double cos2 = c * c - s * s;
        const double sin2 = 2.0 * c * s;
        out.intensity[i] = total;
        out.branch1[i] = wsum1 * m1 * m1;
        out.branch2[i] = wsum2 * m2 * m2;
        out.interference[i] =
            2.0 * m1 * m2 * (cross.real() * cos2 - cross.imag() * sin2);
    }
}

void closed_form(std::span<const double> x, const ClosedFormParams &p,
                 const PatternOut &out) {
    const double h2 = p.half_sep * p.half_sep;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = (x[i] * x[i] + h2) * p.inv_two_sigma2;
        const double bx = p.cosh_rate * x[i];
        // e^{-a} cosh(bx), folded so neither factor can overflow alone.
        const double e_plus = p.branch_scale * std::exp(-a + bx);
        const double e_minus = p.branch_scale * std::exp(-a - bx);
        const double fringe =
            2.0 * p.branch_scale * std::exp(-a) * p.overlap *
            std::cos(p.wavenumber * x[i] + p.phase);
        out.branch1[i] = e_plus;
        out.branch2[i] = e_minus;
        out.interference[i] = fringe;
        out.intensity[i] = e_plus + e_minus + fringe;
    }
}

} // namespace whichway::kernels::scalar

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
#include <immintrin.h>

#include <algorithm>

#include "simd_math_avx2.hpp"
#include "whichway/kernels.hpp"

namespace whichway::kernels::avx2 {

using detail::splat;

namespace {
constexpr std::size_t kLanes = 4;

// Tail lanes go through the scalar kernel.
PatternOut tail_of(const PatternOut &out, std::size_t from) {
    return {out.intensity.subspan(from), out.branch1.subspan(from),
            out.branch2.subspan(from), out.interference.subspan(from)};
}
} // namespace

void direct(std::span<const double> x, const DirectParams &p,
            const PatternOut &out) {
    double wsum1 = 0.0;
    double wsum2 = 0.0;
    Complex cross{0.0, 0.0};
    for (int m = 0; m < p.channels; ++m) {
        wsum1 += std::norm(p.weights[m][0]);
        wsum2 += std::norm(p.weights[m][1]);
        cross += std::conj(p.weights[m][0]) * p.weights[m][1];
    }

    const __m256d h = splat(p.half_sep);
    const __m256d neg_alpha = splat(-p.alpha);
    const __m256d amp = splat(p.amplitude);
    const __m256d phase_rate = splat(p.beta * 2.0 * p.half_sep);
    const __m256d v_wsum1 = splat(wsum1);
    const __m256d v_wsum2 = splat(wsum2);
    const __m256d cross_re = splat(cross.real());
    const __m256d cross_im = splat(cross.imag());

    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        const __m256d u1 = _mm256_sub_pd(xv, h);
        const __m256d u2 = _mm256_add_pd(xv, h);
        const __m256d m1 = _mm256_mul_pd(
            amp, detail::exp_pd(_mm256_mul_pd(_mm256_mul_pd(neg_alpha, u1), u1)));
        const __m256d m2 = _mm256_mul_pd(
            amp, detail::exp_pd(_mm256_mul_pd(_mm256_mul_pd(neg_alpha, u2), u2)));
        __m256d s;
        __m256d c;
        detail::sincos_pd(_mm256_mul_pd(phase_rate, xv), s, c);

        // g1 = m1 (c - i s), g2 = m2 (c + i s)
        const __m256d g1_re = _mm256_mul_pd(m1, c);
        const __m256d g1_im = _mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), m1), s);
        const __m256d g2_re = _mm256_mul_pd(m2, c);
        const __m256d g2_im = _mm256_mul_pd(m2, s);

        __m256d total = _mm256_setzero_pd();
        for (int m = 0; m < p.channels; ++m) {
            const __m256d w1r = splat(p.weights[m][0].real());
            const __m256d w1i = splat(p.weights[m][0].imag());
            const __m256d w2r = splat(p.weights[m][1].real());
            const __m256d w2i = splat(p.weights[m][1].imag());
            // psi = w1 g1 + w2 g2
            __m256d re = _mm256_mul_pd(w1r, g1_re);
            re = _mm256_fnmadd_pd(w1i, g1_im, re);
            re = _mm256_fmadd_pd(w2r, g2_re, re);
            re = _mm256_fnmadd_pd(w2i, g2_im, re);
            __m256d im = _mm256_mul_pd(w1r, g1_im);
            im = _mm256_fmadd_pd(w1i, g1_re, im);
            im = _mm256_fmadd_pd(w2r, g2_im, im);
            im = _mm256_fmadd_pd(w2i, g2_re, im);
            total = _mm256_fmadd_pd(re, re, total);
            total = _mm256_fmadd_pd(im, im, total);
        }

        const __m256d cos2 = _mm256_fmsub_pd(c, c, _mm256_mul_pd(s, s));
        const __m256d sin2 = _mm256_mul_pd(splat(2.0), _mm256_mul_pd(c, s));
        const __m256d m12 = _mm256_mul_pd(m1, m2);
        const __m256d re_part =
            _mm256_fmsub_pd(cross_re, cos2, _mm256_mul_pd(cross_im, sin2));

        _mm256_storeu_pd(out.intensity.data() + i, total);
        _mm256_storeu_pd(out.branch1.data() + i,
                         _mm256_mul_pd(v_wsum1, _mm256_mul_pd(m1, m1)));
        _mm256_storeu_pd(out.branch2.data() + i,
                         _mm256_mul_pd(v_wsum2, _mm256_mul_pd(m2, m2)));
        _mm256_storeu_pd(out.interference.data() + i,
                         _mm256_mul_pd(splat(2.0), _mm256_mul_pd(m12, re_part)));
    }
    if (body < n) {
        scalar::direct(x.subspan(body), p, tail_of(out, body));
    }
}

void closed_form(std::span<const double> x, const ClosedFormParams &p,
                 const PatternOut &out) {
    const __m256d h2 = splat(p.half_sep * p.half_sep);
    const __m256d inv2s2 = splat(p.inv_two_sigma2);
    const __m256d rate = splat(p.cosh_rate);
    const __m256d k = splat(p.wavenumber);
    const __m256d phase = splat(p.phase);
    const __m256d scale = splat(p.branch_scale);
    const __m256d fringe_scale = splat(2.0 * p.branch_scale * p.overlap);

    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        const __m256d a = _mm256_mul_pd(_mm256_fmadd_pd(xv, xv, h2), inv2s2);
        const __m256d bx = _mm256_mul_pd(rate, xv);
        const __m256d e_plus = _mm256_mul_pd(scale, detail::exp_pd(_mm256_sub_pd(bx, a)));
        const __m256d e_minus = _mm256_mul_pd(
            scale, detail::exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), _mm256_add_pd(a, bx))));
        __m256d s;
        __m256d c;
        detail::sincos_pd(_mm256_fmadd_pd(k, xv, phase), s, c);
        const __m256d fringe = _mm256_mul_pd(
            _mm256_mul_pd(fringe_scale, detail::exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), a))), c);

        _mm256_storeu_pd(out.branch1.data() + i, e_plus);
        _mm256_storeu_pd(out.branch2.data() + i, e_minus);
        _mm256_storeu_pd(out.interference.data() + i, fringe);
        _mm256_storeu_pd(out.intensity.data() + i,
                         _mm256_add_pd(_mm256_add_pd(e_plus, e_minus), fringe));
    }
    if (body < n) {
        scalar::closed_form(x.subspan(body), p, tail_of(out, body));
    }
}

void exp_array(std::span<const double> in, std::span<double> out) {
    std::size_t i = 0;
    for (; i + kLanes <= in.size(); i += kLanes) {
        _mm256_storeu_pd(out.data() + i, detail::exp_pd(_mm256_loadu_pd(in.data() + i)));
    }
    if (i < in.size()) {
        alignas(32) double buf[kLanes] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t j = i; j < in.size(); ++j) {
            buf[j - i] = in[j];
        }
        _mm256_store_pd(buf, detail::exp_pd(_mm256_load_pd(buf)));
        for (std::size_t j = i; j < in.size(); ++j) {
            out[j] = buf[j - i];
        }
    }
}

void sincos_array(std::span<const double> in, std::span<double> sin_out,
                  std::span<double> cos_out) {
    alignas(32) double buf[kLanes];
    alignas(32) double sbuf[kLanes];
    alignas(32) double cbuf[kLanes];
    for (std::size_t i = 0; i < in.size(); i += kLanes) {
        const std::size_t count = std::min(kLanes, in.size() - i);
        for (std::size_t j = 0; j < kLanes; ++j) {
            buf[j] = j < count ? in[i + j] : 0.0;
        }
        __m256d s;
        __m256d c;
        detail::sincos_pd(_mm256_load_pd(buf), s, c);
        _mm256_store_pd(sbuf, s);
        _mm256_store_pd(cbuf, c);
        for (std::size_t j = 0; j < count; ++j) {
            sin_out[i + j] = sbuf[j];
            cos_out[i + j] = cbuf[j];
        }
    }
}

} // namespace whichway::kernels::avx2

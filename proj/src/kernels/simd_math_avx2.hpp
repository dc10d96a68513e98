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

// Four-lane double-precision exp and sincos for AVX2 + FMA.
// Polynomials and range-reduction constants are the Cephes double ones;
// both stay within a few ulp of libm over the argument ranges the kernels
// produce (|exp arg| <= 745, |trig arg| < 2^30).
//
// Only include from translation units compiled with -mavx2 -mfma.

#include <immintrin.h>

namespace whichway::kernels::avx2::detail {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d polevl(__m256d x, const double *c, int n) {
    __m256d acc = splat(c[0]);
    for (int i = 1; i <= n; ++i) {
        acc = _mm256_fmadd_pd(acc, x, splat(c[i]));
    }
    return acc;
}

// 2^n for integral-valued n in [-1022, 1023].
inline __m256d pow2_int(__m256d n) {
    const __m256d magic = splat(6755399441055744.0); // 2^52 + 2^51
    const __m256i bits = _mm256_sub_epi64(
        _mm256_castpd_si256(_mm256_add_pd(_mm256_add_pd(n, splat(1023.0)), magic)),
        _mm256_castpd_si256(magic));
    return _mm256_castsi256_pd(_mm256_slli_epi64(bits, 52));
}

inline __m256d exp_pd(__m256d x) {
    static constexpr double P[] = {1.26177193074810590878e-4,
                                   3.02994407707441961300e-2,
                                   9.99999999999999999910e-1};
    static constexpr double Q[] = {3.00198505138664455042e-6,
                                   2.52448340349684104192e-3,
                                   2.27265548208155028766e-1,
                                   2.00000000000000000009e0};
    const __m256d too_big = _mm256_cmp_pd(x, splat(709.782712893384), _CMP_GT_OQ);
    const __m256d too_small = _mm256_cmp_pd(x, splat(-745.1332191019412), _CMP_LT_OQ);
    const __m256d is_nan = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);

    const __m256d xc = _mm256_max_pd(_mm256_min_pd(x, splat(709.782712893384)),
                                    splat(-745.1332191019412));
    const __m256d fx = _mm256_round_pd(_mm256_mul_pd(xc, splat(1.4426950408889634074)),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(fx, splat(6.93145751953125e-1), xc);
    r = _mm256_fnmadd_pd(fx, splat(1.42860682030941723212e-6), r);

    const __m256d rr = _mm256_mul_pd(r, r);
    const __m256d px = _mm256_mul_pd(r, polevl(rr, P, 2));
    const __m256d qx = polevl(rr, Q, 3);
    __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    e = _mm256_fmadd_pd(splat(2.0), e, splat(1.0));

    // Split the scale so subnormal results stay reachable.
    const __m256d n1 = _mm256_floor_pd(_mm256_mul_pd(fx, splat(0.5)));
    const __m256d n2 = _mm256_sub_pd(fx, n1);
    e = _mm256_mul_pd(_mm256_mul_pd(e, pow2_int(n1)), pow2_int(n2));

    e = _mm256_blendv_pd(e, splat(__builtin_huge_val()), too_big);
    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), too_small);
    return _mm256_blendv_pd(e, x, is_nan);
}

inline void sincos_pd(__m256d x, __m256d &s, __m256d &c) {
    static constexpr double sin_coef[] = {
        1.58962301576546568060e-10, -2.50507477628578072866e-8,
        2.75573136213857245213e-6,  -1.98412698295895385996e-4,
        8.33333333332211858878e-3,  -1.66666666666666307295e-1};
    static constexpr double cos_coef[] = {
        -1.13585365213876817300e-11, 2.08757008419747316778e-9,
        -2.75573141792967388112e-7,  2.48015872888517045348e-5,
        -1.38888888888730564116e-3,  4.16666666666665929218e-2};

    const __m256d sign_bit = splat(-0.0);
    const __m256d ax = _mm256_andnot_pd(sign_bit, x);
    const __m256d x_sign = _mm256_and_pd(sign_bit, x);

    // Octant index rounded up to even.
    __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, splat(1.27323954473516268615)));
    const __m256d magic = splat(6755399441055744.0);
    __m256i j = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(y, magic)),
                                 _mm256_castpd_si256(magic));
    j = _mm256_and_si256(_mm256_add_epi64(j, _mm256_set1_epi64x(1)),
                         _mm256_set1_epi64x(~1LL));
    y = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(j, _mm256_castpd_si256(magic))),
                      magic);

    __m256d z = _mm256_fnmadd_pd(y, splat(7.85398125648498535156e-1), ax);
    z = _mm256_fnmadd_pd(y, splat(3.77489470793079817668e-8), z);
    z = _mm256_fnmadd_pd(y, splat(2.69515142907905952645e-15), z);
    const __m256d zz = _mm256_mul_pd(z, z);

    const __m256d poly_s = _mm256_fmadd_pd(_mm256_mul_pd(z, zz),
                                           polevl(zz, sin_coef, 5), z);
    __m256d poly_c = _mm256_fnmadd_pd(splat(0.5), zz, splat(1.0));
    poly_c = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), polevl(zz, cos_coef, 5), poly_c);

    const __m256i two = _mm256_set1_epi64x(2);
    const __m256i four = _mm256_set1_epi64x(4);
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(j, two), two));
    const __m256d sin_flip = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_and_si256(j, four), 61));
    const __m256d cos_flip = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(j, two), four), 61));

    s = _mm256_blendv_pd(poly_s, poly_c, swap);
    c = _mm256_blendv_pd(poly_c, poly_s, swap);
    s = _mm256_xor_pd(s, _mm256_xor_pd(sin_flip, x_sign));
    c = _mm256_xor_pd(c, cos_flip);
}

} // namespace whichway::kernels::avx2::detail

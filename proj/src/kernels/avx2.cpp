// Copyright (C) 2026 The uwake Authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 kernels, 4 doubles per lane group. Built with -mavx2 and without FMA
// contraction so the arithmetic kernels round exactly like the scalar ones.

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "kernels_internal.hpp"

namespace uwake::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

// 1 / (2k + 1), k = 0..11, for ln(m) = 2 s (1 + s^2/3 + s^4/5 + ...),
// s = (m - 1) / (m + 1). |s| <= 0.1716 for m in [sqrt(1/2), sqrt(2)], so
// s^24/25 < 1e-19 bounds the truncation.
constexpr int kSeriesTerms = 12;

inline __m256d log10_normal(__m256d x)
{
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mantissa_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3ff0000000000000LL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mantissa_mask), one_bits));

    // Biased exponent to double via the 2^52 trick.
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256d two52 = _mm256_set1_pd(4503599627370496.0);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
    e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(std::numbers::sqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, one));

    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d s2 = _mm256_mul_pd(s, s);
    __m256d poly = _mm256_set1_pd(1.0 / (2 * (kSeriesTerms - 1) + 1));
    for (int k = kSeriesTerms - 2; k >= 0; --k)
        poly = _mm256_add_pd(_mm256_mul_pd(poly, s2), _mm256_set1_pd(1.0 / (2 * k + 1)));
    const __m256d ln_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);

    return _mm256_add_pd(_mm256_mul_pd(e, _mm256_set1_pd(std::numbers::ln2 / std::numbers::ln10)),
                         _mm256_mul_pd(ln_m, _mm256_set1_pd(std::numbers::log10e)));
}

// Lanes that are zero, negative, subnormal, inf or NaN take the libm path.
inline __m256d log10_pd(__m256d x)
{
    const __m256d min_normal = _mm256_set1_pd(2.2250738585072014e-308);
    const __m256d max_finite = _mm256_set1_pd(1.7976931348623157e308);
    const __m256d ok = _mm256_and_pd(_mm256_cmp_pd(x, min_normal, _CMP_GE_OQ),
                                     _mm256_cmp_pd(x, max_finite, _CMP_LE_OQ));
    __m256d r = log10_normal(x);
    if (_mm256_movemask_pd(ok) != 0xF) {
        alignas(32) double xs[kLanes];
        alignas(32) double rs[kLanes];
        _mm256_store_pd(xs, x);
        _mm256_store_pd(rs, r);
        const int mask = _mm256_movemask_pd(ok);
        for (std::size_t i = 0; i < kLanes; ++i)
            if (!(mask & (1 << i))) rs[i] = std::log10(xs[i]);
        r = _mm256_load_pd(rs);
    }
    return r;
}

// Runs `body` over full groups of 4, padding the tail group with `pad`.
template <class Body>
inline void for_each_group(const double* in, double* out, std::size_t n, double pad, Body body)
{
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(out + i, body(_mm256_loadu_pd(in + i)));
    if (i < n) {
        alignas(32) double tail_in[kLanes] = {pad, pad, pad, pad};
        alignas(32) double tail_out[kLanes];
        for (std::size_t j = i; j < n; ++j) tail_in[j - i] = in[j];
        _mm256_store_pd(tail_out, body(_mm256_load_pd(tail_in)));
        for (std::size_t j = i; j < n; ++j) out[j] = tail_out[j - i];
    }
}

void log10_avx2(const double* x, double* out, std::size_t n)
{
    for_each_group(x, out, n, 1.0, [](__m256d v) { return log10_pd(v); });
}

void log_distance_avx2(const LogDistanceLaw& law, const double* d, double* out, std::size_t n)
{
    const __m256d base = _mm256_set1_pd(law.base_db);
    const __m256d geometric = _mm256_set1_pd(law.geometric_db);
    const __m256d cap = _mm256_set1_pd(law.cap_db);
    const __m256d slope = _mm256_set1_pd(law.log_slope_db);
    const __m256d linear = _mm256_set1_pd(law.linear_db_per_m);
    for_each_group(d, out, n, 1.0, [&](__m256d dist) {
        const __m256d g = _mm256_sub_pd(geometric, _mm256_mul_pd(slope, log10_pd(dist)));
        // min(cap, g) with the scalar std::min tie rule: g only when g < cap
        const __m256d capped = _mm256_blendv_pd(cap, g, _mm256_cmp_pd(g, cap, _CMP_LT_OQ));
        return _mm256_sub_pd(_mm256_add_pd(base, capped), _mm256_mul_pd(linear, dist));
    });
}

void lifetime_avx2(const LifetimeLaw& law, const double* rate, double* out, std::size_t n)
{
    const __m256d capacity = _mm256_set1_pd(law.capacity_mah);
    const __m256d active = _mm256_set1_pd(law.active_ma);
    const __m256d sleep = _mm256_set1_pd(law.sleep_ma);
    const __m256d duration = _mm256_set1_pd(law.active_s);
    const __m256d hour = _mm256_set1_pd(3600.0);
    const __m256d one = _mm256_set1_pd(1.0);
    for_each_group(rate, out, n, 0.0, [&](__m256d r) {
        const __m256d f = _mm256_div_pd(_mm256_mul_pd(r, duration), hour);
        __m256d avg = _mm256_add_pd(_mm256_mul_pd(f, active),
                                    _mm256_mul_pd(_mm256_sub_pd(one, f), sleep));
        avg = _mm256_blendv_pd(avg, sleep, _mm256_cmp_pd(avg, sleep, _CMP_LT_OQ));
        avg = _mm256_blendv_pd(avg, active, _mm256_cmp_pd(avg, active, _CMP_GT_OQ));
        return _mm256_div_pd(capacity, avg);
    });
}

}  // namespace

const KernelTable kAvx2Table{log10_avx2, log_distance_avx2, lifetime_avx2};

}  // namespace uwake::kernels::detail

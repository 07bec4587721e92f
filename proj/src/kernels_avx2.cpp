#include <cmath>

#include "epic/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

namespace epic::kernels::avx2 {

void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 b = _mm256_loadu_ps(base + i);
        const __m256 c = _mm256_loadu_ps(ctrl + i);
        const __m256 m = _mm256_loadu_ps(mask + i);
        // mul+add, not FMA: must match the scalar rounding exactly
        const __m256 fused = _mm256_add_ps(b, _mm256_mul_ps(m, c));
        const __m256 copy = _mm256_or_ps(_mm256_cmp_ps(m, zero, _CMP_EQ_OQ),
                                         _mm256_cmp_ps(c, zero, _CMP_EQ_OQ));
        _mm256_storeu_ps(dst + i, _mm256_blendv_ps(fused, b, copy));
    }
    for (; i < n; ++i) {
        const float m = mask[i];
        const float c = ctrl[i];
        dst[i] = (m == 0.0f || c == 0.0f) ? base[i] : base[i] + m * c;
    }
}

void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx) {
    // expand 16 mask bytes into 48 rgb bytes: output byte j belongs to pixel j/3
    const __m128i expand0 = _mm_setr_epi8(0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5);
    const __m128i expand1 = _mm_setr_epi8(5, 5, 6, 6, 6, 7, 7, 7, 8, 8, 8, 9, 9, 9, 10, 10);
    const __m128i expand2 = _mm_setr_epi8(10, 11, 11, 11, 12, 12, 12, 13, 13, 13, 14, 14, 14, 15, 15, 15);
    const __m128i zero = _mm_setzero_si128();

    size_t i = 0;
    for (; i + 16 <= npx; i += 16) {
        const __m128i m = _mm_loadu_si128((const __m128i*)(mask + i));
        const __m128i is_zero = _mm_cmpeq_epi8(m, zero);  // 0xFF where pixel is masked out
        uint8_t* p = rgb + 3 * i;
        __m128i r0 = _mm_loadu_si128((const __m128i*)(p + 0));
        __m128i r1 = _mm_loadu_si128((const __m128i*)(p + 16));
        __m128i r2 = _mm_loadu_si128((const __m128i*)(p + 32));
        r0 = _mm_andnot_si128(_mm_shuffle_epi8(is_zero, expand0), r0);
        r1 = _mm_andnot_si128(_mm_shuffle_epi8(is_zero, expand1), r1);
        r2 = _mm_andnot_si128(_mm_shuffle_epi8(is_zero, expand2), r2);
        _mm_storeu_si128((__m128i*)(p + 0), r0);
        _mm_storeu_si128((__m128i*)(p + 16), r1);
        _mm_storeu_si128((__m128i*)(p + 32), r2);
    }
    for (; i < npx; ++i) {
        if (mask[i] == 0) {
            rgb[3 * i + 0] = 0;
            rgb[3 * i + 1] = 0;
            rgb[3 * i + 2] = 0;
        }
    }
}

double flow_magnitude_sum(const float* u, const float* v, size_t n) {
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 a = _mm256_loadu_ps(u + i);
        const __m256 b = _mm256_loadu_ps(v + i);
        const __m256 mag = _mm256_sqrt_ps(
            _mm256_add_ps(_mm256_mul_ps(a, a), _mm256_mul_ps(b, b)));
        acc_lo = _mm256_add_pd(acc_lo, _mm256_cvtps_pd(_mm256_castps256_ps128(mag)));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_cvtps_pd(_mm256_extractf128_ps(mag, 1)));
    }
    const __m256d acc = _mm256_add_pd(acc_lo, acc_hi);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        total += (double)std::sqrt(u[i] * u[i] + v[i] * v[i]);
    return total;
}

size_t count_nonzero(const uint8_t* v, size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    size_t zeros = 0;
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i x = _mm256_loadu_si256((const __m256i*)(v + i));
        const uint32_t m = (uint32_t)_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero));
        zeros += (size_t)__builtin_popcount(m);
    }
    size_t nonzero = (i - zeros);
    for (; i < n; ++i) nonzero += (v[i] != 0);
    return nonzero;
}

}  // namespace epic::kernels::avx2

#else  // !__AVX2__

// Non-x86 builds: the dispatcher never selects these, but keep the symbols.
namespace epic::kernels::avx2 {

void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n) {
    scalar::fuse_masked_add(dst, base, ctrl, mask, n);
}
void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx) {
    scalar::mask_rgb(rgb, mask, npx);
}
double flow_magnitude_sum(const float* u, const float* v, size_t n) {
    return scalar::flow_magnitude_sum(u, v, n);
}
size_t count_nonzero(const uint8_t* v, size_t n) {
    return scalar::count_nonzero(v, n);
}

}  // namespace epic::kernels::avx2

#endif

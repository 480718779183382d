// Compiled with -mavx2 (and deliberately without -mfma).
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace trisub::kernels::detail {

namespace {

constexpr std::size_t kWidth = 4;

void dot_avx2(Lanes u, Lanes v, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(u.x0 + i), _mm256_loadu_pd(v.x0 + i));
        const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(u.x1 + i), _mm256_loadu_pd(v.x1 + i));
        const __m256d p2 = _mm256_mul_pd(_mm256_loadu_pd(u.x2 + i), _mm256_loadu_pd(v.x2 + i));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_sub_pd(p0, p1), p2));
    }
    dot_scalar(offset(u, i), offset(v, i), out + i, n - i);
}

void chord_sq_avx2(Lanes u, Lanes v, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(u.x0 + i), _mm256_loadu_pd(v.x0 + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(u.x1 + i), _mm256_loadu_pd(v.x1 + i));
        const __m256d d2 = _mm256_sub_pd(_mm256_loadu_pd(u.x2 + i), _mm256_loadu_pd(v.x2 + i));
        const __m256d spatial = _mm256_add_pd(_mm256_mul_pd(d1, d1), _mm256_mul_pd(d2, d2));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(spatial, _mm256_mul_pd(d0, d0)));
    }
    chord_sq_scalar(offset(u, i), offset(v, i), out + i, n - i);
}

void midpoint_avx2(Lanes u, Lanes v, MutLanes out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d u0 = _mm256_loadu_pd(u.x0 + i);
        const __m256d u1 = _mm256_loadu_pd(u.x1 + i);
        const __m256d u2 = _mm256_loadu_pd(u.x2 + i);
        const __m256d v0 = _mm256_loadu_pd(v.x0 + i);
        const __m256d v1 = _mm256_loadu_pd(v.x1 + i);
        const __m256d v2 = _mm256_loadu_pd(v.x2 + i);
        const __m256d d = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(u0, v0), _mm256_mul_pd(u1, v1)),
                                        _mm256_mul_pd(u2, v2));
        const __m256d s = _mm256_sqrt_pd(_mm256_add_pd(two, _mm256_mul_pd(two, d)));
        const __m256d m1 = _mm256_div_pd(_mm256_add_pd(u1, v1), s);
        const __m256d m2 = _mm256_div_pd(_mm256_add_pd(u2, v2), s);
        const __m256d r = _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(m1, m1)), _mm256_mul_pd(m2, m2));
        _mm256_storeu_pd(out.x0 + i, _mm256_sqrt_pd(r));
        _mm256_storeu_pd(out.x1 + i, m1);
        _mm256_storeu_pd(out.x2 + i, m2);
    }
    midpoint_scalar(offset(u, i), offset(v, i), offset(out, i), n - i);
}

void to_disk_avx2(Lanes p, double* x, double* y, std::size_t n, bool poincare) {
    const __m256d shift = _mm256_set1_pd(poincare ? 1.0 : 0.0);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d den = poincare ? _mm256_add_pd(shift, _mm256_loadu_pd(p.x0 + i)) : _mm256_loadu_pd(p.x0 + i);
        _mm256_storeu_pd(x + i, _mm256_div_pd(_mm256_loadu_pd(p.x1 + i), den));
        _mm256_storeu_pd(y + i, _mm256_div_pd(_mm256_loadu_pd(p.x2 + i), den));
    }
    to_disk_scalar(offset(p, i), x + i, y + i, n - i, poincare);
}

}  // namespace

const KernelTable kAvx2Table{"avx2", dot_avx2, chord_sq_avx2, midpoint_avx2, to_disk_avx2};

}  // namespace trisub::kernels::detail

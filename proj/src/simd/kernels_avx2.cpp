// Compiled with -mavx2 only; never called unless the CPU reports AVX2.

#include <immintrin.h>

#include "mobius_point.hpp"

namespace omnivr::simd {

namespace {

void mobius_sphere_avx2(const MobiusCoeffs& m, double* x, double* y, double* z, std::size_t n)
{
    const __m256d ar = _mm256_set1_pd(m.ar), ai = _mm256_set1_pd(m.ai);
    const __m256d br = _mm256_set1_pd(m.br), bi = _mm256_set1_pd(m.bi);
    const __m256d cr = _mm256_set1_pd(m.cr), ci = _mm256_set1_pd(m.ci);
    const __m256d dr = _mm256_set1_pd(m.dr), di = _mm256_set1_pd(m.di);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d singular = _mm256_set1_pd(detail::kSingularSq);
    const __m256d huge = _mm256_set1_pd(detail::kHugeSq);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d px = _mm256_loadu_pd(x + i);
        const __m256d py = _mm256_loadu_pd(y + i);
        const __m256d pz = _mm256_loadu_pd(z + i);

        const __m256d denom = _mm256_sub_pd(one, pz);
        const __m256d u = _mm256_div_pd(px, denom);
        const __m256d v = _mm256_div_pd(py, denom);

        const __m256d nr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ar, u), _mm256_mul_pd(ai, v)), br);
        const __m256d ni = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, v), _mm256_mul_pd(ai, u)), bi);
        const __m256d er = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(cr, u), _mm256_mul_pd(ci, v)), dr);
        const __m256d ei = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(cr, v), _mm256_mul_pd(ci, u)), di);
        const __m256d e2 = _mm256_add_pd(_mm256_mul_pd(er, er), _mm256_mul_pd(ei, ei));

        const __m256d wr = _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(nr, er), _mm256_mul_pd(ni, ei)), e2);
        const __m256d wi = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(ni, er), _mm256_mul_pd(nr, ei)), e2);

        const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(wr, wr), _mm256_mul_pd(wi, wi));
        const __m256d s = _mm256_add_pd(one, r2);

        // Lanes at the projection pole, at a pole of f or mapped to infinity
        // take the scalar path.
        const __m256d special = _mm256_or_pd(
            _mm256_or_pd(_mm256_cmp_pd(denom, zero, _CMP_LE_OQ), _mm256_cmp_pd(e2, singular, _CMP_NGE_UQ)),
            _mm256_cmp_pd(r2, huge, _CMP_NLT_UQ));

        _mm256_storeu_pd(x + i, _mm256_div_pd(_mm256_mul_pd(two, wr), s));
        _mm256_storeu_pd(y + i, _mm256_div_pd(_mm256_mul_pd(two, wi), s));
        _mm256_storeu_pd(z + i, _mm256_div_pd(_mm256_sub_pd(r2, one), s));

        const int mask = _mm256_movemask_pd(special);
        if (mask != 0) {
            alignas(32) double sx[4], sy[4], sz[4];
            _mm256_store_pd(sx, px);
            _mm256_store_pd(sy, py);
            _mm256_store_pd(sz, pz);
            for (int lane = 0; lane < 4; ++lane) {
                if (mask & (1 << lane)) {
                    detail::mobius_sphere_point(m, sx[lane], sy[lane], sz[lane]);
                    x[i + lane] = sx[lane];
                    y[i + lane] = sy[lane];
                    z[i + lane] = sz[lane];
                }
            }
        }
    }
    for (; i < n; ++i)
        detail::mobius_sphere_point(m, x[i], y[i], z[i]);
}

void fir_horizontal_avx2(const double* src, const double* taps, std::size_t ntaps, double* out, std::size_t n)
{
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t k = 0; k < ntaps; ++k)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]), _mm256_loadu_pd(src + j + k)));
        _mm256_storeu_pd(out + j, acc);
    }
    for (; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < ntaps; ++k)
            acc += taps[k] * src[j + k];
        out[j] = acc;
    }
}

void fir_vertical_avx2(const double* const* rows, const double* taps, std::size_t ntaps, double* out,
                       std::size_t n)
{
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t k = 0; k < ntaps; ++k)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]), _mm256_loadu_pd(rows[k] + j)));
        _mm256_storeu_pd(out + j, acc);
    }
    for (; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < ntaps; ++k)
            acc += taps[k] * rows[k][j];
        out[j] = acc;
    }
}

double sq_diff_sum_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; j < n; ++j) {
        const double d = a[j] - b[j];
        total += d * d;
    }
    return total;
}

} // namespace

const Kernels* avx2_kernels_impl()
{
    static const Kernels k{"avx2", mobius_sphere_avx2, fir_horizontal_avx2, fir_vertical_avx2, sq_diff_sum_avx2};
    return &k;
}

} // namespace omnivr::simd

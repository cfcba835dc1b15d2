#include "mobius_point.hpp"

namespace omnivr::simd {

namespace {

void mobius_sphere_scalar(const MobiusCoeffs& m, double* x, double* y, double* z, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        detail::mobius_sphere_point(m, x[i], y[i], z[i]);
}

void fir_horizontal_scalar(const double* src, const double* taps, std::size_t ntaps, double* out, std::size_t n)
{
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < ntaps; ++k)
            acc += taps[k] * src[j + k];
        out[j] = acc;
    }
}

void fir_vertical_scalar(const double* const* rows, const double* taps, std::size_t ntaps, double* out,
                         std::size_t n)
{
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < ntaps; ++k)
            acc += taps[k] * rows[k][j];
        out[j] = acc;
    }
}

double sq_diff_sum_scalar(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

} // namespace

const Kernels& scalar_kernels()
{
    static const Kernels k{"scalar", mobius_sphere_scalar, fir_horizontal_scalar, fir_vertical_scalar,
                           sq_diff_sum_scalar};
    return k;
}

} // namespace omnivr::simd

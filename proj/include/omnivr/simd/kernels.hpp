#pragma once

#include <cstddef>

namespace omnivr::simd {

// Coefficients of f(z) = (a z + b) / (c z + d), split into real parts.
struct MobiusCoeffs {
    double ar, ai, br, bi, cr, ci, dr, di;
};

// Inner loops with a scalar reference and vectorized variants. Variants of
// mobius_sphere and the fir_* kernels are bit-identical to the reference;
// sq_diff_sum may differ in the last bits because it reorders the sum.
struct Kernels {
    const char* name;

    // In place over n sphere points (structure of arrays): stereographic
    // projection, f, inverse projection.
    void (*mobius_sphere)(const MobiusCoeffs& m, double* x, double* y, double* z, std::size_t n);

    // out[j] = sum_k taps[k] * src[j + k], j < n (src holds n + ntaps - 1 values).
    void (*fir_horizontal)(const double* src, const double* taps, std::size_t ntaps, double* out, std::size_t n);

    // out[j] = sum_k taps[k] * rows[k][j], j < n.
    void (*fir_vertical)(const double* const* rows, const double* taps, std::size_t ntaps, double* out,
                         std::size_t n);

    // sum_j (a[j] - b[j])^2.
    double (*sq_diff_sum)(const double* a, const double* b, std::size_t n);
};

const Kernels& scalar_kernels();

/// AVX2 variants, or nullptr when not compiled in or not supported by the CPU.
const Kernels* avx2_kernels();

/// The best supported variant; OMNIVR_SIMD=scalar forces the reference.
const Kernels& active_kernels();

} // namespace omnivr::simd

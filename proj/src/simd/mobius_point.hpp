#pragma once

// Per-point Möbius arithmetic shared by the scalar kernel, the scalar
// fallback lanes of the vector kernels and the public apply(). Every vector
// variant must reproduce these expressions operation for operation.

#include "omnivr/simd/kernels.hpp"

namespace omnivr::simd::detail {

// |c z + d|^2 below this is treated as a pole of f.
inline constexpr double kSingularSq = 1e-24;
// |w|^2 above this is treated as the point at infinity.
inline constexpr double kHugeSq = 1e200;

// f(z) for finite z. Returns false when the image is the point at infinity.
inline bool mobius_finite(const MobiusCoeffs& m, double zr, double zi, double& wr, double& wi)
{
    const double nr = m.ar * zr - m.ai * zi + m.br;
    const double ni = m.ar * zi + m.ai * zr + m.bi;
    const double dr = m.cr * zr - m.ci * zi + m.dr;
    const double di = m.cr * zi + m.ci * zr + m.di;
    const double d2 = dr * dr + di * di;
    if (!(d2 >= kSingularSq))
        return false;
    wr = (nr * dr + ni * di) / d2;
    wi = (ni * dr - nr * di) / d2;
    return true;
}

// f(infinity) = a / c, or infinity when c vanishes.
inline bool mobius_at_infinity(const MobiusCoeffs& m, double& wr, double& wi)
{
    const double c2 = m.cr * m.cr + m.ci * m.ci;
    if (!(c2 >= kSingularSq))
        return false;
    wr = (m.ar * m.cr + m.ai * m.ci) / c2;
    wi = (m.ai * m.cr - m.ar * m.ci) / c2;
    return true;
}

inline void mobius_sphere_point(const MobiusCoeffs& m, double& x, double& y, double& z)
{
    const double denom = 1.0 - z;
    double wr = 0.0;
    double wi = 0.0;
    const bool finite = denom <= 0.0 ? mobius_at_infinity(m, wr, wi) : mobius_finite(m, x / denom, y / denom, wr, wi);
    if (!finite) {
        x = 0.0;
        y = 0.0;
        z = 1.0;
        return;
    }
    const double r2 = wr * wr + wi * wi;
    if (!(r2 < kHugeSq)) {
        x = 0.0;
        y = 0.0;
        z = 1.0;
        return;
    }
    const double s = 1.0 + r2;
    x = (2.0 * wr) / s;
    y = (2.0 * wi) / s;
    z = (r2 - 1.0) / s;
}

} // namespace omnivr::simd::detail

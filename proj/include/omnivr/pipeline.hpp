#pragma once

#include "omnivr/image.hpp"
#include "omnivr/mobius.hpp"
#include "omnivr/resample.hpp"

namespace omnivr {

/// True for the supported resolution factors 1, 2, 4, 8, 16.
bool is_supported_factor(int factor);

/// Bicubic resampling of img at the pixel centers of the (f h) x (f w) grid.
/// Throws ConfigError for unsupported factors.
Image upsample_bicubic(const Image& img, int factor);

/// Antialiased bicubic reduction by an integer factor (Catmull-Rom stretched
/// by the factor). Columns wrap; rows reflect across the poles. Requires the
/// height to be divisible by factor.
Image downsample_bicubic(const Image& img, int factor);

/// Upsample by up_factor, then pull every output pixel through inverse(m)
/// (backward warping), so content moves forward under m.
Image transform_image(const Image& img, const MobiusMatrix& m, int up_factor, Interpolator interp,
                      const SlerpOptions& options = {});

/// transform_image with m = from_command(cmd).
Image transform_image(const Image& img, const UserCommand& cmd, int up_factor, Interpolator interp,
                      const SlerpOptions& options = {});

} // namespace omnivr

#pragma once

#include <cstddef>

#include "omnivr/image.hpp"
#include "omnivr/resample.hpp"
#include "omnivr/sphere_geometry.hpp"

namespace omnivr {

// Pinhole camera looking at (yaw, pitch). Image x grows with longitude and
// image y grows downward, so views are not mirrored relative to the ERP
// raster. Roll is always zero.
struct PerspectiveCamera {
    double yaw = 0.0;
    double pitch = 0.0;
    double fov_h = kHalfPi;
    std::size_t out_w = 512;
    std::size_t out_h = 512;

    double focal_length() const;
    double fov_v() const;

    /// Throws ConfigError on |pitch| > pi/2 - 1e-6, fov outside
    /// (0.01, pi - 0.01) or an empty raster.
    void validate() const;
};

/// Direction of the ray through pixel (row, col). Pixel (out_h/2, out_w/2) is
/// the optical axis; pixel (0, 0) is the image corner.
SpherePoint view_ray(const PerspectiveCamera& cam, double row, double col);

/// Per-pixel spherical coordinates seen by the camera.
IndexMap build_view_index_map(const PerspectiveCamera& cam);

/// Rectilinear view of an equirectangular image.
Image render_perspective(const Image& img, const PerspectiveCamera& cam, Interpolator interp);

/// Rectilinear view of img magnified by `zoom` about the view center. The
/// view rays are pulled through from_zoom_at(center, zoom) and sampled in a
/// single resampling pass; zoom = 1 is exactly render_perspective.
Image render_view(const Image& img, const PerspectiveCamera& cam, double zoom, Interpolator interp);

} // namespace omnivr

#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace omnivr {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Longitude theta in [-pi, pi), latitude phi in [-pi/2, pi/2].
struct SphericalCoord {
    double theta = 0.0;
    double phi = 0.0;
};

// Point on the unit (Riemann) sphere.
struct SpherePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

// x' + i y' on the extended complex plane. When at_infinity is set the
// components carry no meaning.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;
    bool at_infinity = false;

    static constexpr ComplexPoint infinity() { return {0.0, 0.0, true}; }
};

// Continuous raster position; row 0 is the top (north) row, pixel centers
// sit at integer coordinates.
struct PixelCoord {
    double row = 0.0;
    double col = 0.0;
};

// H x W grid of spherical coordinates, row-major.
class IndexMap {
public:
    IndexMap() = default;
    IndexMap(std::size_t height, std::size_t width);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t size() const { return grid_.size(); }

    SphericalCoord& at(std::size_t row, std::size_t col) { return grid_[row * width_ + col]; }
    const SphericalCoord& at(std::size_t row, std::size_t col) const { return grid_[row * width_ + col]; }

    std::span<SphericalCoord> row(std::size_t r) { return {grid_.data() + r * width_, width_}; }
    std::span<const SphericalCoord> row(std::size_t r) const { return {grid_.data() + r * width_, width_}; }

    std::span<SphericalCoord> entries() { return grid_; }
    std::span<const SphericalCoord> entries() const { return grid_; }

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<SphericalCoord> grid_;
};

/// Wraps a longitude into [-pi, pi).
double wrap_longitude(double theta);

/// (cos phi cos theta, cos phi sin theta, sin phi).
SpherePoint spherical_to_cartesian(SphericalCoord c);

/// Inverse of spherical_to_cartesian using the full-quadrant arctangent.
/// Longitude is reported as 0 on the polar axis. Throws InvalidInput when
/// |p| deviates from 1 by more than 1e-6.
SphericalCoord cartesian_to_spherical(SpherePoint p);

/// Stereographic projection from the north pole (0, 0, 1) onto the plane
/// z = 0. The pole itself maps to the point at infinity.
ComplexPoint stereographic_project(SpherePoint p);

/// Inverse stereographic projection; infinity maps back to the north pole.
SpherePoint stereographic_unproject(ComplexPoint c);

/// Pixel-center grid of an H x W equirectangular raster (north at row 0,
/// theta = -pi at the left edge). Requires W = 2H and H >= 2.
IndexMap erp_grid(std::size_t height, std::size_t width);

/// Continuous inverse of erp_grid. The column is not wrapped.
PixelCoord spherical_to_pixel(SphericalCoord c, std::size_t height, std::size_t width);

/// Great-circle angle between two unit vectors (atan2 form, accurate for
/// both tiny and near-pi angles).
double angle_between(const SpherePoint& a, const SpherePoint& b);

/// Throws DimensionError unless width == 2 * height and height >= 2.
void require_erp_shape(std::size_t height, std::size_t width, const char* what);

} // namespace omnivr

#include "omnivr/sphere_geometry.hpp"

#include <cmath>
#include <string>

#include "omnivr/errors.hpp"

namespace omnivr {

double SpherePoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

IndexMap::IndexMap(std::size_t height, std::size_t width)
    : height_(height), width_(width), grid_(height * width)
{
}

double wrap_longitude(double theta)
{
    if (theta >= -kPi && theta < kPi)
        return theta;
    double t = std::fmod(theta + kPi, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    t -= kPi;
    // fmod + subtraction can land exactly on pi through rounding.
    return t >= kPi ? -kPi : t;
}

SpherePoint spherical_to_cartesian(SphericalCoord c)
{
    const double cp = std::cos(c.phi);
    return {cp * std::cos(c.theta), cp * std::sin(c.theta), std::sin(c.phi)};
}

SphericalCoord cartesian_to_spherical(SpherePoint p)
{
    const double n = p.norm();
    if (!(std::abs(n - 1.0) <= 1e-6))
        throw InvalidInput("cartesian_to_spherical: point is not on the unit sphere (norm " + std::to_string(n) +
                           ")");
    const double r = std::hypot(p.x, p.y);
    // atan2 of the horizontal radius is better conditioned than asin(z) near
    // the poles and equal to it on the unit sphere.
    const double phi = std::atan2(p.z, r);
    const double theta = r == 0.0 ? 0.0 : wrap_longitude(std::atan2(p.y, p.x));
    return {theta, phi};
}

ComplexPoint stereographic_project(SpherePoint p)
{
    const double denom = 1.0 - p.z;
    if (denom <= 0.0)
        return ComplexPoint::infinity();
    return {p.x / denom, p.y / denom, false};
}

SpherePoint stereographic_unproject(ComplexPoint c)
{
    if (c.at_infinity)
        return {0.0, 0.0, 1.0};
    const double r2 = c.re * c.re + c.im * c.im;
    if (!(r2 < 1e200))
        return {0.0, 0.0, 1.0};
    const double s = 1.0 + r2;
    return {(2.0 * c.re) / s, (2.0 * c.im) / s, (r2 - 1.0) / s};
}

void require_erp_shape(std::size_t height, std::size_t width, const char* what)
{
    if (height < 2 || width != 2 * height)
        throw DimensionError(std::string(what) + ": equirectangular raster must satisfy W = 2H and H >= 2 (got " +
                             std::to_string(height) + "x" + std::to_string(width) + ")");
}

IndexMap erp_grid(std::size_t height, std::size_t width)
{
    require_erp_shape(height, width, "erp_grid");
    IndexMap map(height, width);
    const double h = static_cast<double>(height);
    const double w = static_cast<double>(width);
    for (std::size_t i = 0; i < height; ++i) {
        const double phi = kHalfPi - kPi * (static_cast<double>(i) + 0.5) / h;
        auto row = map.row(i);
        for (std::size_t j = 0; j < width; ++j)
            row[j] = {kTwoPi * (static_cast<double>(j) + 0.5) / w - kPi, phi};
    }
    return map;
}

PixelCoord spherical_to_pixel(SphericalCoord c, std::size_t height, std::size_t width)
{
    const double h = static_cast<double>(height);
    const double w = static_cast<double>(width);
    return {(kHalfPi - c.phi) * h / kPi - 0.5, (c.theta + kPi) * w / kTwoPi - 0.5};
}

double angle_between(const SpherePoint& a, const SpherePoint& b)
{
    const double cx = a.y * b.z - a.z * b.y;
    const double cy = a.z * b.x - a.x * b.z;
    const double cz = a.x * b.y - a.y * b.x;
    const double dot = a.x * b.x + a.y * b.y + a.z * b.z;
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

} // namespace omnivr

#include "omnivr/projection.hpp"

#include <cmath>
#include <string>

#include "omnivr/errors.hpp"
#include "omnivr/mobius.hpp"
#include "omnivr/parallel.hpp"

namespace omnivr {

double PerspectiveCamera::focal_length() const { return 0.5 * static_cast<double>(out_w) / std::tan(0.5 * fov_h); }

double PerspectiveCamera::fov_v() const
{
    return 2.0 * std::atan(static_cast<double>(out_h) / static_cast<double>(out_w) * std::tan(0.5 * fov_h));
}

void PerspectiveCamera::validate() const
{
    if (!std::isfinite(yaw) || !std::isfinite(pitch) || std::abs(pitch) > kHalfPi - 1e-6)
        throw ConfigError("camera pitch must satisfy |pitch| <= pi/2 - 1e-6 (got " + std::to_string(pitch) + ")");
    if (!(fov_h > 0.01 && fov_h < kPi - 0.01))
        throw ConfigError("camera fov must lie in (0.01, pi - 0.01) (got " + std::to_string(fov_h) + ")");
    if (out_w == 0 || out_h == 0)
        throw ConfigError("camera raster must be non-empty");
}

SpherePoint view_ray(const PerspectiveCamera& cam, double row, double col)
{
    const double cy = std::cos(cam.yaw), sy = std::sin(cam.yaw);
    const double cp = std::cos(cam.pitch), sp = std::sin(cam.pitch);
    // forward, right (increasing longitude) and up (increasing latitude)
    const SpherePoint fwd{cp * cy, cp * sy, sp};
    const SpherePoint right{-sy, cy, 0.0};
    const SpherePoint up{-sp * cy, -sp * sy, cp};

    const double f = cam.focal_length();
    const double x = col - 0.5 * static_cast<double>(cam.out_w);
    const double y = row - 0.5 * static_cast<double>(cam.out_h);
    const SpherePoint d{f * fwd.x + x * right.x - y * up.x, f * fwd.y + x * right.y - y * up.y,
                        f * fwd.z + x * right.z - y * up.z};
    const double n = d.norm();
    return {d.x / n, d.y / n, d.z / n};
}

IndexMap build_view_index_map(const PerspectiveCamera& cam)
{
    cam.validate();
    IndexMap map(cam.out_h, cam.out_w);
    parallel_for(cam.out_h, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto row = map.row(i);
            for (std::size_t j = 0; j < cam.out_w; ++j) {
                // The optical axis is exact rather than a normalized multiple of it.
                if (2 * i == cam.out_h && 2 * j == cam.out_w) {
                    row[j] = {wrap_longitude(cam.yaw), cam.pitch};
                    continue;
                }
                const SpherePoint d = view_ray(cam, static_cast<double>(i), static_cast<double>(j));
                const double r = std::hypot(d.x, d.y);
                row[j] = {r == 0.0 ? 0.0 : wrap_longitude(std::atan2(d.y, d.x)), std::atan2(d.z, r)};
            }
        }
    });
    return map;
}

Image render_perspective(const Image& img, const PerspectiveCamera& cam, Interpolator interp)
{
    require_erp(img, "render_perspective");
    return resample(img, build_view_index_map(cam), interp);
}

Image render_view(const Image& img, const PerspectiveCamera& cam, double zoom, Interpolator interp)
{
    if (!(zoom > 0.0) || !std::isfinite(zoom))
        throw InvalidCommand("invalid command: zoom level must satisfy s > 0 (got " + std::to_string(zoom) + ")");
    if (zoom == 1.0)
        return render_perspective(img, cam, interp);
    require_erp(img, "render_view");
    // from_zoom_at contracts the neighbourhood of the center by 1/zoom, so
    // pulling the view rays through it magnifies the content there by zoom.
    const MobiusMatrix m = from_zoom_at({cam.yaw, cam.pitch}, zoom);
    return resample(img, transform_index_map(build_view_index_map(cam), m), interp);
}

} // namespace omnivr

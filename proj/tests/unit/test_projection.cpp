#include <doctest.h>

#include <cmath>
#include <vector>

#include "omnivr/errors.hpp"
#include "omnivr/pipeline.hpp"
#include "omnivr/projection.hpp"
#include "test_support.hpp"

using namespace omnivr;
using namespace omnivr::testing;

namespace {

double plain_psnr(const Image& a, const Image& b)
{
    double se = 0.0;
    for (std::size_t k = 0; k < a.samples().size(); ++k) {
        const double d = a.samples()[k] - b.samples()[k];
        se += d * d;
    }
    return 10.0 * std::log10(static_cast<double>(a.samples().size()) / se);
}

} // namespace

TEST_CASE("center entry looks along yaw and pitch")
{
    for (double yaw : {-3.0, 0.0, 1.2, 3.1})
        for (double pitch : {-1.2, 0.0, 0.5}) {
            const PerspectiveCamera cam{yaw, pitch, 1.2, 64, 48};
            const auto map = build_view_index_map(cam);
            CHECK(map.at(24, 32).theta == doctest::Approx(wrap_longitude(yaw)).epsilon(1e-15));
            CHECK(map.at(24, 32).phi == pitch);
        }
}

TEST_CASE("center pixel samples the ERP at the view direction")
{
    const Image src = smooth_image(64, 128);
    const PerspectiveCamera cam{0.0, 0.0, kHalfPi, 32, 32};
    const Image view = render_perspective(src, cam, Interpolator::slerp);
    // Query (theta=0, phi=0) sits on the corner shared by pixels (31,63),(31,64),(32,63),(32,64).
    const Image at = resample(src, [] {
        IndexMap m(1, 1);
        m.at(0, 0) = {0.0, 0.0};
        return m;
    }(), Interpolator::slerp);
    for (std::size_t c = 0; c < 3; ++c)
        CHECK(view(16, 16, c) == at(0, 0, c));
}

TEST_CASE("corner ray angle and implied vertical fov")
{
    const PerspectiveCamera cam{0.4, 0.2, kHalfPi, 512, 512};
    const auto axis = spherical_to_cartesian({0.4, 0.2});
    CHECK(angle_between(view_ray(cam, 0, 0), axis) == doctest::Approx(std::atan(std::sqrt(2.0))).epsilon(1e-12));

    const PerspectiveCamera wide{-1.0, 0.3, 1.7, 400, 240};
    const double fov_v = wide.fov_v();
    CHECK(fov_v == doctest::Approx(2.0 * std::atan(0.6 * std::tan(0.85))).epsilon(1e-15));
    const double top = angle_between(view_ray(wide, 0, 200), spherical_to_cartesian({-1.0, 0.3}));
    CHECK(std::abs(top - 0.5 * fov_v) < 1e-9);
    const double left = angle_between(view_ray(wide, 120, 0), spherical_to_cartesian({-1.0, 0.3}));
    CHECK(std::abs(left - 0.85) < 1e-9);
}

TEST_CASE("narrow beams converge on the view direction")
{
    const PerspectiveCamera cam{2.0, -0.7, 0.02, 16, 16};
    const auto map = build_view_index_map(cam);
    const auto axis = spherical_to_cartesian({2.0, -0.7});
    for (const auto& e : map.entries())
        CHECK(angle_between(spherical_to_cartesian(e), axis) <= 0.5 * std::hypot(0.02, 0.02) + 1e-12);
}

TEST_CASE("constant panoramas give constant views")
{
    const Image flat(32, 64, 3, 0.42);
    for (auto interp : {Interpolator::slerp, Interpolator::bicubic, Interpolator::nearest}) {
        const Image view = render_view(flat, {0.3, 0.9, 1.4, 40, 30}, 1.8, interp);
        CHECK(view.height() == 30);
        CHECK(view.width() == 40);
        CHECK(max_abs_diff(view, Image(30, 40, 3, 0.42)) < 1e-9);
    }
}

TEST_CASE("yaw offsets match longitude rotations")
{
    const Image src = smooth_image(128, 256);
    const double delta = 0.37;
    const Image rotated = transform_image(src, UserCommand{delta, 0, 1}, 1, Interpolator::slerp);
    const Image a = render_perspective(rotated, {1.0, 0.2, 1.3, 96, 64}, Interpolator::slerp);
    const Image b = render_perspective(src, {1.0 - delta, 0.2, 1.3, 96, 64}, Interpolator::slerp);
    CHECK(plain_psnr(a, b) >= 35.0);
}

TEST_CASE("great circles render as straight lines")
{
    // Value encodes the signed distance to a tilted great circle through the view center.
    const std::size_t h = 512, w = 1024;
    const SphericalCoord center{0.6, 0.25};
    const SpherePoint c = spherical_to_cartesian(center);
    const SpherePoint t{0.3, -0.8, 0.5};
    SpherePoint n{c.y * t.z - c.z * t.y, c.z * t.x - c.x * t.z, c.x * t.y - c.y * t.x};
    const double nn = n.norm();
    n = {n.x / nn, n.y / nn, n.z / nn};
    Image src(h, w, 1);
    const auto g = erp_grid(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            const SpherePoint p = spherical_to_cartesian(g.at(i, j));
            src(i, j, 0) = 0.5 + 0.5 * (n.x * p.x + n.y * p.y + n.z * p.z);
        }
    const PerspectiveCamera cam{center.theta, center.phi, 1.4, 200, 200};
    const Image view = render_perspective(src, cam, Interpolator::bicubic);

    // Zero crossing along each column (or row, whichever the line is more orthogonal to).
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < cam.out_w; ++j)
        for (std::size_t i = 0; i + 1 < cam.out_h; ++i) {
            const double v0 = view(i, j, 0) - 0.5, v1 = view(i + 1, j, 0) - 0.5;
            if ((v0 <= 0.0) != (v1 <= 0.0)) {
                xs.push_back(static_cast<double>(j));
                ys.push_back(static_cast<double>(i) + v0 / (v0 - v1));
            }
        }
    REQUIRE(xs.size() > 100);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    const double m = static_cast<double>(xs.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / m;
    double worst = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
        worst = std::max(worst, std::abs(ys[k] - (slope * xs[k] + icpt)) / std::sqrt(1 + slope * slope));
    CHECK(worst < 0.5);
}

TEST_CASE("zoom magnifies the view center")
{
    const Image src = smooth_image(128, 256);
    const PerspectiveCamera cam{0.5, 0.1, 1.2, 64, 64};
    const PerspectiveCamera narrow{0.5, 0.1, 2.0 * std::atan(std::tan(0.6) / 2.0), 64, 64};
    const Image zoomed = render_view(src, cam, 2.0, Interpolator::slerp);
    const Image tight = render_perspective(src, narrow, Interpolator::slerp);
    // Doubling the Möbius zoom acts like halving tan(fov/2) near the center.
    for (std::size_t i = 28; i <= 36; ++i)
        for (std::size_t j = 28; j <= 36; ++j)
            CHECK(std::abs(zoomed(i, j, 0) - tight(i, j, 0)) < 2e-3);
    CHECK(render_view(src, cam, 1.0, Interpolator::slerp) == render_perspective(src, cam, Interpolator::slerp));
}

TEST_CASE("camera validation")
{
    CHECK_THROWS_AS(PerspectiveCamera({0, kHalfPi, 1.0, 8, 8}).validate(), ConfigError);
    CHECK_THROWS_AS(PerspectiveCamera({0, 0, kPi, 8, 8}).validate(), ConfigError);
    CHECK_THROWS_AS(PerspectiveCamera({0, 0, 1.0, 0, 8}).validate(), ConfigError);
    CHECK_THROWS_AS(render_view(Image(8, 16, 1), {}, 0.0, Interpolator::slerp), InvalidCommand);
}

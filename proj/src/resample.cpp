#include "omnivr/resample.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "omnivr/errors.hpp"
#include "omnivr/parallel.hpp"

namespace omnivr {

namespace {

double snap(double v)
{
    const double r = std::nearbyint(v);
    return std::abs(v - r) < kSnapTolerance ? r : v;
}

// Latitude of an extended row index; rows -1 and H lie beyond the poles.
double row_latitude(long row, std::size_t height)
{
    return kHalfPi - kPi * (static_cast<double>(row) + 0.5) / static_cast<double>(height);
}

double col_longitude(double col, std::size_t width)
{
    return kTwoPi * (col + 0.5) / static_cast<double>(width) - kPi;
}

// out = w0 * a + w1 * b per channel; a zero weight selects the other input
// verbatim so grid-aligned queries reproduce samples bit for bit.
void blend(const double* a, const double* b, StageWeights w, std::size_t channels, double* out)
{
    if (w.w1 == 0.0) {
        for (std::size_t c = 0; c < channels; ++c)
            out[c] = a[c];
    } else if (w.w0 == 0.0) {
        for (std::size_t c = 0; c < channels; ++c)
            out[c] = b[c];
    } else {
        for (std::size_t c = 0; c < channels; ++c)
            out[c] = w.w0 * a[c] + w.w1 * b[c];
    }
}

// Point of the great circle through a and b that lies on the meridian plane
// of longitude theta, on the a-b side. Returns its arc offset from a and its
// latitude measured along that meridian (beyond +-pi/2 across a pole).
struct MeridianHit {
    double offset = 0.0;
    double latitude = 0.0;
};

MeridianHit meridian_crossing(const SpherePoint& a, const SpherePoint& b, double theta)
{
    const SpherePoint n{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    // n x (-sin theta, cos theta, 0)
    SpherePoint d{-n.z * ct, -n.z * st, n.x * ct + n.y * st};
    const double side = d.x * (a.x + b.x) + d.y * (a.y + b.y) + d.z * (a.z + b.z);
    if (side < 0.0)
        d = {-d.x, -d.y, -d.z};
    const double len = d.norm();
    d = {d.x / len, d.y / len, d.z / len};
    return {angle_between(a, d), std::atan2(d.z, d.x * ct + d.y * st)};
}

template <class Body>
Image resample_rows(const Image& src, const IndexMap& queries, Body&& body)
{
    require_erp(src, "resample source");
    Image out(queries.height(), queries.width(), src.channels());
    parallel_for(queries.height(), [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t r = row_begin; r < row_end; ++r) {
            const auto qs = queries.row(r);
            for (std::size_t j = 0; j < qs.size(); ++j)
                body(qs[j], out.pixel(r, j));
        }
    });
    return out;
}

} // namespace

std::optional<Interpolator> parse_interpolator(std::string_view name)
{
    if (name == "slerp")
        return Interpolator::slerp;
    if (name == "bicubic")
        return Interpolator::bicubic;
    if (name == "nearest")
        return Interpolator::nearest;
    return std::nullopt;
}

std::string_view to_string(Interpolator interp)
{
    switch (interp) {
    case Interpolator::slerp:
        return "slerp";
    case Interpolator::bicubic:
        return "bicubic";
    case Interpolator::nearest:
        return "nearest";
    }
    return "unknown";
}

PixelIndex resolve_pixel(long row, long col, std::size_t height, std::size_t width)
{
    const long h = static_cast<long>(height);
    const long w = static_cast<long>(width);
    if (row < 0) {
        row = -1 - row;
        col += w / 2;
    } else if (row >= h) {
        row = 2 * h - 1 - row;
        col += w / 2;
    }
    col %= w;
    if (col < 0)
        col += w;
    return {static_cast<std::size_t>(row), static_cast<std::size_t>(col)};
}

NeighborQuad neighbor_quad(SphericalCoord q, std::size_t height, std::size_t width)
{
    const PixelCoord pc = spherical_to_pixel(q, height, width);
    const double w = static_cast<double>(width);
    const double h = static_cast<double>(height);

    double row = snap(pc.row);
    if (row < -0.5)
        row = -0.5;
    if (row > h - 0.5)
        row = h - 0.5;
    double col = snap(pc.col);
    col -= w * std::floor(col / w);
    if (col >= w)
        col -= w;

    NeighborQuad quad;
    quad.top_row = static_cast<long>(std::floor(row));
    quad.left_col = static_cast<long>(std::floor(col));
    quad.row_frac = row - static_cast<double>(quad.top_row);
    quad.col_frac = col - static_cast<double>(quad.left_col);
    const long t = quad.top_row;
    const long l = quad.left_col;
    quad.p[0] = resolve_pixel(t, l, height, width);
    quad.p[1] = resolve_pixel(t, l + 1, height, width);
    quad.p[2] = resolve_pixel(t + 1, l + 1, height, width);
    quad.p[3] = resolve_pixel(t + 1, l, height, width);
    return quad;
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t)
{
    const double angle = angle_between(a, b);
    if (angle > kPi - 1e-6)
        throw DegenerateGeodesic("slerp: endpoints are antipodal, the geodesic is not unique");
    const StageWeights w = slerp_stage_weights(t, angle, false);
    return {w.w0 * a.x + w.w1 * b.x, w.w0 * a.y + w.w1 * b.y, w.w0 * a.z + w.w1 * b.z};
}

StageWeights slerp_stage_weights(double t, double angle, bool normalize)
{
    if (t == 0.0)
        return {1.0, 0.0};
    if (t == 1.0)
        return {0.0, 1.0};
    if (angle < 1e-8)
        return {1.0 - t, t};
    const double s = std::sin(angle);
    double w0 = std::sin((1.0 - t) * angle) / s;
    double w1 = std::sin(t * angle) / s;
    if (normalize) {
        const double sum = w0 + w1;
        w0 /= sum;
        w1 /= sum;
    }
    return {w0, w1};
}

double catmull_rom(double x)
{
    constexpr double a = -0.5;
    x = std::abs(x);
    if (x < 1.0)
        return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    if (x < 2.0)
        return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
    return 0.0;
}

Image spherical_resample(const Image& src, const IndexMap& queries, const SlerpOptions& options)
{
    require_erp(src, "spherical_resample");
    const std::size_t height = src.height();
    const std::size_t width = src.width();
    const std::size_t channels = src.channels();
    const double step = kTwoPi / static_cast<double>(width);
    const double omega = kPi / static_cast<double>(height);

    // Angle between horizontally adjacent pixel centers, per extended row.
    std::vector<double> row_angle(height + 2);
    for (long r = -1; r <= static_cast<long>(height); ++r)
        row_angle[static_cast<std::size_t>(r + 1)] =
            2.0 * std::asin(std::abs(std::cos(row_latitude(r, height))) * std::sin(0.5 * step));

    const bool exact = options.weights == SlerpWeights::exact;
    const bool norm = options.normalize;

    return resample_rows(src, queries, [&](const SphericalCoord& q, double* out) {
        const NeighborQuad quad = neighbor_quad(q, height, width);
        const double* f0 = src.pixel(quad.p[0].row, quad.p[0].col);
        const double* f1 = src.pixel(quad.p[1].row, quad.p[1].col);
        const double* f2 = src.pixel(quad.p[2].row, quad.p[2].col);
        const double* f3 = src.pixel(quad.p[3].row, quad.p[3].col);
        const double alpha01 = row_angle[static_cast<std::size_t>(quad.top_row + 1)];
        const double alpha23 = row_angle[static_cast<std::size_t>(quad.top_row + 2)];

        double t01 = quad.col_frac;
        double t23 = 1.0 - quad.col_frac;
        double tq = quad.row_frac;
        double big_omega = omega;

        if (exact && quad.col_frac != 0.0) {
            const double phi_top = row_latitude(quad.top_row, height);
            const double phi_bot = row_latitude(quad.top_row + 1, height);
            const double theta_l = col_longitude(static_cast<double>(quad.left_col), width);
            const double theta_r = theta_l + step;
            const double theta_q = col_longitude(static_cast<double>(quad.left_col) + quad.col_frac, width);
            const SpherePoint p0 = spherical_to_cartesian({theta_l, phi_top});
            const SpherePoint p1 = spherical_to_cartesian({theta_r, phi_top});
            const SpherePoint p2 = spherical_to_cartesian({theta_r, phi_bot});
            const SpherePoint p3 = spherical_to_cartesian({theta_l, phi_bot});
            const MeridianHit h01 = meridian_crossing(p0, p1, theta_q);
            const MeridianHit h23 = meridian_crossing(p2, p3, theta_q);
            t01 = alpha01 > 0.0 ? h01.offset / alpha01 : quad.col_frac;
            t23 = alpha23 > 0.0 ? h23.offset / alpha23 : 1.0 - quad.col_frac;
            const double phi_q = row_latitude(quad.top_row, height) - quad.row_frac * omega;
            big_omega = std::abs(h23.latitude - h01.latitude);
            tq = (h01.latitude - phi_q) / (h01.latitude - h23.latitude);
        }

        double v01[16], v23[16];
        std::vector<double> heap01, heap23;
        double* a = v01;
        double* b = v23;
        if (channels > 16) {
            heap01.resize(channels);
            heap23.resize(channels);
            a = heap01.data();
            b = heap23.data();
        }
        blend(f0, f1, slerp_stage_weights(t01, alpha01, norm), channels, a);
        blend(f2, f3, slerp_stage_weights(t23, alpha23, norm), channels, b);
        blend(a, b, slerp_stage_weights(tq, big_omega, norm), channels, out);
    });
}

Image bicubic_resample(const Image& src, const IndexMap& queries)
{
    require_erp(src, "bicubic_resample");
    const std::size_t height = src.height();
    const std::size_t width = src.width();
    const std::size_t channels = src.channels();

    return resample_rows(src, queries, [&](const SphericalCoord& q, double* out) {
        const NeighborQuad quad = neighbor_quad(q, height, width);
        double wr[4], wc[4];
        for (int k = 0; k < 4; ++k) {
            wr[k] = catmull_rom(quad.row_frac + 1.0 - k);
            wc[k] = catmull_rom(quad.col_frac + 1.0 - k);
        }
        for (std::size_t c = 0; c < channels; ++c)
            out[c] = 0.0;
        for (int kr = 0; kr < 4; ++kr) {
            if (wr[kr] == 0.0)
                continue;
            for (int kc = 0; kc < 4; ++kc) {
                if (wc[kc] == 0.0)
                    continue;
                const PixelIndex p = resolve_pixel(quad.top_row - 1 + kr, quad.left_col - 1 + kc, height, width);
                const double* f = src.pixel(p.row, p.col);
                const double weight = wr[kr] * wc[kc];
                for (std::size_t c = 0; c < channels; ++c)
                    out[c] += weight * f[c];
            }
        }
    });
}

Image nearest_resample(const Image& src, const IndexMap& queries)
{
    require_erp(src, "nearest_resample");
    const std::size_t height = src.height();
    const std::size_t width = src.width();
    const std::size_t channels = src.channels();

    return resample_rows(src, queries, [&](const SphericalCoord& q, double* out) {
        const NeighborQuad quad = neighbor_quad(q, height, width);
        const SpherePoint qp = spherical_to_cartesian(q);
        const long rows[4] = {quad.top_row, quad.top_row, quad.top_row + 1, quad.top_row + 1};
        const long cols[4] = {quad.left_col, quad.left_col + 1, quad.left_col + 1, quad.left_col};
        std::size_t best = 0;
        double best_d2 = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            const SpherePoint p = spherical_to_cartesian(
                {col_longitude(static_cast<double>(cols[k]), width), row_latitude(rows[k], height)});
            const double dx = p.x - qp.x;
            const double dy = p.y - qp.y;
            const double dz = p.z - qp.z;
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (k == 0 || d2 < best_d2) {
                best = k;
                best_d2 = d2;
            }
        }
        // Grid-aligned queries read p0 regardless of rounding in the chord test.
        if (quad.row_frac == 0.0 && quad.col_frac == 0.0)
            best = 0;
        const double* f = src.pixel(quad.p[best].row, quad.p[best].col);
        for (std::size_t c = 0; c < channels; ++c)
            out[c] = f[c];
    });
}

Image resample(const Image& src, const IndexMap& queries, Interpolator interp, const SlerpOptions& options)
{
    switch (interp) {
    case Interpolator::slerp:
        return spherical_resample(src, queries, options);
    case Interpolator::bicubic:
        return bicubic_resample(src, queries);
    case Interpolator::nearest:
        return nearest_resample(src, queries);
    }
    throw ConfigError("unknown interpolator");
}

} // namespace omnivr

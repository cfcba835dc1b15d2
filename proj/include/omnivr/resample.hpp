#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "omnivr/image.hpp"
#include "omnivr/sphere_geometry.hpp"

namespace omnivr {

enum class Interpolator { slerp, bicubic, nearest };

std::optional<Interpolator> parse_interpolator(std::string_view name);
std::string_view to_string(Interpolator interp);

// How the first-stage weight t01 (and t23) is found.
enum class SlerpWeights {
    simplified,  // t01 = (theta_q - theta_0) / (theta_1 - theta_0)
    exact,       // p01 is the point of arc p0 p1 on q's meridian
};

struct SlerpOptions {
    SlerpWeights weights = SlerpWeights::simplified;
    // Divide each stage's sine weights by their sum so the stage is a convex
    // combination. Raw sine weights sum to slightly more than one.
    bool normalize = true;
};

// Grid pixel index after seam wrap and pole reflection.
struct PixelIndex {
    std::size_t row = 0;
    std::size_t col = 0;
};

// Corner pixels around a query: p0 top-left, p1 top-right, p2 bottom-right,
// p3 bottom-left, so theta0 = theta3, theta1 = theta2, phi0 = phi1, phi2 = phi3
// on the unwrapped grid.
struct NeighborQuad {
    std::array<PixelIndex, 4> p;
    long top_row = 0;     // unreflected row of p0/p1, in [-1, H-1]
    long left_col = 0;    // unwrapped column of p0/p3
    double row_frac = 0;  // position of q between the two rows, [0, 1)
    double col_frac = 0;  // position of q between the two columns, [0, 1)
};

/// Queries closer than this (in pixels) to a grid line are snapped onto it.
inline constexpr double kSnapTolerance = 1e-7;

/// Corner pixels of the query on an H x W equirectangular grid. Columns wrap
/// modulo W; rows above the top or below the bottom pixel center are
/// reflected across the pole (row -1 -> row 0 shifted by W/2 columns).
NeighborQuad neighbor_quad(SphericalCoord q, std::size_t height, std::size_t width);

/// Resolves an unwrapped (row, col) on the extended grid to a stored pixel.
PixelIndex resolve_pixel(long row, long col, std::size_t height, std::size_t width);

/// Spherical linear interpolation, constant speed along the geodesic.
/// Throws DegenerateGeodesic when a and b are (nearly) antipodal.
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t);

// Weights of the two endpoints of one slerp stage.
struct StageWeights {
    double w0 = 1.0;
    double w1 = 0.0;
};

/// sin((1-t) a)/sin a and sin(t a)/sin a, with the linear small-angle limit
/// below 1e-8 rad and exact 0/1 weights at t = 0 and t = 1.
StageWeights slerp_stage_weights(double t, double angle, bool normalize);

/// Two-stage slerp resampling: along rows to q's meridian, then along it.
Image spherical_resample(const Image& src, const IndexMap& queries, const SlerpOptions& options = {});

/// Catmull-Rom (a = -0.5) over a 4 x 4 neighbourhood in pixel space.
Image bicubic_resample(const Image& src, const IndexMap& queries);

/// Value of the corner pixel with the smallest great-circle distance.
Image nearest_resample(const Image& src, const IndexMap& queries);

Image resample(const Image& src, const IndexMap& queries, Interpolator interp, const SlerpOptions& options = {});

/// Catmull-Rom kernel value at x.
double catmull_rom(double x);

} // namespace omnivr

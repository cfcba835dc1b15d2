#pragma once

#include <complex>

#include "omnivr/sphere_geometry.hpp"

namespace omnivr {

using Complex = std::complex<double>;

// f(z) = (a z + b) / (c z + d) with ad - bc != 0. Kept unnormalized: two
// matrices describe the same map when they differ by a complex factor.
struct MobiusMatrix {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    Complex determinant() const { return a * d - b * c; }
    bool is_valid() const;

    static MobiusMatrix identity() { return {}; }
};

// Horizontal rotation beta, vertical rotation gamma (radians) and zoom level s.
struct UserCommand {
    double beta = 0.0;
    double gamma = 0.0;
    double zoom = 1.0;

    /// Throws InvalidCommand when zoom <= 0 or an angle is not finite.
    void validate() const;
};

inline constexpr double kMinDeterminant = 1e-12;
inline constexpr double kSingularDenominator = 1e-12;

/// Longitude rotation by beta: a = e^{i beta}.
MobiusMatrix from_horizontal_rotation(double beta);

/// Rotation about the y axis; raises latitude by gamma along the theta = 0
/// meridian.
MobiusMatrix from_vertical_rotation(double gamma);

/// z -> s z. Expands the neighbourhood of the south pole (z = 0) by s and
/// contracts the north pole by 1/s. Throws InvalidCommand for s <= 0.
MobiusMatrix from_zoom(double s);

/// Matrix product m1 * m2, i.e. apply m2 first.
MobiusMatrix compose(const MobiusMatrix& m1, const MobiusMatrix& m2);

/// Adjugate (d, -b, -c, a); the inverse map up to the factor 1/det.
MobiusMatrix inverse(const MobiusMatrix& m);

/// Horizontal rotation, then vertical rotation, then zoom.
MobiusMatrix from_command(const UserCommand& cmd);

/// The rotation (horizontal then vertical) carrying `center` to the north pole.
MobiusMatrix rotation_to_north_pole(SphericalCoord center);

/// R^-1 * from_zoom(s) * R with R = rotation_to_north_pole(center); `center`
/// is a fixed point of the resulting map.
MobiusMatrix from_zoom_at(SphericalCoord center, double s);

/// Evaluates the map on the extended complex plane.
ComplexPoint apply(const MobiusMatrix& m, ComplexPoint z);

/// Pushes a sphere point through stereographic projection, the map, and back.
SpherePoint apply_on_sphere(const MobiusMatrix& m, const SpherePoint& p);

/// Every entry goes sphere -> plane -> f -> plane -> sphere; output longitudes
/// are wrapped into [-pi, pi).
IndexMap transform_index_map(const IndexMap& map, const MobiusMatrix& m);

/// True when m1 = lambda * m2 for some complex lambda, compared after scaling
/// both to unit Frobenius norm and aligning phase.
bool equal_up_to_scale(const MobiusMatrix& m1, const MobiusMatrix& m2, double tol = 1e-9);

} // namespace omnivr

#include "omnivr/mobius.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "omnivr/errors.hpp"
#include "omnivr/parallel.hpp"
#include "omnivr/simd/kernels.hpp"
#include "simd/mobius_point.hpp"

namespace omnivr {

namespace {

simd::MobiusCoeffs coeffs_of(const MobiusMatrix& m)
{
    return {m.a.real(), m.a.imag(), m.b.real(), m.b.imag(), m.c.real(), m.c.imag(), m.d.real(), m.d.imag()};
}

double frobenius(const MobiusMatrix& m) { return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d)); }

} // namespace

bool MobiusMatrix::is_valid() const
{
    const bool finite = std::isfinite(a.real()) && std::isfinite(a.imag()) && std::isfinite(b.real()) &&
                        std::isfinite(b.imag()) && std::isfinite(c.real()) && std::isfinite(c.imag()) &&
                        std::isfinite(d.real()) && std::isfinite(d.imag());
    return finite && std::abs(determinant()) > kMinDeterminant;
}

void UserCommand::validate() const
{
    if (!std::isfinite(beta) || !std::isfinite(gamma))
        throw InvalidCommand("invalid command: rotation angles must be finite");
    if (!(zoom > 0.0) || !std::isfinite(zoom))
        throw InvalidCommand("invalid command: zoom level must satisfy s > 0 (got " + std::to_string(zoom) + ")");
}

MobiusMatrix from_horizontal_rotation(double beta)
{
    return {Complex(std::cos(beta), std::sin(beta)), Complex(0.0), Complex(0.0), Complex(1.0)};
}

MobiusMatrix from_vertical_rotation(double gamma)
{
    const double c = std::cos(0.5 * gamma);
    const double s = std::sin(0.5 * gamma);
    return {Complex(c), Complex(s), Complex(-s), Complex(c)};
}

MobiusMatrix from_zoom(double s)
{
    if (!(s > 0.0) || !std::isfinite(s))
        throw InvalidCommand("invalid command: zoom level must satisfy s > 0 (got " + std::to_string(s) + ")");
    return {Complex(s), Complex(0.0), Complex(0.0), Complex(1.0)};
}

MobiusMatrix compose(const MobiusMatrix& m1, const MobiusMatrix& m2)
{
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d, m1.c * m2.a + m1.d * m2.c,
            m1.c * m2.b + m1.d * m2.d};
}

MobiusMatrix inverse(const MobiusMatrix& m) { return {m.d, -m.b, -m.c, m.a}; }

MobiusMatrix from_command(const UserCommand& cmd)
{
    cmd.validate();
    return compose(from_zoom(cmd.zoom), compose(from_vertical_rotation(cmd.gamma), from_horizontal_rotation(cmd.beta)));
}

MobiusMatrix rotation_to_north_pole(SphericalCoord center)
{
    return compose(from_vertical_rotation(kHalfPi - center.phi), from_horizontal_rotation(-center.theta));
}

MobiusMatrix from_zoom_at(SphericalCoord center, double s)
{
    const MobiusMatrix zoom = from_zoom(s);
    const MobiusMatrix r = rotation_to_north_pole(center);
    return compose(inverse(r), compose(zoom, r));
}

ComplexPoint apply(const MobiusMatrix& m, ComplexPoint z)
{
    const simd::MobiusCoeffs k = coeffs_of(m);
    double wr = 0.0;
    double wi = 0.0;
    const bool finite = z.at_infinity ? simd::detail::mobius_at_infinity(k, wr, wi)
                                      : simd::detail::mobius_finite(k, z.re, z.im, wr, wi);
    if (!finite)
        return ComplexPoint::infinity();
    return {wr, wi, false};
}

SpherePoint apply_on_sphere(const MobiusMatrix& m, const SpherePoint& p)
{
    SpherePoint out = p;
    simd::detail::mobius_sphere_point(coeffs_of(m), out.x, out.y, out.z);
    return out;
}

IndexMap transform_index_map(const IndexMap& map, const MobiusMatrix& m)
{
    IndexMap out(map.height(), map.width());
    const simd::MobiusCoeffs k = coeffs_of(m);
    const simd::Kernels& kernels = simd::active_kernels();
    const std::size_t width = map.width();

    parallel_for(map.height(), [&](std::size_t row_begin, std::size_t row_end) {
        std::vector<double> xs(width), ys(width), zs(width);
        for (std::size_t r = row_begin; r < row_end; ++r) {
            const auto in = map.row(r);
            for (std::size_t j = 0; j < width; ++j) {
                const SpherePoint p = spherical_to_cartesian(in[j]);
                xs[j] = p.x;
                ys[j] = p.y;
                zs[j] = p.z;
            }
            kernels.mobius_sphere(k, xs.data(), ys.data(), zs.data(), width);
            auto dst = out.row(r);
            for (std::size_t j = 0; j < width; ++j) {
                const double rad = std::hypot(xs[j], ys[j]);
                const double theta = rad == 0.0 ? 0.0 : wrap_longitude(std::atan2(ys[j], xs[j]));
                dst[j] = {theta, std::atan2(zs[j], rad)};
            }
        }
    });
    return out;
}

bool equal_up_to_scale(const MobiusMatrix& m1, const MobiusMatrix& m2, double tol)
{
    const double n1 = frobenius(m1);
    const double n2 = frobenius(m2);
    if (n1 == 0.0 || n2 == 0.0)
        return n1 == n2;
    // Least-squares lambda for m1 ~ lambda m2 after normalizing both.
    const Complex inner = std::conj(m2.a) * m1.a + std::conj(m2.b) * m1.b + std::conj(m2.c) * m1.c +
                          std::conj(m2.d) * m1.d;
    const Complex lambda = inner / (n2 * n2);
    const double residual = std::sqrt(std::norm(m1.a - lambda * m2.a) + std::norm(m1.b - lambda * m2.b) +
                                      std::norm(m1.c - lambda * m2.c) + std::norm(m1.d - lambda * m2.d));
    return residual <= tol * n1;
}

} // namespace omnivr

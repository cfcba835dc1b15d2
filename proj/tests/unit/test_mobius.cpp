#include <doctest.h>

#include <cmath>
#include <random>

#include "omnivr/errors.hpp"
#include "omnivr/mobius.hpp"

using namespace omnivr;

namespace {

MobiusMatrix random_matrix(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        MobiusMatrix m{{n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}};
        if (std::abs(m.determinant()) > 0.1)
            return m;
    }
}

ComplexPoint random_point(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.5);
    return {n(rng), n(rng), false};
}

double distance(ComplexPoint p, ComplexPoint q) { return std::hypot(p.re - q.re, p.im - q.im); }

bool exactly(const MobiusMatrix& m, Complex a, Complex b, Complex c, Complex d)
{
    return m.a == a && m.b == b && m.c == c && m.d == d;
}

} // namespace

TEST_CASE("horizontal rotation matrices")
{
    CHECK(exactly(from_horizontal_rotation(0.0), 1.0, 0.0, 0.0, 1.0));
    const auto pi = from_horizontal_rotation(kPi);
    CHECK(pi.a.real() == -1.0);
    CHECK(std::abs(pi.a.imag()) < 1e-15);
    CHECK(pi.b == 0.0);
    CHECK(pi.c == 0.0);
    CHECK(pi.d == 1.0);
    const auto half = from_horizontal_rotation(kHalfPi);
    CHECK(std::abs(half.a - Complex(0, 1)) < 1e-15);
}

TEST_CASE("vertical rotation matrices")
{
    CHECK(exactly(from_vertical_rotation(0.0), 1.0, 0.0, -0.0, 1.0));
    const auto flip = from_vertical_rotation(kPi);
    CHECK(std::abs(flip.a) < 1e-15);
    CHECK(flip.b == 1.0);
    CHECK(flip.c == -1.0);
    CHECK(std::abs(flip.d) < 1e-15);
    CHECK(equal_up_to_scale(compose(from_vertical_rotation(0.8), from_vertical_rotation(-0.8)), MobiusMatrix::identity()));
}

TEST_CASE("zoom matrices")
{
    CHECK(exactly(from_zoom(1.0), 1.0, 0.0, 0.0, 1.0));
    CHECK(exactly(from_zoom(2.0), 2.0, 0.0, 0.0, 1.0));
    CHECK(equal_up_to_scale(compose(from_zoom(0.5), from_zoom(2.0)), MobiusMatrix::identity()));
    CHECK_THROWS_AS(from_zoom(0.0), InvalidCommand);
    CHECK_THROWS_AS(from_zoom(-1.0), InvalidCommand);
    CHECK_THROWS_WITH_AS(from_zoom(0.0), doctest::Contains("s > 0"), InvalidCommand);
}

TEST_CASE("compose and inverse")
{
    std::mt19937_64 rng(3);
    const auto m = random_matrix(rng);
    CHECK(exactly(compose(m, MobiusMatrix::identity()), m.a, m.b, m.c, m.d));
    CHECK(equal_up_to_scale(compose(from_horizontal_rotation(0.4), from_horizontal_rotation(1.1)),
                            from_horizontal_rotation(1.5)));
    CHECK(exactly(inverse(MobiusMatrix::identity()), 1.0, -0.0, -0.0, 1.0));
    CHECK(exactly(inverse(from_zoom(2.0)), 1.0, -0.0, -0.0, 2.0));
    CHECK(equal_up_to_scale(inverse(from_zoom(2.0)), from_zoom(0.5)));
    CHECK(equal_up_to_scale(compose(m, inverse(m)), MobiusMatrix::identity()));
    CHECK(equal_up_to_scale(compose(inverse(m), m), MobiusMatrix::identity()));
}

TEST_CASE("from_command multiplies rotation then zoom")
{
    CHECK(exactly(from_command({0, 0, 1}), 1.0, 0.0, 0.0, 1.0));
    CHECK(equal_up_to_scale(from_command({kHalfPi, 0, 1}), from_horizontal_rotation(kHalfPi), 1e-15));

    const auto m = from_command({0.3, -0.2, 1.5});
    const MobiusMatrix expected{{1.425845678883095, 0.44106575482778376},
                                {-0.14975012497024223, 0.0},
                                {0.09537450575679464, 0.029502791919178272},
                                {0.9950041652780258, 0.0}};
    CHECK(equal_up_to_scale(m, expected, 1e-14));
    CHECK(std::abs(m.a - expected.a) < 1e-14);
    CHECK(std::abs(m.c - expected.c) < 1e-14);

    CHECK_THROWS_AS(from_command({0, 0, 0}), InvalidCommand);
    CHECK_THROWS_AS(from_command({std::nan(""), 0, 1}), InvalidCommand);
}

TEST_CASE("from_zoom_at conjugates the north-pole zoom")
{
    CHECK(equal_up_to_scale(from_zoom_at({0.7, kHalfPi}, 2.5), from_zoom(2.5)));
    CHECK(equal_up_to_scale(from_zoom_at({-1.2, 0.4}, 1.0), MobiusMatrix::identity()));

    const auto m = from_zoom_at({0.0, 0.0}, 2.0);
    const auto p = apply_on_sphere(m, spherical_to_cartesian({0.0, 0.0}));
    const auto c = cartesian_to_spherical(p);
    CHECK(std::abs(c.theta) < 1e-12);
    CHECK(std::abs(c.phi) < 1e-12);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> th(-kPi, kPi), ph(-1.4, 1.4);
    for (int k = 0; k < 50; ++k) {
        const SphericalCoord center{th(rng), ph(rng)};
        const auto q = apply_on_sphere(from_zoom_at(center, 1.7), spherical_to_cartesian(center));
        CHECK(angle_between(q, spherical_to_cartesian(center)) < 1e-9);
    }
    CHECK_THROWS_AS(from_zoom_at({0, 0}, 0.0), InvalidCommand);
}

TEST_CASE("apply on the extended plane")
{
    const auto z = apply(MobiusMatrix::identity(), {3, 4});
    CHECK(z.re == 3.0);
    CHECK(z.im == 4.0);
    const auto w = apply(from_zoom(2.0), {1, 0});
    CHECK(w.re == 2.0);
    CHECK(w.im == 0.0);
    CHECK(apply({0, 1, 1, 0}, {0, 0}).at_infinity);
    const auto inf = apply({0, 1, 1, 0}, ComplexPoint::infinity());
    CHECK(!inf.at_infinity);
    CHECK(inf.re == 0.0);
    CHECK(apply(from_zoom(3.0), ComplexPoint::infinity()).at_infinity);
}

TEST_CASE("scale invariance, associativity and inverses on random data")
{
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const auto m1 = random_matrix(rng);
        const auto m2 = random_matrix(rng);
        const auto m3 = random_matrix(rng);
        const auto z = random_point(rng);
        const Complex lambda(n(rng) + 2.0, n(rng));
        const MobiusMatrix scaled{lambda * m1.a, lambda * m1.b, lambda * m1.c, lambda * m1.d};
        const auto a = apply(m1, z);
        const auto b = apply(scaled, z);
        const double mag = 1.0 + std::hypot(a.re, a.im);
        CHECK(distance(a, b) < 1e-9 * mag);

        const auto chained = apply(m1, apply(m2, z));
        const auto composed = apply(compose(m1, m2), z);
        CHECK(distance(chained, composed) < 1e-9 * (1.0 + std::hypot(chained.re, chained.im)));

        CHECK(equal_up_to_scale(compose(compose(m1, m2), m3), compose(m1, compose(m2, m3))));
        CHECK(distance(apply(inverse(m1), apply(m1, z)), z) < 1e-9 * (1.0 + std::hypot(z.re, z.im)));
    }
}

TEST_CASE("Jacobian is conformal")
{
    std::mt19937_64 rng(23);
    const double h = 1e-5;
    for (int k = 0; k < 200; ++k) {
        const auto m = random_matrix(rng);
        const auto z = random_point(rng);
        const auto fx1 = apply(m, {z.re + h, z.im}), fx0 = apply(m, {z.re - h, z.im});
        const auto fy1 = apply(m, {z.re, z.im + h}), fy0 = apply(m, {z.re, z.im - h});
        const double j11 = (fx1.re - fx0.re) / (2 * h), j21 = (fx1.im - fx0.im) / (2 * h);
        const double j12 = (fy1.re - fy0.re) / (2 * h), j22 = (fy1.im - fy0.im) / (2 * h);
        const double fro2 = j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22;
        const double det = std::abs(j11 * j22 - j12 * j21);
        const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4 * det * det));
        const double smax = std::sqrt(0.5 * (fro2 + disc)), smin = std::sqrt(0.5 * (fro2 - disc));
        if (smax < 1e-3 || smax > 1e3)
            continue;
        CHECK(std::abs(smax / smin - 1.0) < 1e-3);
    }
}

TEST_CASE("transform_index_map examples")
{
    const auto grid = erp_grid(16, 32);
    const auto same = transform_index_map(grid, MobiusMatrix::identity());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(same.entries()[i].theta - grid.entries()[i].theta) < 1e-12);
        CHECK(std::abs(same.entries()[i].phi - grid.entries()[i].phi) < 1e-12);
    }

    const double beta = 0.9;
    const auto rotated = transform_index_map(grid, from_horizontal_rotation(beta));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double want = wrap_longitude(grid.entries()[i].theta + beta);
        double dt = std::abs(rotated.entries()[i].theta - want);
        dt = std::min(dt, kTwoPi - dt);
        CHECK(dt < 1e-9);
        CHECK(std::abs(rotated.entries()[i].phi - grid.entries()[i].phi) < 1e-9);
    }

    IndexMap equator(1, 5);
    for (std::size_t j = 0; j < 5; ++j)
        equator.at(0, j) = {-2.0 + j, 0.0};
    const auto zoomed = transform_index_map(equator, from_zoom(2.0));
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(std::abs(zoomed.at(0, j).theta - equator.at(0, j).theta) < 1e-12);
        CHECK(zoomed.at(0, j).phi == doctest::Approx(0.6435011087932843).epsilon(1e-12));
    }
}

TEST_CASE("transform_index_map is bijective away from the poles")
{
    std::mt19937_64 rng(29);
    const auto grid = erp_grid(32, 64);
    for (int k = 0; k < 5; ++k) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const auto m = from_command({3 * u(rng), u(rng), 1.0 + 0.5 * u(rng)});
        const auto back = transform_index_map(transform_index_map(grid, m), inverse(m));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& g = grid.entries()[i];
            if (std::abs(g.phi) > 1.45)
                continue;
            const double d = angle_between(spherical_to_cartesian(g), spherical_to_cartesian(back.entries()[i]));
            CHECK(d < 1e-6);
        }
    }
}

TEST_CASE("validity guards")
{
    CHECK(MobiusMatrix::identity().is_valid());
    CHECK_FALSE(MobiusMatrix({1, 2, 2, 4}).is_valid());
    CHECK_FALSE(MobiusMatrix({std::nan(""), 0, 0, 1}).is_valid());
    CHECK_THROWS_AS(UserCommand({0, 0, -2}).validate(), InvalidCommand);
}

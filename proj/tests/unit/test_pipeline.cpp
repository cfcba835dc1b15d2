#include <doctest.h>

#include <cstdlib>

#include "omnivr/errors.hpp"
#include "omnivr/metrics.hpp"
#include "omnivr/pipeline.hpp"
#include "test_support.hpp"

using namespace omnivr;
using namespace omnivr::testing;

TEST_CASE("upsampling dimensions and constants")
{
    const Image src = random_image(16, 32, 3, 5);
    CHECK(upsample_bicubic(src, 1) == src);
    const Image small(128, 256, 1, 0.25);
    const Image big = upsample_bicubic(small, 8);
    CHECK(big.height() == 1024);
    CHECK(big.width() == 2048);
    CHECK(max_abs_diff(big, Image(1024, 2048, 1, 0.25)) < 1e-12);
    const Image flat(32, 64, 2, 0.6);
    CHECK(max_abs_diff(upsample_bicubic(flat, 4), Image(128, 256, 2, 0.6)) < 1e-12);
    CHECK(max_abs_diff(downsample_bicubic(flat, 4), Image(8, 16, 2, 0.6)) < 1e-12);
    CHECK_THROWS_AS(upsample_bicubic(src, 3), ConfigError);
    CHECK_THROWS_AS(upsample_bicubic(Image(10, 30, 1), 2), DimensionError);
}

TEST_CASE("downsampling by 8 hits the LR contract")
{
    const Image hr = smooth_image(256, 512);
    const Image lr = downsample_bicubic(hr, 8);
    CHECK(lr.height() == 32);
    CHECK(lr.width() == 64);
}

TEST_CASE("identity command is bit-exact")
{
    const Image src = random_image(16, 32, 3, 6);
    for (auto interp : {Interpolator::slerp, Interpolator::bicubic, Interpolator::nearest})
        CHECK(transform_image(src, UserCommand{0, 0, 1}, 1, interp) == src);
}

TEST_CASE("integer longitude commands shift columns exactly")
{
    const Image src = random_image(16, 32, 3, 7);
    for (long k : {1L, 5L, 16L, 31L}) {
        const UserCommand cmd{kTwoPi * static_cast<double>(k) / 32.0, 0, 1};
        const Image expected = shift_columns(src, k);
        for (auto interp : {Interpolator::slerp, Interpolator::bicubic, Interpolator::nearest})
            CHECK(transform_image(src, cmd, 1, interp) == expected);
    }
}

TEST_CASE("output dimensions follow the up factor")
{
    const Image src = random_image(8, 16, 3, 8);
    const Image out = transform_image(src, UserCommand{0.3, 0.2, 1.4}, 4, Interpolator::slerp);
    CHECK(out.height() == 32);
    CHECK(out.width() == 64);
    CHECK(out.channels() == 3);
}

TEST_CASE("zoom in then out stays close to the original")
{
    const Image src = smooth_image(64, 128);
    const Image there = transform_image(src, UserCommand{0, 0, 1.5}, 1, Interpolator::slerp);
    const Image back = transform_image(there, UserCommand{0, 0, 1.0 / 1.5}, 1, Interpolator::slerp);
    CHECK(ws_psnr(src, back, latitude_band_weights(64, 128, kPi / 3)) >= 40.0);
}

TEST_CASE("two rotations match one combined rotation")
{
    const Image src = smooth_image(64, 128);
    const Image two = transform_image(transform_image(src, UserCommand{0.4, 0, 1}, 1, Interpolator::slerp),
                                      UserCommand{0.9, 0, 1}, 1, Interpolator::slerp);
    const Image one = transform_image(src, UserCommand{1.3, 0, 1}, 1, Interpolator::slerp);
    CHECK(ws_psnr(one, two) >= 35.0);
}

TEST_CASE("results do not depend on the worker count")
{
    const Image src = random_image(32, 64, 3, 9);
    const UserCommand cmd{0.7, -0.4, 1.3};
    ::setenv("OMNIVR_THREADS", "1", 1);
    const Image serial = transform_image(src, cmd, 2, Interpolator::slerp);
    ::setenv("OMNIVR_THREADS", "5", 1);
    const Image threaded = transform_image(src, cmd, 2, Interpolator::slerp);
    ::unsetenv("OMNIVR_THREADS");
    CHECK(serial == threaded);
}

TEST_CASE("invalid inputs are rejected")
{
    const Image src = random_image(8, 16, 1, 1);
    CHECK_THROWS_AS(transform_image(src, UserCommand{0, 0, 0}, 1, Interpolator::slerp), InvalidCommand);
    CHECK_THROWS_AS(transform_image(src, MobiusMatrix{0, 0, 0, 0}, 1, Interpolator::slerp), InvalidInput);
    CHECK_THROWS_AS(transform_image(Image(8, 8, 1), UserCommand{}, 1, Interpolator::slerp), DimensionError);
}

#include "omnivr/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "omnivr/errors.hpp"
#include "omnivr/sphere_geometry.hpp"

namespace omnivr {

Image::Image(std::size_t height, std::size_t width, std::size_t channels, double fill)
    : height_(height), width_(width), channels_(channels), samples_(height * width * channels, fill)
{
}

void require_erp(const Image& img, const char* what)
{
    require_erp_shape(img.height(), img.width(), what);
    if (img.channels() == 0)
        throw DimensionError(std::string(what) + ": image has no channels");
}

void require_same_shape(const Image& a, const Image& b)
{
    if (a.height() != b.height() || a.width() != b.width() || a.channels() != b.channels())
        throw DimensionError("image shapes differ: " + std::to_string(a.height()) + "x" + std::to_string(a.width()) +
                             "x" + std::to_string(a.channels()) + " vs " + std::to_string(b.height()) + "x" +
                             std::to_string(b.width()) + "x" + std::to_string(b.channels()));
}

Image shift_columns(const Image& img, long k)
{
    Image out(img.height(), img.width(), img.channels());
    const long w = static_cast<long>(img.width());
    if (w == 0)
        return out;
    for (std::size_t i = 0; i < img.height(); ++i) {
        for (long j = 0; j < w; ++j) {
            const long src = ((j - k) % w + w) % w;
            std::copy_n(img.pixel(i, static_cast<std::size_t>(src)), img.channels(),
                        out.pixel(i, static_cast<std::size_t>(j)));
        }
    }
    return out;
}

Image quantize_8bit(const Image& img)
{
    Image out = img;
    for (double& v : out.samples())
        v = std::round(std::clamp(v, 0.0, 1.0) * 255.0) / 255.0;
    return out;
}

} // namespace omnivr

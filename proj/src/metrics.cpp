#include "omnivr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "omnivr/errors.hpp"
#include "omnivr/parallel.hpp"
#include "omnivr/simd/kernels.hpp"
#include "omnivr/sphere_geometry.hpp"

namespace omnivr {

namespace {

constexpr int kSsimRadius = 5;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

void check_weights(const Image& img, const WeightGrid& weights)
{
    if (weights.height != img.height() || weights.width != img.width() || weights.rows.size() != img.height())
        throw DimensionError("weight grid does not match the image size");
}

std::vector<double> gaussian_taps()
{
    std::vector<double> taps(2 * kSsimRadius + 1);
    double sum = 0.0;
    for (int k = -kSsimRadius; k <= kSsimRadius; ++k) {
        const double v = std::exp(-(k * k) / (2.0 * kSsimSigma * kSsimSigma));
        taps[static_cast<std::size_t>(k + kSsimRadius)] = v;
        sum += v;
    }
    for (double& v : taps)
        v /= sum;
    return taps;
}

// Separable Gaussian blur of an H x W plane: wrap-around columns, output rows
// [radius, H - radius) only.
std::vector<double> blur_valid(const std::vector<double>& plane, std::size_t height, std::size_t width,
                               const std::vector<double>& taps, const simd::Kernels& kernels)
{
    const std::size_t r = kSsimRadius;
    std::vector<double> horiz(height * width);
    std::vector<double> padded(width + 2 * r);
    for (std::size_t i = 0; i < height; ++i) {
        const double* src = plane.data() + i * width;
        for (std::size_t k = 0; k < padded.size(); ++k)
            padded[k] = src[(k + width - r % width) % width];
        kernels.fir_horizontal(padded.data(), taps.data(), taps.size(), horiz.data() + i * width, width);
    }
    const std::size_t out_rows = height - 2 * r;
    std::vector<double> out(out_rows * width);
    std::vector<const double*> rows(taps.size());
    for (std::size_t i = 0; i < out_rows; ++i) {
        for (std::size_t k = 0; k < taps.size(); ++k)
            rows[k] = horiz.data() + (i + k) * width;
        kernels.fir_vertical(rows.data(), taps.data(), taps.size(), out.data() + i * width, width);
    }
    return out;
}

} // namespace

double WeightGrid::total() const
{
    double sum = 0.0;
    for (double w : rows)
        sum += w * static_cast<double>(width);
    return sum;
}

nlohmann::json QualityReport::to_json() const
{
    return {{"ws_psnr", ws_psnr}, {"ws_ssim", ws_ssim}, {"width", width}, {"height", height}};
}

WeightGrid latitude_weights(std::size_t height, std::size_t width)
{
    require_erp_shape(height, width, "latitude_weights");
    WeightGrid grid{height, width, std::vector<double>(height)};
    const double h = static_cast<double>(height);
    for (std::size_t i = 0; i < height; ++i)
        grid.rows[i] = std::cos((static_cast<double>(i) + 0.5 - 0.5 * h) * kPi / h);
    return grid;
}

WeightGrid latitude_band_weights(std::size_t height, std::size_t width, double max_abs_lat)
{
    WeightGrid grid = latitude_weights(height, width);
    const double h = static_cast<double>(height);
    for (std::size_t i = 0; i < height; ++i) {
        const double phi = kHalfPi - kPi * (static_cast<double>(i) + 0.5) / h;
        if (std::abs(phi) > max_abs_lat)
            grid.rows[i] = 0.0;
    }
    return grid;
}

double ws_psnr(const Image& ref, const Image& test) { return ws_psnr(ref, test, latitude_weights(ref.height(), ref.width())); }

double ws_psnr(const Image& ref, const Image& test, const WeightGrid& weights)
{
    require_same_shape(ref, test);
    check_weights(ref, weights);
    const simd::Kernels& kernels = simd::active_kernels();
    const double channels = static_cast<double>(ref.channels());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < ref.height(); ++i) {
        const double w = weights.rows[i];
        if (w == 0.0)
            continue;
        const auto a = ref.row(i);
        const auto b = test.row(i);
        num += w * (kernels.sq_diff_sum(a.data(), b.data(), a.size()) / channels);
        den += w * static_cast<double>(ref.width());
    }
    if (!(den > 0.0))
        throw InvalidInput("ws_psnr: weights sum to zero");
    const double wmse = num / den;
    if (wmse == 0.0)
        return kIdenticalPsnr;
    return std::min(kIdenticalPsnr, 10.0 * std::log10(1.0 / wmse));
}

double ws_ssim(const Image& ref, const Image& test) { return ws_ssim(ref, test, latitude_weights(ref.height(), ref.width())); }

double ws_ssim(const Image& ref, const Image& test, const WeightGrid& weights)
{
    require_same_shape(ref, test);
    check_weights(ref, weights);
    const std::size_t height = ref.height();
    const std::size_t width = ref.width();
    const std::size_t channels = ref.channels();
    const std::size_t window = 2 * kSsimRadius + 1;
    if (height < window || width < window)
        throw DimensionError("ws_ssim: images must be at least 11x11 (got " + std::to_string(height) + "x" +
                             std::to_string(width) + ")");

    const std::vector<double> taps = gaussian_taps();
    const simd::Kernels& kernels = simd::active_kernels();
    const std::size_t out_rows = height - 2 * kSsimRadius;
    std::vector<double> ssim_sum(out_rows * width, 0.0);

    std::vector<double> x(height * width), y(height * width), xx(height * width), yy(height * width),
        xy(height * width);
    for (std::size_t c = 0; c < channels; ++c) {
        for (std::size_t i = 0; i < height; ++i) {
            for (std::size_t j = 0; j < width; ++j) {
                const std::size_t k = i * width + j;
                const double a = ref(i, j, c);
                const double b = test(i, j, c);
                x[k] = a;
                y[k] = b;
                xx[k] = a * a;
                yy[k] = b * b;
                xy[k] = a * b;
            }
        }
        std::vector<double> planes[5];
        const std::vector<double>* inputs[5] = {&x, &y, &xx, &yy, &xy};
        parallel_for(5, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p)
                planes[p] = blur_valid(*inputs[p], height, width, taps, kernels);
        });
        const auto& mx = planes[0];
        const auto& my = planes[1];
        const auto& exx = planes[2];
        const auto& eyy = planes[3];
        const auto& exy = planes[4];
        for (std::size_t k = 0; k < ssim_sum.size(); ++k) {
            const double sx = exx[k] - mx[k] * mx[k];
            const double sy = eyy[k] - my[k] * my[k];
            const double sxy = exy[k] - mx[k] * my[k];
            const double num = (2.0 * mx[k] * my[k] + kC1) * (2.0 * sxy + kC2);
            const double den = (mx[k] * mx[k] + my[k] * my[k] + kC1) * (sx + sy + kC2);
            ssim_sum[k] += num / den;
        }
    }

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < out_rows; ++i) {
        const double w = weights.rows[i + kSsimRadius];
        if (w == 0.0)
            continue;
        double row_sum = 0.0;
        for (std::size_t j = 0; j < width; ++j)
            row_sum += ssim_sum[i * width + j] / static_cast<double>(channels);
        num += w * row_sum;
        den += w * static_cast<double>(width);
    }
    if (!(den > 0.0))
        throw InvalidInput("ws_ssim: weights sum to zero over the evaluated rows");
    return num / den;
}

QualityReport evaluate(const Image& ref, const Image& test)
{
    return {ws_psnr(ref, test), ws_ssim(ref, test), ref.width(), ref.height()};
}

} // namespace omnivr

#include "omnivr/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "omnivr/errors.hpp"
#include "omnivr/parallel.hpp"
#include "omnivr/simd/kernels.hpp"

namespace omnivr {

bool is_supported_factor(int factor)
{
    return factor == 1 || factor == 2 || factor == 4 || factor == 8 || factor == 16;
}

Image upsample_bicubic(const Image& img, int factor)
{
    if (!is_supported_factor(factor))
        throw ConfigError("upsample factor must be one of 1, 2, 4, 8, 16 (got " + std::to_string(factor) + ")");
    require_erp(img, "upsample_bicubic");
    if (factor == 1)
        return img;
    const std::size_t f = static_cast<std::size_t>(factor);
    return bicubic_resample(img, erp_grid(img.height() * f, img.width() * f));
}

Image downsample_bicubic(const Image& img, int factor)
{
    if (factor < 1)
        throw ConfigError("downsample factor must be positive (got " + std::to_string(factor) + ")");
    require_erp(img, "downsample_bicubic");
    const std::size_t f = static_cast<std::size_t>(factor);
    if (img.height() % f != 0 || img.height() / f < 2)
        throw DimensionError("downsample_bicubic: height " + std::to_string(img.height()) +
                             " is not a multiple of factor " + std::to_string(factor) + " (or leaves fewer than 2 rows)");
    if (f == 1)
        return img;

    const std::size_t channels = img.channels();
    const std::size_t out_h = img.height() / f;
    const std::size_t out_w = img.width() / f;
    const long in_h = static_cast<long>(img.height());
    const long in_w = static_cast<long>(img.width());

    // Output sample o sits at input coordinate f*o + (f-1)/2; the stretched
    // kernel reaches 2f input pixels to either side.
    const double center = 0.5 * static_cast<double>(f - 1);
    std::vector<long> offsets;
    std::vector<double> taps;
    const long reach = 2 * static_cast<long>(f);
    for (long k = -reach; k <= reach + static_cast<long>(f); ++k) {
        const double w = catmull_rom((static_cast<double>(k) - center) / static_cast<double>(f));
        if (w != 0.0) {
            offsets.push_back(k);
            taps.push_back(w);
        }
    }
    double sum = 0.0;
    for (double w : taps)
        sum += w;
    for (double& w : taps)
        w /= sum;

    // Horizontal pass with wrap-around, full height.
    Image tmp(img.height(), out_w, channels);
    parallel_for(img.height(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t o = 0; o < out_w; ++o) {
                double* dst = tmp.pixel(r, o);
                for (std::size_t c = 0; c < channels; ++c)
                    dst[c] = 0.0;
                for (std::size_t k = 0; k < taps.size(); ++k) {
                    long col = static_cast<long>(f * o) + offsets[k];
                    col = ((col % in_w) + in_w) % in_w;
                    const double* s = img.pixel(r, static_cast<std::size_t>(col));
                    for (std::size_t c = 0; c < channels; ++c)
                        dst[c] += taps[k] * s[c];
                }
            }
        }
    });

    // Rows beyond the poles are the mirrored rows turned by half a revolution.
    const long pad = reach + static_cast<long>(f);
    auto pole_row = [&](long r) -> std::vector<double> {
        long mirrored = r < 0 ? -1 - r : 2 * in_h - 1 - r;
        mirrored = std::clamp(mirrored, 0L, in_h - 1);
        std::vector<double> row(out_w * channels);
        for (std::size_t o = 0; o < out_w; ++o) {
            const std::size_t src_col = (o + out_w / 2) % out_w;
            for (std::size_t c = 0; c < channels; ++c)
                row[o * channels + c] = tmp(static_cast<std::size_t>(mirrored), src_col, c);
        }
        return row;
    };
    std::vector<std::vector<double>> top_pad, bottom_pad;
    for (long r = -pad; r < 0; ++r)
        top_pad.push_back(pole_row(r));
    for (long r = in_h; r < in_h + pad; ++r)
        bottom_pad.push_back(pole_row(r));
    auto row_ptr = [&](long r) -> const double* {
        if (r < 0)
            return top_pad[static_cast<std::size_t>(r + pad)].data();
        if (r >= in_h)
            return bottom_pad[static_cast<std::size_t>(r - in_h)].data();
        return tmp.row(static_cast<std::size_t>(r)).data();
    };

    Image out(out_h, out_w, channels);
    const simd::Kernels& kernels = simd::active_kernels();
    parallel_for(out_h, [&](std::size_t begin, std::size_t end) {
        std::vector<const double*> rows(taps.size());
        for (std::size_t o = begin; o < end; ++o) {
            for (std::size_t k = 0; k < taps.size(); ++k)
                rows[k] = row_ptr(static_cast<long>(f * o) + offsets[k]);
            kernels.fir_vertical(rows.data(), taps.data(), taps.size(), out.row(o).data(), out_w * channels);
        }
    });
    return out;
}

Image transform_image(const Image& img, const MobiusMatrix& m, int up_factor, Interpolator interp,
                      const SlerpOptions& options)
{
    if (!m.is_valid())
        throw InvalidInput("transform_image: Möbius matrix is singular (|ad - bc| <= 1e-12)");
    const Image hr = upsample_bicubic(img, up_factor);
    const IndexMap sources = transform_index_map(erp_grid(hr.height(), hr.width()), inverse(m));
    return resample(hr, sources, interp, options);
}

Image transform_image(const Image& img, const UserCommand& cmd, int up_factor, Interpolator interp,
                      const SlerpOptions& options)
{
    return transform_image(img, from_command(cmd), up_factor, interp, options);
}

} // namespace omnivr

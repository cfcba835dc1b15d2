#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "omnivr/image.hpp"

namespace omnivr {

// Per-pixel weights of an H x W raster that are constant along each row.
struct WeightGrid {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> rows;  // one weight per row

    double at(std::size_t row, std::size_t /*col*/) const { return rows[row]; }
    double total() const;
};

struct QualityReport {
    double ws_psnr = 0.0;
    double ws_ssim = 0.0;
    std::size_t width = 0;
    std::size_t height = 0;

    nlohmann::json to_json() const;
};

inline constexpr double kIdenticalPsnr = 99.0;

/// cos((i + 0.5 - H/2) pi / H) for every row. Requires W = 2H.
WeightGrid latitude_weights(std::size_t height, std::size_t width);

/// latitude_weights with rows whose center latitude exceeds max_abs_lat
/// zeroed out.
WeightGrid latitude_band_weights(std::size_t height, std::size_t width, double max_abs_lat);

/// 10 log10(1 / WMSE) with squared error averaged over channels, capped at
/// 99 dB. Throws DimensionError on shape mismatch.
double ws_psnr(const Image& ref, const Image& test);
double ws_psnr(const Image& ref, const Image& test, const WeightGrid& weights);

/// SSIM map (11 x 11 Gaussian, sigma 1.5, K1 0.01, K2 0.03, L 1) averaged
/// with row weights. Columns wrap around the seam; only rows where the whole
/// window fits contribute. Requires H, W >= 11.
double ws_ssim(const Image& ref, const Image& test);
double ws_ssim(const Image& ref, const Image& test, const WeightGrid& weights);

QualityReport evaluate(const Image& ref, const Image& test);

} // namespace omnivr

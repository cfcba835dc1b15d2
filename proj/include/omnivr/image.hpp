#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace omnivr {

// Interleaved H x W x C raster of doubles. Display images live in [0, 1];
// generic feature grids may hold any finite value. Equirectangular images
// additionally satisfy W = 2H (see require_erp).
class Image {
public:
    Image() = default;
    Image(std::size_t height, std::size_t width, std::size_t channels, double fill = 0.0);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t channels() const { return channels_; }
    bool empty() const { return samples_.empty(); }
    bool is_erp() const { return height_ >= 2 && width_ == 2 * height_; }

    double& operator()(std::size_t row, std::size_t col, std::size_t ch)
    {
        return samples_[(row * width_ + col) * channels_ + ch];
    }
    double operator()(std::size_t row, std::size_t col, std::size_t ch) const
    {
        return samples_[(row * width_ + col) * channels_ + ch];
    }

    // All channels of one pixel.
    double* pixel(std::size_t row, std::size_t col) { return samples_.data() + (row * width_ + col) * channels_; }
    const double* pixel(std::size_t row, std::size_t col) const
    {
        return samples_.data() + (row * width_ + col) * channels_;
    }

    std::span<double> row(std::size_t r) { return {samples_.data() + r * width_ * channels_, width_ * channels_}; }
    std::span<const double> row(std::size_t r) const
    {
        return {samples_.data() + r * width_ * channels_, width_ * channels_};
    }

    std::span<double> samples() { return samples_; }
    std::span<const double> samples() const { return samples_; }

    bool operator==(const Image&) const = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> samples_;
};

/// Throws DimensionError unless img is a valid equirectangular raster.
void require_erp(const Image& img, const char* what);

/// Throws DimensionError unless both images share height, width and channels.
void require_same_shape(const Image& a, const Image& b);

/// out(:, j) = img(:, j - k mod W).
Image shift_columns(const Image& img, long k);

/// Rounds every sample to the nearest multiple of 1/255 after clamping to [0, 1].
Image quantize_8bit(const Image& img);

} // namespace omnivr

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "omnivr/image.hpp"

namespace omnivr {

// 8-bit PNG codec. Decoding always yields 3 channels in [0, 1]; encoding
// accepts 1 (gray), 3 (RGB) or 4 (RGBA) channels, clamping and rounding to
// 8 bits.

Image decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const Image& img);

Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& img);

/// (height, width) from the PNG header without decoding pixels.
std::pair<std::size_t, std::size_t> png_dimensions(const std::filesystem::path& path);

} // namespace omnivr

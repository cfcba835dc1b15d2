#include "omnivr/png_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include <png.h>

#include "omnivr/errors.hpp"

namespace omnivr {

namespace {

Image finish_decode(png_image& image, const std::string& what)
{
    image.format = PNG_FORMAT_RGB;
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw IoError("cannot decode PNG " + what + ": " + msg);
    }
    Image out(image.height, image.width, 3);
    auto samples = out.samples();
    for (std::size_t k = 0; k < buffer.size(); ++k)
        samples[k] = static_cast<double>(buffer[k]) / 255.0;
    return out;
}

} // namespace

Image decode_png(std::span<const std::uint8_t> bytes)
{
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw IoError(std::string("cannot decode PNG buffer: ") + image.message);
    return finish_decode(image, "buffer");
}

std::vector<std::uint8_t> encode_png(const Image& img)
{
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    switch (img.channels()) {
    case 1:
        image.format = PNG_FORMAT_GRAY;
        break;
    case 3:
        image.format = PNG_FORMAT_RGB;
        break;
    case 4:
        image.format = PNG_FORMAT_RGBA;
        break;
    default:
        throw IoError("PNG encoding supports 1, 3 or 4 channels (got " + std::to_string(img.channels()) + ")");
    }
    std::vector<std::uint8_t> pixels(img.samples().size());
    std::transform(img.samples().begin(), img.samples().end(), pixels.begin(), [](double v) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    });

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels.data(), 0, nullptr))
        throw IoError(std::string("cannot encode PNG: ") + image.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&image, out.data(), &size, 0, pixels.data(), 0, nullptr))
        throw IoError(std::string("cannot encode PNG: ") + image.message);
    out.resize(size);
    return out;
}

Image read_png(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw IoError("cannot decode PNG " + path.string() + ": " + image.message);
    return finish_decode(image, path.string());
}

std::pair<std::size_t, std::size_t> png_dimensions(const std::filesystem::path& path)
{
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str()))
        throw IoError("cannot read PNG header of " + path.string() + ": " + image.message);
    const std::pair<std::size_t, std::size_t> dims{image.height, image.width};
    png_image_free(&image);
    return dims;
}

void write_png(const std::filesystem::path& path, const Image& img)
{
    const std::vector<std::uint8_t> bytes = encode_png(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("failed writing " + path.string());
}

} // namespace omnivr

#ifndef GLYPHREC_IMAGE_HPP
#define GLYPHREC_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "glyphrec/errors.hpp"

namespace glyphrec {

// 8-bit grayscale raster, row major, 0 = black ink, 255 = white paper.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1)
            throw InvalidParameterError("GrayImage dimensions must be >= 1");
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    bool operator==(const GrayImage&) const = default;
};

// Binary raster, row major, one byte per pixel (1 = on = glyph ink).
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryImage() = default;
    BinaryImage(int w, int h, bool fill = false)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
        if (w < 1 || h < 1)
            throw InvalidParameterError("BinaryImage dimensions must be >= 1");
    }

    bool at(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    std::int64_t on_count() const {
        std::int64_t n = 0;
        for (std::uint8_t b : bits) n += b;
        return n;
    }

    bool operator==(const BinaryImage&) const = default;
};

// Inclusive pixel rectangle.
struct BoundingBox {
    int left = 0;
    int top = 0;
    int right = 0;
    int bottom = 0;

    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }
    std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }

    bool operator==(const BoundingBox&) const = default;
};

} // namespace glyphrec

#endif

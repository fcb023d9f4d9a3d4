#include "glyphrec/morphology.hpp"

#include <cmath>

namespace glyphrec {

Direction direction_from_degrees(int degrees) {
    switch (degrees) {
        case 0: return Direction::deg0;
        case 45: return Direction::deg45;
        case 90: return Direction::deg90;
        case 135: return Direction::deg135;
        default:
            throw InvalidParameterError("direction must be 0, 45, 90 or 135 degrees");
    }
}

int direction_degrees(Direction d) {
    switch (d) {
        case Direction::deg0: return 0;
        case Direction::deg45: return 45;
        case Direction::deg90: return 90;
        case Direction::deg135: return 135;
    }
    throw InvalidParameterError("bad Direction value");
}

StructuringElement line_se(Direction theta, int length) {
    if (length < 1) throw InvalidParameterError("line_se: length must be >= 1");

    // Unit step of the digital line; y grows downward.
    int sx = 0, sy = 0;
    switch (theta) {
        case Direction::deg0: sx = 1; sy = 0; break;
        case Direction::deg45: sx = 1; sy = -1; break;
        case Direction::deg90: sx = 0; sy = -1; break;
        case Direction::deg135: sx = -1; sy = -1; break;
    }

    // Odd lengths center on the origin; even lengths put the extra pixel on
    // the positive side of the step.
    int lo, hi;
    if (length % 2 == 1) {
        lo = -(length - 1) / 2;
        hi = (length - 1) / 2;
    } else {
        lo = -(length / 2 - 1);
        hi = length / 2;
    }

    StructuringElement se;
    se.theta = theta;
    se.length = length;
    se.offsets.reserve(static_cast<std::size_t>(length));
    for (int k = lo; k <= hi; ++k) se.offsets.emplace_back(k * sx, k * sy);
    return se;
}

int se_length(double fraction, int glyph_height) {
    if (glyph_height < 1)
        throw InvalidParameterError("se_length: glyph_height must be >= 1");
    if (!(fraction > 0.0) || fraction > 1.0)
        throw InvalidParameterError("se_length: fraction must be in (0, 1]");
    long n = std::lround(fraction * glyph_height); // rounds half away from zero
    return n < 1 ? 1 : static_cast<int>(n);
}

BinaryImage erode(const BinaryImage& img, const StructuringElement& se) {
    BinaryImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            bool keep = true;
            for (auto [dx, dy] : se.offsets) {
                int nx = x + dx, ny = y + dy;
                // Outside the raster reads as off, so the support check fails.
                if (nx < 0 || nx >= img.width || ny < 0 || ny >= img.height ||
                    !img.at(nx, ny)) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.set(x, y, true);
        }
    }
    return out;
}

BinaryImage dilate(const BinaryImage& img, const StructuringElement& se) {
    BinaryImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            bool hit = false;
            for (auto [dx, dy] : se.offsets) {
                // Reflected SE read: probe at p - s, off outside the raster.
                int nx = x - dx, ny = y - dy;
                if (nx >= 0 && nx < img.width && ny >= 0 && ny < img.height &&
                    img.at(nx, ny)) {
                    hit = true;
                    break;
                }
            }
            if (hit) out.set(x, y, true);
        }
    }
    return out;
}

BinaryImage open(const BinaryImage& img, const StructuringElement& se) {
    return dilate(erode(img, se), se);
}

BinaryImage close(const BinaryImage& img, const StructuringElement& se) {
    return erode(dilate(img, se), se);
}

BinaryImage directional_filter(const BinaryImage& img, const StructuringElement& se,
                               OpOrder order) {
    return order == OpOrder::opening ? open(img, se) : close(img, se);
}

} // namespace glyphrec

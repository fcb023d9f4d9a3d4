#ifndef GLYPHREC_MORPHOLOGY_HPP
#define GLYPHREC_MORPHOLOGY_HPP

#include <array>
#include <utility>
#include <vector>

#include "glyphrec/image.hpp"

namespace glyphrec {

enum class Direction { deg0, deg45, deg90, deg135 };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::deg0, Direction::deg45, Direction::deg90, Direction::deg135};

// Throws InvalidParameterError unless degrees is one of 0, 45, 90, 135.
Direction direction_from_degrees(int degrees);
int direction_degrees(Direction d);

// Digital line segment through the origin. For odd lengths the segment is
// centered; for even lengths the extra pixel extends in the positive
// direction of the line (+x at 0 deg, -y at 90 deg, (+x,-y) at 45 deg,
// (-x,-y) at 135 deg; y grows downward).
struct StructuringElement {
    Direction theta = Direction::deg0;
    int length = 1;
    std::vector<std::pair<int, int>> offsets; // (dx, dy), contains (0,0)
};

StructuringElement line_se(Direction theta, int length);

// SE length from the glyph height: max(1, round(fraction * height)),
// rounding half away from zero.
int se_length(double fraction, int glyph_height);

// Border convention for both: coordinates outside the raster read as off.
BinaryImage erode(const BinaryImage& img, const StructuringElement& se);
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

// Standard opening, erosion then dilation.
BinaryImage open(const BinaryImage& img, const StructuringElement& se);
// Erosion after dilation (closing), kept for comparison runs.
BinaryImage close(const BinaryImage& img, const StructuringElement& se);

enum class OpOrder { opening, closing };

BinaryImage directional_filter(const BinaryImage& img, const StructuringElement& se,
                               OpOrder order);

} // namespace glyphrec

#endif

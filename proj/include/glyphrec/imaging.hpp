#ifndef GLYPHREC_IMAGING_HPP
#define GLYPHREC_IMAGING_HPP

#include <cstdint>
#include <vector>

#include "glyphrec/image.hpp"

namespace glyphrec {

// Connected-component labeling result. Label 0 is background; components
// are numbered 1..count in raster order of their first pixel.
struct ComponentSet {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    int count = 0;
    std::vector<std::int64_t> pixel_counts; // indexed by label-1
    std::vector<BoundingBox> boxes;         // indexed by label-1

    std::int32_t label_at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
};

// Median smoothing with edge replication at the borders. window must be 3 or 5.
GrayImage median_filter(const GrayImage& img, int window = 3);

// Threshold maximizing between-class variance of the 256-bin histogram;
// ties resolve to the smallest threshold.
int otsu_threshold(const GrayImage& img);

// Ink is dark: intensity <= t becomes an on pixel.
BinaryImage binarize(const GrayImage& img, int threshold);

// Tightest box around all on-pixels. Throws EmptyGlyphError on a blank image.
BoundingBox bounding_box(const BinaryImage& img);

BinaryImage crop(const BinaryImage& img, const BoundingBox& box);

// Turns on every off-region not 4-connected to the image border.
BinaryImage fill_holes(const BinaryImage& img);

ComponentSet connected_components(const BinaryImage& img, int connectivity = 8);

} // namespace glyphrec

#endif

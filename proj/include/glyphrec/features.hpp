#ifndef GLYPHREC_FEATURES_HPP
#define GLYPHREC_FEATURES_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "glyphrec/image.hpp"
#include "glyphrec/morphology.hpp"

namespace glyphrec {

// Strokes of one directional opening: the 8-connected components of the
// opened glyph, with stroke length measured as component pixel count.
struct DirectionalStrokes {
    Direction theta = Direction::deg0;
    int count = 0;
    std::vector<std::int64_t> lengths;
};

inline constexpr int kFeatureCount = 13;

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "omega0", "omega45", "omega90", "omega135", "density", "eta",   "beta",
    "ecc",    "extent",  "pleft",   "pright",   "ptop",    "pbottom"};

// The 13 spatial features of one glyph, in the fixed serialization order.
struct FeatureVector {
    double omega_0 = 0.0;
    double omega_45 = 0.0;
    double omega_90 = 0.0;
    double omega_135 = 0.0;
    double stroke_density = 0.0;
    double on_pixel_ratio = 0.0;
    double aspect_ratio = 0.0;
    double eccentricity = 0.0;
    double extent = 0.0;
    double profile_left = 0.0;
    double profile_right = 0.0;
    double profile_top = 0.0;
    double profile_bottom = 0.0;

    std::array<double, kFeatureCount> as_array() const;
    static FeatureVector from_array(const std::array<double, kFeatureCount>& a);

    bool operator==(const FeatureVector&) const = default;
};

// Per-dimension min/max observed on a training split.
struct NormalizationStats {
    std::array<double, kFeatureCount> min{};
    std::array<double, kFeatureCount> max{};

    bool constant(int dim) const { return max[dim] == min[dim]; }
    bool operator==(const NormalizationStats&) const = default;
};

DirectionalStrokes directional_strokes(const BinaryImage& img, Direction theta,
                                       double se_fraction,
                                       OpOrder order = OpOrder::opening);

// Mean stroke pixel count; 0 when the opening left no strokes.
double avg_stroke_length(const DirectionalStrokes& ds);

// Sum over the four directions of stroke count / glyph width.
double avg_stroke_density(const std::array<DirectionalStrokes, 4>& per_theta, int width);

// On-pixel count after hole filling, divided by raster area.
double on_pixel_ratio(const BinaryImage& img);

double aspect_ratio(const BoundingBox& box);

// Major/minor axis ratio of the moment-equivalent ellipse. A single pixel
// is defined as 1.0; nearly collinear pixel sets cap at 1e6.
double eccentricity(const BinaryImage& img);

// Raw on-pixel count over bounding-box area.
double extent(const BinaryImage& img, const BoundingBox& box);

struct DirectionalProfiles {
    double left = 0.0;
    double right = 0.0;
    double top = 0.0;
    double bottom = 0.0;
};

// Background-run totals scanned from each edge, normalized by raster area.
// A row or column with no on-pixel contributes its full extent to both of
// its scans.
DirectionalProfiles directional_profiles(const BinaryImage& img);

// Assembles all 13 features of a cropped glyph.
FeatureVector extract_features(const BinaryImage& img, double se_fraction,
                               OpOrder order = OpOrder::opening);

NormalizationStats fit_normalization(const std::vector<FeatureVector>& train);

// Per dimension (x - min) / (max - min), clamped to [0, 1]; constant
// dimensions map to 0.5.
FeatureVector apply_normalization(const FeatureVector& v, const NormalizationStats& s);

} // namespace glyphrec

#endif

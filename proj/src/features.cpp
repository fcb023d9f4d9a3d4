#include "glyphrec/features.hpp"

#include <algorithm>
#include <cmath>

#include "glyphrec/imaging.hpp"

namespace glyphrec {

std::array<double, kFeatureCount> FeatureVector::as_array() const {
    return {omega_0,      omega_45,     omega_90, omega_135,    stroke_density,
            on_pixel_ratio, aspect_ratio, eccentricity, extent,
            profile_left, profile_right, profile_top,  profile_bottom};
}

FeatureVector FeatureVector::from_array(const std::array<double, kFeatureCount>& a) {
    FeatureVector v;
    v.omega_0 = a[0];
    v.omega_45 = a[1];
    v.omega_90 = a[2];
    v.omega_135 = a[3];
    v.stroke_density = a[4];
    v.on_pixel_ratio = a[5];
    v.aspect_ratio = a[6];
    v.eccentricity = a[7];
    v.extent = a[8];
    v.profile_left = a[9];
    v.profile_right = a[10];
    v.profile_top = a[11];
    v.profile_bottom = a[12];
    return v;
}

DirectionalStrokes directional_strokes(const BinaryImage& img, Direction theta,
                                       double se_fraction, OpOrder order) {
    if (img.on_count() == 0)
        throw EmptyGlyphError("directional_strokes: empty glyph");
    StructuringElement se = line_se(theta, se_length(se_fraction, img.height));
    BinaryImage opened = directional_filter(img, se, order);
    ComponentSet cs = connected_components(opened, 8);
    DirectionalStrokes ds;
    ds.theta = theta;
    ds.count = cs.count;
    ds.lengths = cs.pixel_counts;
    return ds;
}

double avg_stroke_length(const DirectionalStrokes& ds) {
    if (ds.count == 0) return 0.0;
    double sum = 0.0;
    for (std::int64_t len : ds.lengths) sum += static_cast<double>(len);
    return sum / ds.count;
}

double avg_stroke_density(const std::array<DirectionalStrokes, 4>& per_theta,
                          int width) {
    if (width < 1) throw InvalidParameterError("avg_stroke_density: width must be >= 1");
    double sum = 0.0;
    for (const DirectionalStrokes& ds : per_theta)
        sum += static_cast<double>(ds.count) / width;
    return sum;
}

double on_pixel_ratio(const BinaryImage& img) {
    BinaryImage filled = fill_holes(img);
    return static_cast<double>(filled.on_count()) /
           (static_cast<double>(img.width) * img.height);
}

double aspect_ratio(const BoundingBox& box) {
    return static_cast<double>(box.width()) / box.height();
}

double eccentricity(const BinaryImage& img) {
    std::int64_t n = 0;
    double sx = 0.0, sy = 0.0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y)) {
                ++n;
                sx += x;
                sy += y;
            }
    if (n == 0) throw EmptyGlyphError("eccentricity: empty glyph");
    if (n == 1) return 1.0; // a point is perfectly isotropic

    const double cx = sx / n, cy = sy / n;
    double mu20 = 0.0, mu02 = 0.0, mu11 = 0.0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y)) {
                double ex = x - cx, ey = y - cy;
                mu20 += ex * ex;
                mu02 += ey * ey;
                mu11 += ex * ey;
            }
    mu20 /= n;
    mu02 /= n;
    mu11 /= n;

    // Eigenvalues of the 2x2 covariance; axes scale with their square roots.
    double tr = mu20 + mu02;
    double det_disc = std::sqrt((mu20 - mu02) * (mu20 - mu02) + 4.0 * mu11 * mu11);
    double lmax = 0.5 * (tr + det_disc);
    double lmin = 0.5 * (tr - det_disc);
    if (lmin <= 1e-12) return 1e6; // collinear pixel set
    return std::sqrt(lmax / lmin);
}

double extent(const BinaryImage& img, const BoundingBox& box) {
    std::int64_t on = img.on_count();
    if (on == 0) throw EmptyGlyphError("extent: empty glyph");
    return static_cast<double>(on) / static_cast<double>(box.area());
}

DirectionalProfiles directional_profiles(const BinaryImage& img) {
    if (img.on_count() == 0)
        throw EmptyGlyphError("directional_profiles: empty glyph");
    const int w = img.width, h = img.height;

    // Off-run length from each edge until the first on-pixel. A line with no
    // on-pixel at all contributes its full extent to both of its scans.
    std::int64_t left = 0, right = 0, top = 0, bottom = 0;
    for (int y = 0; y < h; ++y) {
        int x = 0;
        while (x < w && !img.at(x, y)) ++x;
        left += x;
        int r = 0;
        while (r < w && !img.at(w - 1 - r, y)) ++r;
        right += r;
    }
    for (int x = 0; x < w; ++x) {
        int y = 0;
        while (y < h && !img.at(x, y)) ++y;
        top += y;
        int b = 0;
        while (b < h && !img.at(x, h - 1 - b)) ++b;
        bottom += b;
    }

    const double area = static_cast<double>(w) * h;
    return DirectionalProfiles{left / area, right / area, top / area, bottom / area};
}

FeatureVector extract_features(const BinaryImage& img, double se_fraction,
                               OpOrder order) {
    if (img.on_count() == 0)
        throw EmptyGlyphError("extract_features: empty glyph");

    std::array<DirectionalStrokes, 4> per_theta;
    for (std::size_t i = 0; i < kDirections.size(); ++i)
        per_theta[i] = directional_strokes(img, kDirections[i], se_fraction, order);

    BoundingBox box = bounding_box(img);
    DirectionalProfiles prof = directional_profiles(img);

    FeatureVector v;
    v.omega_0 = avg_stroke_length(per_theta[0]);
    v.omega_45 = avg_stroke_length(per_theta[1]);
    v.omega_90 = avg_stroke_length(per_theta[2]);
    v.omega_135 = avg_stroke_length(per_theta[3]);
    v.stroke_density = avg_stroke_density(per_theta, img.width);
    v.on_pixel_ratio = on_pixel_ratio(img);
    v.aspect_ratio = aspect_ratio(box);
    v.eccentricity = eccentricity(img);
    v.extent = extent(img, box);
    v.profile_left = prof.left;
    v.profile_right = prof.right;
    v.profile_top = prof.top;
    v.profile_bottom = prof.bottom;
    return v;
}

NormalizationStats fit_normalization(const std::vector<FeatureVector>& train) {
    if (train.empty())
        throw InvalidParameterError("fit_normalization: empty training set");
    NormalizationStats s;
    auto first = train.front().as_array();
    s.min = first;
    s.max = first;
    for (const FeatureVector& v : train) {
        auto a = v.as_array();
        for (int d = 0; d < kFeatureCount; ++d) {
            s.min[d] = std::min(s.min[d], a[d]);
            s.max[d] = std::max(s.max[d], a[d]);
        }
    }
    return s;
}

FeatureVector apply_normalization(const FeatureVector& v, const NormalizationStats& s) {
    auto a = v.as_array();
    std::array<double, kFeatureCount> out{};
    for (int d = 0; d < kFeatureCount; ++d) {
        if (s.constant(d)) {
            out[d] = 0.5;
        } else {
            out[d] = std::clamp((a[d] - s.min[d]) / (s.max[d] - s.min[d]), 0.0, 1.0);
        }
    }
    return FeatureVector::from_array(out);
}

} // namespace glyphrec

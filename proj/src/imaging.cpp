#include "glyphrec/imaging.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>

namespace glyphrec {

GrayImage median_filter(const GrayImage& img, int window) {
    if (window != 3 && window != 5)
        throw InvalidParameterError("median_filter: window must be 3 or 5");
    const int r = window / 2;
    GrayImage out(img.width, img.height);
    std::array<std::uint8_t, 25> vals{};
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            int n = 0;
            for (int dy = -r; dy <= r; ++dy) {
                // Edge replication keeps the window full at the borders.
                int sy = std::clamp(y + dy, 0, img.height - 1);
                for (int dx = -r; dx <= r; ++dx) {
                    int sx = std::clamp(x + dx, 0, img.width - 1);
                    vals[n++] = img.at(sx, sy);
                }
            }
            std::nth_element(vals.begin(), vals.begin() + n / 2, vals.begin() + n);
            out.at(x, y) = vals[n / 2];
        }
    }
    return out;
}

int otsu_threshold(const GrayImage& img) {
    std::array<std::int64_t, 256> hist{};
    for (std::uint8_t v : img.pixels) ++hist[v];
    const double total = static_cast<double>(img.pixels.size());

    double sum_all = 0.0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    // Scan thresholds accumulating the low class; class 0 is intensity <= t.
    double best_var = -1.0;
    int best_t = 0;
    std::int64_t n0 = 0;
    double sum0 = 0.0;
    for (int t = 0; t < 256; ++t) {
        n0 += hist[t];
        sum0 += static_cast<double>(t) * hist[t];
        std::int64_t n1 = static_cast<std::int64_t>(total) - n0;
        double var = 0.0;
        if (n0 > 0 && n1 > 0) {
            double mu0 = sum0 / n0;
            double mu1 = (sum_all - sum0) / n1;
            double w0 = n0 / total;
            double w1 = n1 / total;
            var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        }
        if (var > best_var) { // strict: ties keep the smallest t
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
    if (threshold < 0 || threshold > 255)
        throw InvalidParameterError("binarize: threshold must be in [0, 255]");
    BinaryImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.bits[i] = img.pixels[i] <= threshold ? 1 : 0;
    return out;
}

BoundingBox bounding_box(const BinaryImage& img) {
    int left = img.width, top = img.height, right = -1, bottom = -1;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (!img.at(x, y)) continue;
            left = std::min(left, x);
            right = std::max(right, x);
            top = std::min(top, y);
            bottom = std::max(bottom, y);
        }
    }
    if (right < 0) throw EmptyGlyphError("bounding_box: image has no on-pixels");
    return BoundingBox{left, top, right, bottom};
}

BinaryImage crop(const BinaryImage& img, const BoundingBox& box) {
    if (box.left < 0 || box.top < 0 || box.right >= img.width ||
        box.bottom >= img.height || box.left > box.right || box.top > box.bottom)
        throw InvalidParameterError("crop: box out of bounds");
    BinaryImage out(box.width(), box.height());
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x)
            out.set(x, y, img.at(box.left + x, box.top + y));
    return out;
}

BinaryImage fill_holes(const BinaryImage& img) {
    // Flood the off-background from the border with 4-connectivity; the
    // 4-connected background is the dual of 8-connected foreground rings.
    const int w = img.width, h = img.height;
    std::vector<std::uint8_t> outside(static_cast<std::size_t>(w) * h, 0);
    std::deque<std::pair<int, int>> queue;

    auto seed = [&](int x, int y) {
        std::size_t i = static_cast<std::size_t>(y) * w + x;
        if (!img.bits[i] && !outside[i]) {
            outside[i] = 1;
            queue.emplace_back(x, y);
        }
    };
    for (int x = 0; x < w; ++x) {
        seed(x, 0);
        seed(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        seed(0, y);
        seed(w - 1, y);
    }
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (x > 0) seed(x - 1, y);
        if (x + 1 < w) seed(x + 1, y);
        if (y > 0) seed(x, y - 1);
        if (y + 1 < h) seed(x, y + 1);
    }

    BinaryImage out(w, h);
    for (std::size_t i = 0; i < out.bits.size(); ++i)
        out.bits[i] = (img.bits[i] || !outside[i]) ? 1 : 0;
    return out;
}

ComponentSet connected_components(const BinaryImage& img, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw InvalidParameterError("connected_components: connectivity must be 4 or 8");
    const int w = img.width, h = img.height;
    ComponentSet cs;
    cs.width = w;
    cs.height = h;
    cs.labels.assign(static_cast<std::size_t>(w) * h, 0);

    static constexpr int dx8[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int dy8[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    static constexpr int dx4[4] = {0, -1, 1, 0};
    static constexpr int dy4[4] = {-1, 0, 0, 1};
    const int* dx = connectivity == 8 ? dx8 : dx4;
    const int* dy = connectivity == 8 ? dy8 : dy4;
    const int nn = connectivity;

    std::vector<std::pair<int, int>> stack;
    for (int y0 = 0; y0 < h; ++y0) {
        for (int x0 = 0; x0 < w; ++x0) {
            std::size_t i0 = static_cast<std::size_t>(y0) * w + x0;
            if (!img.bits[i0] || cs.labels[i0] != 0) continue;

            const std::int32_t label = ++cs.count;
            std::int64_t pixels = 0;
            BoundingBox box{x0, y0, x0, y0};
            cs.labels[i0] = label;
            stack.emplace_back(x0, y0);
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                ++pixels;
                box.left = std::min(box.left, x);
                box.right = std::max(box.right, x);
                box.top = std::min(box.top, y);
                box.bottom = std::max(box.bottom, y);
                for (int k = 0; k < nn; ++k) {
                    int nx = x + dx[k], ny = y + dy[k];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
                    if (img.bits[ni] && cs.labels[ni] == 0) {
                        cs.labels[ni] = label;
                        stack.emplace_back(nx, ny);
                    }
                }
            }
            cs.pixel_counts.push_back(pixels);
            cs.boxes.push_back(box);
        }
    }
    return cs;
}

} // namespace glyphrec

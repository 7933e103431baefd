#include <invmark/error.hpp>
#include <invmark/segmentation.hpp>

#include <algorithm>
#include <limits>

namespace invmark::segmentation {

namespace {

struct Chroma {
    double r, g, b;
};

Chroma chroma(Rgb c) noexcept {
    const double m = c.max_channel();
    return {c.r / m, c.g / m, c.b / m};
}

double dist2(const Chroma& a, const Chroma& b) noexcept {
    const double dr = a.r - b.r, dg = a.g - b.g, db = a.b - b.b;
    return dr * dr + dg * dg + db * db;
}

// Palette classes in label order with their chroma precomputed.
struct PreparedClass {
    std::uint8_t label;
    std::uint8_t threshold;
    Chroma chroma;
};

std::vector<PreparedClass> prepare(const ClassPalette& palette) {
    std::vector<PreparedClass> out;
    for (const auto& c : palette.classes()) out.push_back({c.label, c.threshold, chroma(c.emission)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    return out;
}

std::uint8_t classify(Rgb rgb, const std::vector<PreparedClass>& classes) noexcept {
    const std::uint8_t m = rgb.max_channel();
    if (m == 0) return 0;
    const Chroma p = chroma(rgb);
    std::uint8_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& c : classes) {
        if (m < c.threshold) continue;
        const double d = dist2(p, c.chroma);
        if (d < best_d) {
            best_d = d;
            best = c.label;
        }
    }
    return best;
}

} // namespace

std::uint8_t classify_pixel(Rgb rgb, const ClassPalette& palette) noexcept {
    std::uint8_t m = rgb.max_channel();
    if (m == 0) return 0;
    std::uint8_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    const Chroma p = chroma(rgb);
    for (const auto& c : palette.classes()) {
        if (m < c.threshold) continue;
        const double d = dist2(p, chroma(c.emission));
        if (d < best_d || (d == best_d && c.label < best)) {
            best_d = d;
            best = c.label;
        }
    }
    return best;
}

LabelMask classify_image(const Image& rgb, const ClassPalette& palette, const Image* valid) {
    if (rgb.channels() != 3) throw InvalidArgument("classify_image expects a 3-channel image");
    if (valid && (valid->channels() != 1 || valid->width() != rgb.width() || valid->height() != rgb.height()))
        throw DimensionMismatch("validity mask does not match the image");

    const auto classes = prepare(palette);
    LabelMask out(rgb.width(), rgb.height());
    auto px = rgb.data();
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        if (valid && valid->data()[i] == 0) continue;
        out.labels[i] = classify({px[3 * i], px[3 * i + 1], px[3 * i + 2]}, classes);
    }
    return out;
}

} // namespace invmark::segmentation

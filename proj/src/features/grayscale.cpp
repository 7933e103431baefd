#include <invmark/error.hpp>
#include <invmark/features.hpp>

namespace invmark::features {

Image grayscale(const Image& rgb) {
    if (rgb.channels() != 3) throw InvalidArgument("grayscale expects a 3-channel image");
    Image out(rgb.width(), rgb.height(), 1);
    auto src = rgb.data();
    auto dst = out.data();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const unsigned r = src[3 * i], g = src[3 * i + 1], b = src[3 * i + 2];
        dst[i] = static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
    }
    return out;
}

Image box_blur5(const Image& gray) {
    if (gray.channels() != 1) throw InvalidArgument("box_blur5 expects a single-channel image");
    const int w = gray.width(), h = gray.height();
    auto clampi = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };

    // Separable sums keep the result integer-exact.
    std::vector<int> rows(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int s = 0;
            for (int d = -2; d <= 2; ++d) s += gray.at(clampi(x + d, w - 1), y);
            rows[static_cast<std::size_t>(y) * w + x] = s;
        }
    Image out(w, h, 1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int s = 0;
            for (int d = -2; d <= 2; ++d) s += rows[static_cast<std::size_t>(clampi(y + d, h - 1)) * w + x];
            out.at(x, y) = static_cast<std::uint8_t>((s + 12) / 25);
        }
    return out;
}

} // namespace invmark::features

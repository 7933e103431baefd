#include <invmark/error.hpp>
#include <invmark/registration.hpp>

#include <algorithm>
#include <cmath>

namespace invmark::registration {

WarpResult warp(const Image& img, const Homography& h, int out_width, int out_height) {
    if (img.empty()) throw InvalidArgument("warp: empty source image");
    const Homography inv = h.inverse(); // DegenerateInput when singular

    const int w = img.width(), hgt = img.height(), ch = img.channels();
    const double max_x = w - 1, max_y = hgt - 1;
    constexpr double eps = 1e-9;

    WarpResult out{Image(out_width, out_height, ch), Image(out_width, out_height, 1)};
    for (int y = 0; y < out_height; ++y) {
        std::uint8_t* dst = out.image.row(y);
        std::uint8_t* valid = out.valid.row(y);
        for (int x = 0; x < out_width; ++x) {
            Point2 s = inv.apply({static_cast<double>(x), static_cast<double>(y)});
            if (!(s.x >= -eps && s.y >= -eps && s.x <= max_x + eps && s.y <= max_y + eps)) continue;
            s.x = std::clamp(s.x, 0.0, max_x);
            s.y = std::clamp(s.y, 0.0, max_y);
            const int x0 = static_cast<int>(std::floor(s.x));
            const int y0 = static_cast<int>(std::floor(s.y));
            const int x1 = std::min(x0 + 1, w - 1);
            const int y1 = std::min(y0 + 1, hgt - 1);
            const double fx = s.x - x0, fy = s.y - y0;
            for (int c = 0; c < ch; ++c) {
                const double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
                const double bot = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
                dst[x * ch + c] = saturate_u8(top * (1.0 - fy) + bot * fy);
            }
            valid[x] = 255;
        }
    }
    return out;
}

} // namespace invmark::registration

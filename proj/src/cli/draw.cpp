#include "commands.hpp"

#include <invmark/palette.hpp>

#include <cmath>
#include <cstdlib>

namespace invmark::cli {

namespace {

void put(Image& img, int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= img.width() || y >= img.height()) return;
    img.at(x, y, 0) = c.r;
    img.at(x, y, 1) = c.g;
    img.at(x, y, 2) = c.b;
}

void line(Image& img, int x0, int y0, int x1, int y1, Rgb c) {
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int e = dx + dy;
    for (;;) {
        put(img, x0, y0, c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * e;
        if (e2 >= dy) {
            e += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            e += dx;
            y0 += sy;
        }
    }
}

void cross(Image& img, int x, int y, Rgb c) {
    line(img, x - 2, y, x + 2, y, c);
    line(img, x, y - 2, x, y + 2, c);
}

} // namespace

Image draw_alignment(const Image& regular, const Image& uv, const registration::AlignmentReport& report) {
    const int w = regular.width(), h = regular.height();
    Image canvas(2 * w, h, 3);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c) {
                canvas.at(x, y, c) = regular.at(x, y, c);
                canvas.at(x + w, y, c) = uv.at(x, y, c);
            }

    constexpr Rgb kKeypoint{0, 255, 0}, kInlier{255, 255, 0}, kOutlier{255, 0, 0};
    for (const auto& kp : report.regular_features.keypoints)
        cross(canvas, static_cast<int>(std::lround(kp.x)), static_cast<int>(std::lround(kp.y)), kKeypoint);
    for (const auto& kp : report.uv_features.keypoints)
        cross(canvas, static_cast<int>(std::lround(kp.x)) + w, static_cast<int>(std::lround(kp.y)), kKeypoint);
    for (std::size_t i = 0; i < report.matches.size(); ++i) {
        const auto& m = report.matches[i];
        const auto& a = report.regular_features.keypoints[m.index_a];
        const auto& b = report.uv_features.keypoints[m.index_b];
        const bool inlier = i < report.inliers.size() && report.inliers[i];
        line(canvas, static_cast<int>(std::lround(a.x)), static_cast<int>(std::lround(a.y)),
             static_cast<int>(std::lround(b.x)) + w, static_cast<int>(std::lround(b.y)), inlier ? kInlier : kOutlier);
    }
    return canvas;
}

} // namespace invmark::cli

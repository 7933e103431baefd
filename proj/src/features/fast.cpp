#include <invmark/error.hpp>
#include <invmark/features.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace invmark::features {

namespace {

// Radius-3 Bresenham circle, clockwise from the top.
constexpr int kCircle[16][2] = {{0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},  {3, 1},  {2, 2},  {1, 3},
                                {0, 3},  {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3}};
constexpr int kArc = 9;

// Sum of `diff` over the longest cyclic run of flagged entries, if that run
// reaches kArc. Two such runs cannot coexist on a 16-pixel circle.
std::optional<int> arc_score(const bool (&flag)[16], const int (&diff)[16]) {
    int start = -1;
    for (int i = 0; i < 16; ++i)
        if (!flag[i]) {
            start = i;
            break;
        }
    if (start < 0) {
        int s = 0;
        for (int d : diff) s += d;
        return s;
    }
    int run = 0, sum = 0, best_run = 0, best_sum = 0;
    for (int k = 1; k <= 16; ++k) {
        const int i = (start + k) % 16;
        if (flag[i]) {
            ++run;
            sum += diff[i];
            if (run > best_run) {
                best_run = run;
                best_sum = sum;
            }
        } else {
            run = 0;
            sum = 0;
        }
    }
    if (best_run >= kArc) return best_sum;
    return std::nullopt;
}

} // namespace

std::optional<int> fast_score(const Image& gray, int x, int y, int threshold) {
    const int c = gray.at(x, y);
    bool bright[16], dark[16];
    int diff[16];
    int n_bright = 0, n_dark = 0;
    for (int i = 0; i < 16; ++i) {
        const int p = gray.at(x + kCircle[i][0], y + kCircle[i][1]);
        bright[i] = p > c + threshold;
        dark[i] = p < c - threshold;
        diff[i] = std::abs(p - c);
        n_bright += bright[i];
        n_dark += dark[i];
    }
    if (n_bright >= kArc)
        if (auto s = arc_score(bright, diff)) return s;
    if (n_dark >= kArc)
        if (auto s = arc_score(dark, diff)) return s;
    return std::nullopt;
}

double centroid_angle(const Image& gray, int x, int y) {
    constexpr int r = kPatchRadius;
    long m01 = 0, m10 = 0;
    for (int v = -r; v <= r; ++v)
        for (int u = -r; u <= r; ++u) {
            if (u * u + v * v > r * r) continue;
            const int p = gray.at(x + u, y + v);
            m10 += static_cast<long>(u) * p;
            m01 += static_cast<long>(v) * p;
        }
    return std::atan2(static_cast<double>(m01), static_cast<double>(m10));
}

std::vector<Keypoint> detect_fast(const Image& gray, int threshold, std::size_t max_keypoints) {
    if (gray.channels() != 1) throw InvalidArgument("detect_fast expects a grayscale image");
    if (gray.width() < kMinImageSize || gray.height() < kMinImageSize)
        throw InvalidArgument("detect_fast needs at least " + std::to_string(kMinImageSize) + "x" +
                              std::to_string(kMinImageSize) + " pixels");
    if (threshold < 0 || threshold > 255) throw InvalidArgument("FAST threshold must lie in [0, 255]");

    const int w = gray.width(), h = gray.height();
    const int lo = kPatchRadius;
    std::vector<int> score(static_cast<std::size_t>(w) * h, 0);
    for (int y = lo; y < h - lo; ++y)
        for (int x = lo; x < w - lo; ++x)
            if (auto s = fast_score(gray, x, y, threshold)) score[static_cast<std::size_t>(y) * w + x] = *s;

    // 3x3 suppression. Equal scores resolve toward the earlier raster
    // position so plateaus keep exactly one representative.
    std::vector<Keypoint> out;
    for (int y = lo; y < h - lo; ++y)
        for (int x = lo; x < w - lo; ++x) {
            const int s = score[static_cast<std::size_t>(y) * w + x];
            if (s == 0) continue;
            bool keep = true;
            for (int dy = -1; dy <= 1 && keep; ++dy)
                for (int dx = -1; dx <= 1 && keep; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int n = score[static_cast<std::size_t>(y + dy) * w + (x + dx)];
                    const bool earlier = dy < 0 || (dy == 0 && dx < 0);
                    if (n > s || (earlier && n == s)) keep = false;
                }
            if (keep) out.push_back({static_cast<double>(x), static_cast<double>(y), static_cast<double>(s), 0.0});
        }

    std::stable_sort(out.begin(), out.end(), [](const Keypoint& a, const Keypoint& b) { return a.score > b.score; });
    if (out.size() > max_keypoints) out.resize(max_keypoints);
    for (auto& kp : out) kp.angle = centroid_angle(gray, static_cast<int>(kp.x), static_cast<int>(kp.y));
    return out;
}

} // namespace invmark::features

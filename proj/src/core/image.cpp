#include <invmark/error.hpp>
#include <invmark/image.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace invmark {

namespace {

void check_shape(int width, int height, int channels) {
    if (width < 1 || height < 1)
        throw InvalidArgument("image dimensions must be positive, got " + std::to_string(width) +
                              "x" + std::to_string(height));
    if (channels != 1 && channels != 3)
        throw InvalidArgument("image must have 1 or 3 channels, got " + std::to_string(channels));
}

std::size_t sample_count(int width, int height, int channels) {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
           static_cast<std::size_t>(channels);
}

} // namespace

Image::Image(int width, int height, int channels) : Image(width, height, channels, 0) {}

Image::Image(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
    check_shape(width, height, channels);
    data_.assign(sample_count(width, height, channels), fill);
}

Image::Image(int width, int height, int channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    check_shape(width, height, channels);
    if (data_.size() != sample_count(width, height, channels))
        throw InvalidArgument("image buffer holds " + std::to_string(data_.size()) +
                              " samples, expected " +
                              std::to_string(sample_count(width, height, channels)));
}

std::uint8_t saturate_u8(double v) noexcept {
    if (!(v > 0.0)) return 0; // also maps NaN to 0
    if (v >= 255.0) return 255;
    return static_cast<std::uint8_t>(std::round(v));
}

Image resize_bilinear(const Image& img, int new_width, int new_height) {
    if (new_width < 1 || new_height < 1)
        throw InvalidArgument("resize target must be at least 1x1");
    if (img.empty()) throw InvalidArgument("cannot resize an empty image");
    if (new_width == img.width() && new_height == img.height()) return img;

    const int channels = img.channels();
    const double sx = static_cast<double>(img.width()) / new_width;
    const double sy = static_cast<double>(img.height()) / new_height;

    // Horizontal taps are shared by every row.
    struct Tap {
        int i0, i1;
        double w1;
    };
    auto make_tap = [](double src, int limit) {
        src = std::clamp(src, 0.0, static_cast<double>(limit - 1));
        const int i0 = static_cast<int>(std::floor(src));
        const int i1 = std::min(i0 + 1, limit - 1);
        return Tap{i0, i1, src - i0};
    };
    std::vector<Tap> xtaps(static_cast<std::size_t>(new_width));
    for (int x = 0; x < new_width; ++x) xtaps[x] = make_tap((x + 0.5) * sx - 0.5, img.width());

    Image out(new_width, new_height, channels);
    for (int y = 0; y < new_height; ++y) {
        const Tap ty = make_tap((y + 0.5) * sy - 0.5, img.height());
        const std::uint8_t* r0 = img.row(ty.i0);
        const std::uint8_t* r1 = img.row(ty.i1);
        std::uint8_t* dst = out.row(y);
        for (int x = 0; x < new_width; ++x) {
            const Tap& tx = xtaps[x];
            for (int c = 0; c < channels; ++c) {
                const double top = r0[tx.i0 * channels + c] * (1.0 - tx.w1) + r0[tx.i1 * channels + c] * tx.w1;
                const double bot = r1[tx.i0 * channels + c] * (1.0 - tx.w1) + r1[tx.i1 * channels + c] * tx.w1;
                dst[x * channels + c] = saturate_u8(top * (1.0 - ty.w1) + bot * ty.w1);
            }
        }
    }
    return out;
}

Image absdiff(const Image& a, const Image& b) {
    if (!a.same_shape(b))
        throw InvalidArgument("absdiff: image shapes differ (" + std::to_string(a.width()) + "x" +
                              std::to_string(a.height()) + "x" + std::to_string(a.channels()) +
                              " vs " + std::to_string(b.width()) + "x" +
                              std::to_string(b.height()) + "x" + std::to_string(b.channels()) + ")");
    Image out(a.width(), a.height(), a.channels());
    auto pa = a.data();
    auto pb = b.data();
    auto po = out.data();
    for (std::size_t i = 0; i < po.size(); ++i)
        po[i] = static_cast<std::uint8_t>(pa[i] > pb[i] ? pa[i] - pb[i] : pb[i] - pa[i]);
    return out;
}

} // namespace invmark

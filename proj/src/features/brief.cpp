#include <invmark/error.hpp>
#include <invmark/features.hpp>

#include <bit>
#include <cmath>

namespace invmark::features {

namespace {

constexpr std::array<std::int8_t, 4> kPattern[kDescriptorBits] = {
#include "brief_pattern.inc"
};

} // namespace

std::span<const std::array<std::int8_t, 4>> brief_pattern() noexcept { return kPattern; }

Descriptor Descriptor::inverted() const noexcept {
    Descriptor d;
    for (std::size_t i = 0; i < words.size(); ++i) d.words[i] = ~words[i];
    return d;
}

int hamming(const Descriptor& a, const Descriptor& b) noexcept {
    int n = 0;
    for (std::size_t i = 0; i < a.words.size(); ++i) n += std::popcount(a.words[i] ^ b.words[i]);
    return n;
}

std::optional<Descriptor> describe_brief(const Image& smoothed, const Keypoint& kp) {
    if (smoothed.channels() != 1) throw InvalidArgument("describe_brief expects a grayscale image");
    const int cx = static_cast<int>(std::lround(kp.x));
    const int cy = static_cast<int>(std::lround(kp.y));
    if (cx < kPatchRadius || cy < kPatchRadius || cx >= smoothed.width() - kPatchRadius ||
        cy >= smoothed.height() - kPatchRadius)
        return std::nullopt;

    // Every pattern point lies inside the radius-15 disc, so the rotated
    // offsets stay within the patch.
    const double c = std::cos(kp.angle), s = std::sin(kp.angle);
    auto sample = [&](int px, int py) {
        const int rx = static_cast<int>(std::lround(c * px - s * py));
        const int ry = static_cast<int>(std::lround(s * px + c * py));
        return smoothed.at(cx + rx, cy + ry);
    };

    Descriptor d;
    for (int i = 0; i < kDescriptorBits; ++i) {
        const auto& t = kPattern[i];
        if (sample(t[0], t[1]) < sample(t[2], t[3])) d.set(i);
    }
    return d;
}

FeatureSet extract_features(const Image& img, const FeatureConfig& cfg) {
    Image gray = img.channels() == 3 ? grayscale(img) : img;
    FeatureSet out;
    auto keypoints = detect_fast(gray, cfg.fast_threshold, cfg.max_keypoints);
    const Image smoothed = box_blur5(gray);
    for (const auto& kp : keypoints) {
        if (auto d = describe_brief(smoothed, kp)) {
            out.keypoints.push_back(kp);
            out.descriptors.push_back(*d);
        } else {
            ++out.skipped;
        }
    }
    return out;
}

} // namespace invmark::features

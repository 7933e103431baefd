#pragma once

#include <invmark/image.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace invmark::features {

/// Half-size of the 31x31 orientation/description patch. Keypoints keep at
/// least this many pixels between themselves and every image border.
inline constexpr int kPatchRadius = 15;
inline constexpr int kMinImageSize = 2 * kPatchRadius + 2; // 32
inline constexpr int kDescriptorBits = 256;

struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    double score = 0.0;
    double angle = 0.0; // radians in [-pi, pi], intensity-centroid direction
};

struct Descriptor {
    std::array<std::uint64_t, 4> words{};

    bool bit(int i) const noexcept { return (words[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) noexcept { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    Descriptor inverted() const noexcept;

    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

int hamming(const Descriptor& a, const Descriptor& b) noexcept;

struct Match {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    int distance = 0;

    friend bool operator==(const Match&, const Match&) = default;
};

/// Luma = round(0.299 R + 0.587 G + 0.114 B), computed in exact integers.
Image grayscale(const Image& rgb);

/// 5x5 mean filter with replicated borders, rounded to nearest.
Image box_blur5(const Image& gray);

/// FAST-9 segment test on the radius-3 Bresenham circle. Returns the score
/// (sum of |circle - centre| over the qualifying contiguous arc) or nullopt
/// when no run of 9 pixels is uniformly brighter or darker by more than
/// `threshold`. (x, y) must be at least 3 pixels from every border.
std::optional<int> fast_score(const Image& gray, int x, int y, int threshold);

/// Intensity-centroid orientation over the radius-15 disc around (x, y).
double centroid_angle(const Image& gray, int x, int y);

/// FAST-9 corners with 3x3 non-maximum suppression, strongest first,
/// truncated to `max_keypoints`. Throws InvalidArgument for a non-gray
/// image or one smaller than 32x32.
std::vector<Keypoint> detect_fast(const Image& gray, int threshold, std::size_t max_keypoints);

/// Steered BRIEF over the frozen 256-test pattern, sampled from an image
/// already passed through box_blur5. Returns nullopt when the keypoint is
/// closer than kPatchRadius to a border.
std::optional<Descriptor> describe_brief(const Image& smoothed, const Keypoint& kp);

/// The frozen test pattern: {x1, y1, x2, y2} offsets.
std::span<const std::array<std::int8_t, 4>> brief_pattern() noexcept;

/// Hamming nearest neighbours kept only when mutual and within
/// `max_distance`. Ties resolve to the lowest index. Sorted by index_a.
std::vector<Match> match_bruteforce(std::span<const Descriptor> a, std::span<const Descriptor> b,
                                    int max_distance = 64);

struct FeatureConfig {
    int fast_threshold = 20;
    std::size_t max_keypoints = 500;
    int max_distance = 64;
};

struct FeatureSet {
    std::vector<Keypoint> keypoints; // parallel to descriptors
    std::vector<Descriptor> descriptors;
    std::size_t skipped = 0; // detected but too close to the border to describe
};

/// Grayscale (when needed), detect, smooth, describe.
FeatureSet extract_features(const Image& img, const FeatureConfig& cfg);

} // namespace invmark::features

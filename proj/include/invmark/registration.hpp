#pragma once

#include <invmark/features.hpp>
#include <invmark/frame.hpp>
#include <invmark/homography.hpp>
#include <invmark/image.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace invmark::registration {

/// A correspondence: `src` in the moving (UV) frame, `dst` in the reference
/// (regular) frame.
struct PointPair {
    Point2 src;
    Point2 dst;
};

/// Normalised direct linear transform, least squares over all pairs.
/// Throws InsufficientData for fewer than 4 pairs and DegenerateInput when
/// the system is rank deficient (coincident or collinear points).
Homography solve_homography_dlt(std::span<const PointPair> pairs);

struct RansacConfig {
    int iterations = 1000;
    double inlier_threshold = 2.0; // pixels, symmetric transfer error
    std::size_t min_inliers = 12;
    std::uint64_t seed = 0;
};

/// Per-pair RANSAC seed derived from a run seed, so results do not depend
/// on the order in which pairs are processed.
std::uint64_t pair_seed(std::uint64_t run_seed, std::size_t pair_index) noexcept;

struct RansacResult {
    Homography h;
    std::vector<bool> inliers; // parallel to the input pairs
    std::size_t inlier_count = 0;
};

/// Mean of forward (|H src - dst|) and backward (|H^-1 dst - src|)
/// reprojection distances. `h_inv` must be `h.inverse()`.
double symmetric_transfer_error(const Homography& h, const Homography& h_inv, const PointPair& p) noexcept;

/// 4-point RANSAC with a final DLT refit on the winning consensus set.
/// Bit-reproducible for a given seed. Throws InsufficientData (< 4 pairs) or
/// AlignmentFailed when the best model has fewer than `min_inliers`.
RansacResult estimate_homography_ransac(std::span<const PointPair> pairs, const RansacConfig& cfg);

struct WarpResult {
    Image image;
    Image valid; // 1 channel, 255 where the source covered the pixel, else 0
};

/// Inverse-mapping warp: output(x, y) samples `img` bilinearly at
/// h^-1 (x, y). Uncovered pixels are 0 and flagged invalid.
WarpResult warp(const Image& img, const Homography& h, int out_width, int out_height);

struct AlignConfig {
    features::FeatureConfig features;
    RansacConfig ransac;
};

/// Everything computed while aligning one pair; the CLI draws it.
struct AlignmentReport {
    features::FeatureSet regular_features;
    features::FeatureSet uv_features;
    std::vector<features::Match> matches; // a = regular, b = uv
    std::vector<bool> inliers;            // parallel to matches, empty on failure
    Homography h;                         // UV -> regular
    std::size_t inlier_count = 0;
    bool failed = false;
    std::string failure;
};

AlignmentReport estimate_alignment(const Image& regular, const Image& uv, const AlignConfig& cfg);

/// Extract, match, estimate, warp. On success the returned pair carries the
/// UV -> regular homography and `uv` is replaced by its warped version with
/// `uv_valid` set. On failure the images are untouched, the alignment is
/// identity and `alignment_failed` is set.
FramePair align_pair(FramePair pair, const AlignConfig& cfg);

} // namespace invmark::registration

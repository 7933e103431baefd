#include <invmark/error.hpp>
#include <invmark/registration.hpp>

namespace invmark::registration {

AlignmentReport estimate_alignment(const Image& regular, const Image& uv, const AlignConfig& cfg) {
    if (regular.width() != uv.width() || regular.height() != uv.height())
        throw DimensionMismatch("align: regular and UV frames differ in size");

    AlignmentReport r;
    r.regular_features = features::extract_features(regular, cfg.features);
    r.uv_features = features::extract_features(uv, cfg.features);
    r.matches = features::match_bruteforce(r.regular_features.descriptors, r.uv_features.descriptors,
                                           cfg.features.max_distance);

    std::vector<PointPair> pairs;
    pairs.reserve(r.matches.size());
    for (const auto& m : r.matches) {
        const auto& a = r.regular_features.keypoints[m.index_a];
        const auto& b = r.uv_features.keypoints[m.index_b];
        pairs.push_back({{b.x, b.y}, {a.x, a.y}});
    }

    try {
        RansacResult fit = estimate_homography_ransac(pairs, cfg.ransac);
        r.h = fit.h;
        r.inliers = std::move(fit.inliers);
        r.inlier_count = fit.inlier_count;
    } catch (const AlignmentFailed& e) {
        r.failed = true;
        r.inlier_count = e.inliers();
        r.failure = e.what();
    } catch (const InsufficientData& e) {
        r.failed = true;
        r.failure = e.what();
    }
    return r;
}

FramePair align_pair(FramePair pair, const AlignConfig& cfg) {
    const AlignmentReport r = estimate_alignment(pair.regular.image, pair.uv.image, cfg);
    pair.inliers = r.inlier_count;
    if (r.failed) {
        pair.alignment = Homography::identity();
        pair.alignment_failed = true;
        pair.uv_valid = Image(pair.uv.image.width(), pair.uv.image.height(), 1, 255);
        return pair;
    }
    WarpResult warped = warp(pair.uv.image, r.h, pair.regular.image.width(), pair.regular.image.height());
    pair.alignment = r.h;
    pair.alignment_failed = false;
    pair.uv.image = std::move(warped.image);
    pair.uv_valid = std::move(warped.valid);
    return pair;
}

} // namespace invmark::registration

#include <invmark/error.hpp>
#include <invmark/registration.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <limits>
#include <random>

namespace invmark::registration {

double symmetric_transfer_error(const Homography& h, const Homography& h_inv, const PointPair& p) noexcept {
    const Point2 fwd = h.apply(p.src);
    const Point2 bwd = h_inv.apply(p.dst);
    const double e = 0.5 * (std::hypot(fwd.x - p.dst.x, fwd.y - p.dst.y) + std::hypot(bwd.x - p.src.x, bwd.y - p.src.y));
    return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

std::uint64_t pair_seed(std::uint64_t run_seed, std::size_t pair_index) noexcept {
    // splitmix64 finaliser
    std::uint64_t z = run_seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(pair_index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct Consensus {
    std::size_t count = 0;
    double error = std::numeric_limits<double>::infinity(); // summed over inliers
};

Consensus score(const Homography& h, std::span<const PointPair> pairs, double threshold, std::vector<bool>* flags) {
    Consensus c{0, 0.0};
    const Homography h_inv = h.inverse();
    if (flags) flags->assign(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double e = symmetric_transfer_error(h, h_inv, pairs[i]);
        if (e <= threshold) {
            ++c.count;
            c.error += e;
            if (flags) (*flags)[i] = true;
        }
    }
    return c;
}

bool better(const Consensus& a, const Consensus& b) {
    return a.count > b.count || (a.count == b.count && a.error < b.error);
}

} // namespace

RansacResult estimate_homography_ransac(std::span<const PointPair> pairs, const RansacConfig& cfg) {
    if (cfg.iterations < 1) throw InvalidArgument("RANSAC needs at least one iteration");
    if (!(cfg.inlier_threshold > 0.0)) throw InvalidArgument("RANSAC inlier threshold must be positive");
    if (pairs.size() < 4)
        throw InsufficientData("RANSAC needs at least 4 matches, got " + std::to_string(pairs.size()));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);

    std::optional<Homography> best;
    Consensus best_score;
    PointPair sample[4];
    for (int it = 0; it < cfg.iterations; ++it) {
        std::size_t idx[4];
        for (int k = 0; k < 4; ++k) {
            bool fresh = false;
            while (!fresh) {
                idx[k] = pick(rng);
                fresh = true;
                for (int j = 0; j < k; ++j) fresh = fresh && idx[j] != idx[k];
            }
            sample[k] = pairs[idx[k]];
        }
        try {
            const Homography h = solve_homography_dlt(sample);
            const Consensus c = score(h, pairs, cfg.inlier_threshold, nullptr);
            if (!best || better(c, best_score)) {
                best = h;
                best_score = c;
            }
        } catch (const DegenerateInput&) {
            // collinear or singular sample; draw again next iteration
        }
    }

    if (!best || best_score.count < cfg.min_inliers || best_score.count < 4)
        throw AlignmentFailed(best ? best_score.count : 0, std::max<std::size_t>(cfg.min_inliers, 4));

    RansacResult result{*best, {}, 0};
    score(*best, pairs, cfg.inlier_threshold, &result.inliers);
    result.inlier_count = best_score.count;

    std::vector<PointPair> consensus;
    consensus.reserve(best_score.count);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (result.inliers[i]) consensus.push_back(pairs[i]);
    try {
        const Homography refit = solve_homography_dlt(consensus);
        std::vector<bool> flags;
        const Consensus c = score(refit, pairs, cfg.inlier_threshold, &flags);
        if (c.count >= best_score.count) {
            result.h = refit;
            result.inliers = std::move(flags);
            result.inlier_count = c.count;
        }
    } catch (const DegenerateInput&) {
        // keep the minimal-sample model
    }
    return result;
}

} // namespace invmark::registration

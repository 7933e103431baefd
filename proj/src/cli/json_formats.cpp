#include "commands.hpp"

#include <invmark/error.hpp>

#include <fstream>

namespace invmark::cli {

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
}

nlohmann::json homography_json(const Homography& h) { return h.matrix(); }

void add_alignment_options(CLI::App& app, registration::AlignConfig& cfg) {
    app.add_option("--fast-threshold", cfg.features.fast_threshold, "FAST intensity threshold")
        ->capture_default_str()
        ->check(CLI::Range(0, 255));
    app.add_option("--max-keypoints", cfg.features.max_keypoints, "Keypoint budget per frame")->capture_default_str();
    app.add_option("--max-distance", cfg.features.max_distance, "Largest accepted Hamming distance")
        ->capture_default_str()
        ->check(CLI::Range(0, 256));
    app.add_option("--ransac-iterations", cfg.ransac.iterations, "RANSAC iterations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--inlier-threshold", cfg.ransac.inlier_threshold, "Symmetric transfer error bound (px)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--min-inliers", cfg.ransac.min_inliers, "Inliers needed to accept a homography")
        ->capture_default_str();
    app.add_option("--seed", cfg.ransac.seed, "RANSAC seed")->capture_default_str();
}

std::filesystem::path inside(const std::filesystem::path& out_dir, const std::filesystem::path& sub) {
    const auto base = std::filesystem::weakly_canonical(out_dir);
    const auto full = std::filesystem::weakly_canonical(sub.is_absolute() ? sub : out_dir / sub);
    auto [b, f] = std::mismatch(base.begin(), base.end(), full.begin(), full.end());
    if (b != base.end()) throw InvalidArgument(sub.string() + " lies outside the output directory");
    return full;
}

} // namespace invmark::cli

// Shared helpers for the unit, property and acceptance tests: independent
// reference implementations, scene factories and temporary directories.
#pragma once

#include <invmark/features.hpp>
#include <invmark/image.hpp>
#include <invmark/palette.hpp>
#include <invmark/synth.hpp>

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace invmark::testing {

class TempDir {
  public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

  private:
    std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

// Every regular file under `root`, as relative path -> bytes.
std::vector<std::pair<std::string, std::string>> snapshot_tree(const std::filesystem::path& root);

Image random_image(std::mt19937_64& rng, int w, int h, int channels);
LabelMask random_mask(std::mt19937_64& rng, int w, int h, int n_labels);
features::Descriptor random_descriptor(std::mt19937_64& rng);

// Reference implementations written independently of the library.
namespace oracle {

struct Ratio {
    std::size_t inter = 0;
    std::size_t uni = 0;
};
Ratio count_overlap(const LabelMask& a, const LabelMask& b, std::uint8_t label);
double iou(const LabelMask& a, const LabelMask& b, std::uint8_t label);
// Mean and population std of all pairwise IoUs, computed from raw counts.
std::pair<double, double> pairwise_stats(std::span<const LabelMask> masks, std::uint8_t label);

// Plain segment test: some 9 contiguous circle pixels all brighter than
// c + t or all darker than c - t.
bool is_fast_corner(const Image& gray, int x, int y, int threshold);

// O(n*m) mutual nearest neighbour matcher.
std::vector<features::Match> mutual_matches(std::span<const features::Descriptor> a,
                                            std::span<const features::Descriptor> b, int max_distance);

// Union-find connected components; returns a component id per pixel and
// the size of each component.
struct Components {
    std::vector<int> id;
    std::vector<std::size_t> size;
};
Components components4(const LabelMask& mask);

double bilinear_sample(const Image& img, double x, double y, int c);

} // namespace oracle

// Scene factories used by the synthetic-oracle tests.
synth::SceneSpec dark_scene(std::uint64_t seed, double noise_sigma);
synth::SceneSpec ambient_scene(std::uint64_t seed, double max_translation);
synth::SceneSpec three_class_scene(std::uint64_t seed, CaptureMode mode);

// Per-label IoU of `got` against `truth`, averaged over labels present in truth.
double mean_label_iou(const LabelMask& got, const LabelMask& truth);

// Result of a randomized invariant check.
struct PropertyResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const noexcept { return failures == 0 && cases > 0; }
};

PropertyResult prop_threshold_monotonic(std::uint64_t seed, std::size_t cases);
PropertyResult prop_absdiff_symmetric(std::uint64_t seed, std::size_t cases);
PropertyResult prop_match_partial_injective(std::uint64_t seed, std::size_t cases);
PropertyResult prop_warp_round_trip(std::uint64_t seed, std::size_t cases);
PropertyResult prop_empty_mask_conventions(std::uint64_t seed, std::size_t cases);
PropertyResult prop_iou_matches_oracle(std::uint64_t seed, std::size_t cases);
PropertyResult prop_agreement_matches_oracle(std::uint64_t seed, std::size_t cases);
PropertyResult prop_pairs_half_triggers(std::uint64_t seed, std::size_t cases);

} // namespace invmark::testing

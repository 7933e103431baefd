#pragma once

#include <invmark/frame.hpp>
#include <invmark/ingest.hpp>
#include <invmark/palette.hpp>
#include <invmark/registration.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace invmark::segmentation {

/// Nearest emission chroma (RGB divided by its max channel) among the
/// classes whose threshold the pixel's max channel reaches; 0 when none
/// qualify. Ties go to the lowest label.
std::uint8_t classify_pixel(Rgb rgb, const ClassPalette& palette) noexcept;

/// classify_pixel over every pixel of a 3-channel image. Pixels where
/// `valid` (if given) is 0 stay background.
LabelMask classify_image(const Image& rgb, const ClassPalette& palette, const Image* valid = nullptr);

/// Dark-room regime: the UV frame alone shows the paint.
/// Throws InvalidArgument for an empty palette or a non-UV frame.
LabelMask dark_mode_mask(const Frame& uv, const ClassPalette& palette);

enum class CameraMotion : std::uint8_t { Static, Moving };

/// Ambient regime: classify |regular - uv| inside the warp validity mask.
/// A pair without alignment is taken as identity for a static camera and
/// rejected with PreconditionViolation for a moving one.
LabelMask ambient_mode_mask(const FramePair& pair, const ClassPalette& palette,
                            CameraMotion motion = CameraMotion::Static);

/// Clears 4-connected same-label components smaller than `min_area`.
LabelMask postprocess(const LabelMask& mask, int min_area);

/// `{"classes": [{"label": int, "color": [r,g,b], "threshold": int}], "min_area": int}`
struct PaletteConfig {
    ClassPalette palette;
    int min_area = 4;
};

PaletteConfig parse_palette_config(const std::string& json_text);
PaletteConfig read_palette_config(const std::filesystem::path& path);
std::string serialize_palette_config(const PaletteConfig& cfg);

struct AnnotateConfig {
    CaptureMode mode = CaptureMode::DarkRoom;
    CameraMotion motion = CameraMotion::Static;
    registration::AlignConfig align;
    int min_area = 4;
    unsigned jobs = 0;                   // 0: hardware concurrency
    std::optional<std::pair<int, int>> resize; // frames are resized before anything else
};

enum class AlignmentStatus : std::uint8_t { Skipped, Identity, Aligned, Failed };
std::string_view to_string(AlignmentStatus s) noexcept;

struct AnnotatedSample {
    std::size_t pair_index = 0;
    std::int64_t regular_seq = 0;
    std::int64_t uv_seq = 0;
    Image regular;
    LabelMask mask;
    AlignmentStatus alignment = AlignmentStatus::Skipped;
    Homography h;
    std::size_t inliers = 0;
    std::string error; // non-empty when the pair could not be annotated

    bool ok() const noexcept { return error.empty(); }
};

/// Annotates one pair (index `pair_index` feeds the RANSAC seed).
AnnotatedSample annotate_pair(const FramePair& pair, std::size_t pair_index, const ClassPalette& palette,
                              const AnnotateConfig& cfg);

/// Annotates every pair on a worker pool; output is in pair order and
/// per-pair failures are recorded in the sample rather than thrown.
std::vector<AnnotatedSample> annotate_pairs(const std::vector<FramePair>& pairs, const ClassPalette& palette,
                                            const AnnotateConfig& cfg);

struct Dataset {
    CaptureMode mode = CaptureMode::DarkRoom;
    std::vector<AnnotatedSample> samples;

    std::size_t failures() const noexcept;
};

/// load_stream + pair_stream + annotate_pairs. Stream-level problems
/// (missing files, alternation violations) propagate as exceptions.
Dataset annotate_stream(const std::filesystem::path& manifest_path, const ClassPalette& palette,
                        const AnnotateConfig& cfg);

/// Writes images/regular_NNNNN.png, masks/mask_NNNNN.png, manifest.json and,
/// with `preview`, preview/overlay_NNNNN.png under `out_dir`.
void write_dataset(const Dataset& dataset, const ClassPalette& palette, const std::filesystem::path& out_dir,
                   bool preview);

/// Regular frame with labelled pixels blended half-way toward their
/// class emission colour.
Image overlay(const Image& regular, const LabelMask& mask, const ClassPalette& palette);

/// Zero-padded sample file stem, e.g. ("mask_", 7) -> "mask_00007.png".
std::string sample_file_name(std::string_view prefix, std::size_t index);

} // namespace invmark::segmentation

#pragma once

#include <invmark/frame.hpp>
#include <invmark/homography.hpp>
#include <invmark/palette.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace invmark::synth {

enum class BackgroundKind : std::uint8_t { Flat, Checkerboard, RandomTexture };

/// Surface reflectance (albedo, 0..255 per channel) of everything that is
/// not a blob. Checkerboard alternates `color`/`color2` every `cell` pixels;
/// RandomTexture blends between them with smooth two-octave value noise.
struct Background {
    BackgroundKind kind = BackgroundKind::Flat;
    Rgb color{200, 200, 200};
    Rgb color2{40, 40, 40};
    double cell = 16.0;
};

struct Ellipse {
    double cx = 0, cy = 0, rx = 1, ry = 1, angle = 0;
};

struct Polygon {
    std::vector<Point2> vertices;
};

using Shape = std::variant<Ellipse, Polygon>;

/// A painted object. Later blobs occlude earlier ones.
struct BlobSpec {
    std::uint8_t label = 1;
    Rgb emission{255, 0, 0};
    Rgb albedo{160, 160, 160};
    Shape shape = Ellipse{};
    Point2 velocity; // px per captured frame, in scene coordinates
};

/// Per-frame camera steps: translation of magnitude in
/// [max_translation / 2, max_translation] in a random direction and a
/// rotation about the image centre in [-max_rotation, max_rotation].
/// The accumulated pose is reflected back inside ±max_offset px and
/// ±max_angle rad so the scene stays in view.
struct CameraMotionSpec {
    double max_translation = 0.0;
    double max_rotation = 0.0;
    double max_offset = 20.0;
    double max_angle = 0.1;
};

struct SceneSpec {
    int width = 160;
    int height = 120;
    Background background;
    std::vector<BlobSpec> blobs;
    CameraMotionSpec camera;
    double uv_emission_gain = 1.0; // 0..1
    double ambient_level = 0.0;    // 0..255, light present in every frame
    double regular_light = 0.0;    // 0..255, extra light in regular frames only
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    double camera_rate_hz = 30.0;
    CaptureMode mode = CaptureMode::DarkRoom;
};

/// Throws InvalidArgument for bad sizes, gains, levels, negative noise, or a
/// blob that does not start inside the image.
void validate(const SceneSpec& spec);

struct SynthStream {
    std::vector<Frame> frames;       // alternating, frame 0 regular
    std::vector<LabelMask> masks;    // one per pair, in the regular frame's coordinates
    std::vector<Homography> cameras; // per frame, scene -> image
};

/// Throws InvalidArgument when n_frames < 2 or the scene is invalid.
SynthStream generate_stream(const SceneSpec& spec, int n_frames);

/// Per-frame cumulative camera homographies (frame 0 is identity).
std::vector<Homography> camera_path(const SceneSpec& spec, int n_frames);

/// Renders capture `frame_index` seen through `camera`. Noise is drawn from
/// a generator keyed on (seed, frame_index).
Image render_frame(const SceneSpec& spec, const Homography& camera, int frame_index, LightKind kind);

/// Label of the topmost blob covering each pixel centre.
LabelMask render_truth(const SceneSpec& spec, const Homography& camera, int frame_index);

/// Relative homography mapping the UV capture of pair `pair_index` onto its
/// regular capture.
Homography pair_alignment(const SynthStream& stream, std::size_t pair_index);

/// One class per distinct blob label; threshold = 40% of the expected peak
/// response (gain times the emission's max channel), at least 1.
ClassPalette palette_for(const SceneSpec& spec);

SceneSpec parse_scene_spec(const std::string& json_text);
std::string serialize_scene_spec(const SceneSpec& spec);

/// frames/frame_NNNNN.png + manifest.json (ingest format), plus
/// truth/mask_NNNNN.png, truth/homographies.json and palette.json.
void write_stream(const SynthStream& stream, const SceneSpec& spec, const std::filesystem::path& out_dir);

} // namespace invmark::synth

#pragma once

#include <invmark/homography.hpp>
#include <invmark/image.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace invmark {

enum class LightKind : std::uint8_t { Regular, UV };

/// DarkRoom alternates regular and UV lighting in a controlled room;
/// AmbientBlink only blinks the UV light under uncontrolled ambient light.
enum class CaptureMode : std::uint8_t { DarkRoom, AmbientBlink };

std::string_view to_string(LightKind kind) noexcept;
std::string_view to_string(CaptureMode mode) noexcept;

/// One capture. `seq` is the trigger index within the stream.
struct Frame {
    Image image; // 3-channel
    LightKind kind = LightKind::Regular;
    std::int64_t seq = 0;
    std::int64_t timestamp_ms = 0;
};

/// Adjacent (regular, UV) captures. Once aligned, `uv` holds the UV image
/// warped into regular-frame coordinates and `uv_valid` marks the pixels the
/// warp could fill (255) versus those that fell outside the source (0).
struct FramePair {
    /// Throws InvalidArgument unless the kinds are (Regular, UV) and the
    /// sequence indices are adjacent.
    FramePair(Frame regular_frame, Frame uv_frame);

    Frame regular;
    Frame uv;
    std::optional<Homography> alignment; // UV -> regular
    std::optional<Image> uv_valid;
    bool alignment_failed = false;
    std::size_t inliers = 0;
};

} // namespace invmark

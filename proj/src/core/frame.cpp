#include <invmark/error.hpp>
#include <invmark/frame.hpp>

#include <string>

namespace invmark {

std::string_view to_string(LightKind kind) noexcept {
    return kind == LightKind::Regular ? "regular" : "uv";
}

std::string_view to_string(CaptureMode mode) noexcept {
    return mode == CaptureMode::DarkRoom ? "dark" : "ambient";
}

FramePair::FramePair(Frame regular_frame, Frame uv_frame)
    : regular(std::move(regular_frame)), uv(std::move(uv_frame)) {
    if (regular.kind != LightKind::Regular || uv.kind != LightKind::UV)
        throw InvalidArgument("frame pair must be (regular, uv)");
    const auto gap = regular.seq - uv.seq;
    if (gap != 1 && gap != -1)
        throw InvalidArgument("frame pair seqs " + std::to_string(regular.seq) + " and " +
                              std::to_string(uv.seq) + " are not adjacent");
}

} // namespace invmark

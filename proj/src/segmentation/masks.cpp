#include <invmark/error.hpp>
#include <invmark/segmentation.hpp>

namespace invmark::segmentation {

LabelMask dark_mode_mask(const Frame& uv, const ClassPalette& palette) {
    if (palette.empty()) throw InvalidArgument("dark_mode_mask: palette is empty");
    if (uv.kind != LightKind::UV) throw InvalidArgument("dark_mode_mask expects a UV frame");
    return classify_image(uv.image, palette);
}

LabelMask ambient_mode_mask(const FramePair& pair, const ClassPalette& palette, CameraMotion motion) {
    if (palette.empty()) throw InvalidArgument("ambient_mode_mask: palette is empty");
    if (motion == CameraMotion::Moving && !pair.alignment)
        throw PreconditionViolation("ambient_mode_mask: moving-camera pair has not been aligned");
    if (!pair.regular.image.same_shape(pair.uv.image))
        throw DimensionMismatch("ambient_mode_mask: regular and UV frames differ in size");

    const Image diff = absdiff(pair.regular.image, pair.uv.image);
    return classify_image(diff, palette, pair.uv_valid ? &*pair.uv_valid : nullptr);
}

} // namespace invmark::segmentation

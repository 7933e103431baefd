#pragma once

#include <invmark/image.hpp>
#include <invmark/palette.hpp>

#include <filesystem>

namespace invmark::io {

/// Decodes an 8-bit PNG. `channels` = 3 forces RGB, 1 forces grayscale, 0
/// keeps whatever the file holds (gray -> 1, colour -> 3); alpha is dropped.
/// Throws MissingFile or IoError.
Image read_png(const std::filesystem::path& path, int channels = 3);

/// Writes a 1- or 3-channel 8-bit PNG. Output bytes depend only on the image.
void write_png(const std::filesystem::path& path, const Image& img);

/// Label masks travel as 8-bit grayscale PNGs whose values are the labels.
LabelMask read_mask_png(const std::filesystem::path& path);
void write_mask_png(const std::filesystem::path& path, const LabelMask& mask);

} // namespace invmark::io

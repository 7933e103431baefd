#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace invmark {

/// Interleaved 8-bit image, row-major, 1 or 3 channels.
class Image {
  public:
    Image() = default;
    /// Zero-filled image. Throws InvalidArgument on a zero dimension or a
    /// channel count other than 1 or 3.
    Image(int width, int height, int channels);
    Image(int width, int height, int channels, std::uint8_t fill);
    Image(int width, int height, int channels, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int channels() const noexcept { return channels_; }
    bool empty() const noexcept { return data_.empty(); }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }

    std::span<const std::uint8_t> data() const noexcept { return data_; }
    std::span<std::uint8_t> data() noexcept { return data_; }

    std::uint8_t at(int x, int y, int c = 0) const noexcept { return data_[index(x, y, c)]; }
    std::uint8_t& at(int x, int y, int c = 0) noexcept { return data_[index(x, y, c)]; }

    const std::uint8_t* row(int y) const noexcept { return data_.data() + index(0, y, 0); }
    std::uint8_t* row(int y) noexcept { return data_.data() + index(0, y, 0); }

    bool same_shape(const Image& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
    }

    friend bool operator==(const Image&, const Image&) = default;

  private:
    std::size_t index(int x, int y, int c) const noexcept {
        return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(x)) *
                   static_cast<std::size_t>(channels_) +
               static_cast<std::size_t>(c);
    }

    int width_ = 0;
    int height_ = 0;
    int channels_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Round half away from zero, then clamp to 0..255.
std::uint8_t saturate_u8(double v) noexcept;

/// Bilinear resize with half-pixel-centre sampling.
Image resize_bilinear(const Image& img, int new_width, int new_height);

/// Per-sample absolute difference. Shapes must match.
Image absdiff(const Image& a, const Image& b);

} // namespace invmark

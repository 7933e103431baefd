#include <invmark/error.hpp>
#include <invmark/png_io.hpp>

#include <png.h>

#include <cstring>
#include <system_error>

namespace invmark::io {

namespace {

struct PngImage {
    png_image img;
    PngImage() {
        std::memset(&img, 0, sizeof img);
        img.version = PNG_IMAGE_VERSION;
    }
    ~PngImage() { png_image_free(&img); }
    PngImage(const PngImage&) = delete;
    PngImage& operator=(const PngImage&) = delete;
};

} // namespace

Image read_png(const std::filesystem::path& path, int channels) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw MissingFile(path);
    if (channels != 0 && channels != 1 && channels != 3)
        throw InvalidArgument("read_png: channels must be 0, 1 or 3");

    PngImage png;
    if (!png_image_begin_read_from_file(&png.img, path.c_str()))
        throw IoError("cannot decode " + path.string() + ": " + png.img.message);

    if (channels == 0) channels = (png.img.format & PNG_FORMAT_FLAG_COLOR) ? 3 : 1;
    png.img.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

    const int width = static_cast<int>(png.img.width);
    const int height = static_cast<int>(png.img.height);
    std::vector<std::uint8_t> data(PNG_IMAGE_SIZE(png.img));
    if (!png_image_finish_read(&png.img, nullptr, data.data(), 0, nullptr))
        throw IoError("cannot decode " + path.string() + ": " + png.img.message);
    return Image(width, height, channels, std::move(data));
}

void write_png(const std::filesystem::path& path, const Image& img) {
    if (img.empty()) throw InvalidArgument("write_png: empty image");
    PngImage png;
    png.img.width = static_cast<png_uint_32>(img.width());
    png.img.height = static_cast<png_uint_32>(img.height());
    png.img.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&png.img, path.c_str(), 0, img.data().data(), 0, nullptr))
        throw IoError("cannot write " + path.string() + ": " + png.img.message);
}

LabelMask read_mask_png(const std::filesystem::path& path) {
    Image img = read_png(path, 0);
    if (img.channels() != 1) throw IoError(path.string() + " is not a single-channel mask");
    auto d = img.data();
    return LabelMask(img.width(), img.height(), std::vector<std::uint8_t>(d.begin(), d.end()));
}

void write_mask_png(const std::filesystem::path& path, const LabelMask& mask) {
    write_png(path, Image(mask.width, mask.height, 1, mask.labels));
}

} // namespace invmark::io

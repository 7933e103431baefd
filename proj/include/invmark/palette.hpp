#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace invmark {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    std::uint8_t max_channel() const noexcept;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// One fluorescent paint: the label it annotates, the colour it emits under
/// UV, and the minimum max-channel response that counts as paint.
struct PaintClass {
    std::uint8_t label = 1;
    Rgb emission;
    std::uint8_t threshold = 0;
};

class ClassPalette {
  public:
    ClassPalette() = default;
    /// Throws InvalidArgument on a zero or duplicate label, a duplicate
    /// emission colour, or a black emission colour.
    explicit ClassPalette(std::vector<PaintClass> classes);

    std::span<const PaintClass> classes() const noexcept { return classes_; }
    bool empty() const noexcept { return classes_.empty(); }
    std::size_t size() const noexcept { return classes_.size(); }
    bool contains(std::uint8_t label) const noexcept;
    const PaintClass* find(std::uint8_t label) const noexcept;

  private:
    std::vector<PaintClass> classes_;
};

/// Per-pixel class ids, 0 = background.
struct LabelMask {
    LabelMask() = default;
    LabelMask(int w, int h); // all background
    LabelMask(int w, int h, std::vector<std::uint8_t> l);

    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> labels;

    std::uint8_t at(int x, int y) const noexcept { return labels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) noexcept { return labels[static_cast<std::size_t>(y) * width + x]; }
    std::size_t count(std::uint8_t label) const noexcept;

    friend bool operator==(const LabelMask&, const LabelMask&) = default;
};

/// Throws InvalidArgument if any nonzero label is missing from `palette`.
void check_labels(const LabelMask& mask, const ClassPalette& palette);

} // namespace invmark

#include <invmark/error.hpp>
#include <invmark/palette.hpp>

#include <algorithm>
#include <string>

namespace invmark {

std::uint8_t Rgb::max_channel() const noexcept { return std::max({r, g, b}); }

ClassPalette::ClassPalette(std::vector<PaintClass> classes) : classes_(std::move(classes)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const PaintClass& c = classes_[i];
        if (c.label == 0) throw InvalidArgument("palette label 0 is reserved for background");
        if (c.emission.max_channel() == 0)
            throw InvalidArgument("palette class " + std::to_string(c.label) + " has a black emission colour");
        for (std::size_t j = 0; j < i; ++j) {
            if (classes_[j].label == c.label)
                throw InvalidArgument("duplicate palette label " + std::to_string(c.label));
            if (classes_[j].emission == c.emission)
                throw InvalidArgument("palette classes " + std::to_string(classes_[j].label) + " and " +
                                      std::to_string(c.label) + " share an emission colour");
        }
    }
}

bool ClassPalette::contains(std::uint8_t label) const noexcept { return find(label) != nullptr; }

const PaintClass* ClassPalette::find(std::uint8_t label) const noexcept {
    auto it = std::find_if(classes_.begin(), classes_.end(), [&](const PaintClass& c) { return c.label == label; });
    return it == classes_.end() ? nullptr : &*it;
}

LabelMask::LabelMask(int w, int h) : LabelMask(w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(w, 0)) * static_cast<std::size_t>(std::max(h, 0)))) {}

LabelMask::LabelMask(int w, int h, std::vector<std::uint8_t> l) : width(w), height(h), labels(std::move(l)) {
    if (w < 1 || h < 1) throw InvalidArgument("label mask dimensions must be positive");
    if (labels.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h))
        throw InvalidArgument("label mask buffer size does not match its dimensions");
}

std::size_t LabelMask::count(std::uint8_t label) const noexcept {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

void check_labels(const LabelMask& mask, const ClassPalette& palette) {
    bool seen[256] = {};
    for (auto l : mask.labels) seen[l] = true;
    for (int l = 1; l < 256; ++l)
        if (seen[l] && !palette.contains(static_cast<std::uint8_t>(l)))
            throw InvalidArgument("mask label " + std::to_string(l) + " is not in the palette");
}

} // namespace invmark

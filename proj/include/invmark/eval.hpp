#pragma once

#include <invmark/palette.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace invmark::eval {

/// |a = l and b = l| / |a = l or b = l|; 1.0 when neither mask has the label.
/// Throws InvalidArgument when the masks differ in size.
double iou(const LabelMask& a, const LabelMask& b, std::uint8_t label);

struct AgreementStats {
    double mean = 0.0;
    double std = 0.0; // population standard deviation
    std::size_t n_pairs = 0;
};

/// Mean and population std of `values` (n_pairs = values.size()).
AgreementStats summarize(std::span<const double> values);

/// IoU over every unordered pair of masks (i < j, row-major order).
/// Throws InvalidArgument for fewer than two masks.
AgreementStats agreement_stats(std::span<const LabelMask> masks, std::uint8_t label);

/// IoU of each candidate against one reference mask.
/// Throws InvalidArgument for an empty candidate list.
AgreementStats reference_agreement(std::span<const LabelMask> candidates, const LabelMask& reference,
                                   std::uint8_t label);

/// Labels (nonzero) present in any of the masks, ascending.
std::vector<std::uint8_t> labels_present(std::span<const LabelMask> masks);

} // namespace invmark::eval

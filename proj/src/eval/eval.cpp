#include <invmark/error.hpp>
#include <invmark/eval.hpp>

#include <cmath>

namespace invmark::eval {

double iou(const LabelMask& a, const LabelMask& b, std::uint8_t label) {
    if (a.width != b.width || a.height != b.height) throw InvalidArgument("iou: mask dimensions differ");
    std::size_t inter = 0, uni = 0;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        const bool in_a = a.labels[i] == label, in_b = b.labels[i] == label;
        inter += in_a && in_b;
        uni += in_a || in_b;
    }
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

AgreementStats summarize(std::span<const double> values) {
    AgreementStats s;
    s.n_pairs = values.size();
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / static_cast<double>(values.size()));
    return s;
}

AgreementStats agreement_stats(std::span<const LabelMask> masks, std::uint8_t label) {
    if (masks.size() < 2) throw InvalidArgument("agreement_stats needs at least two masks");
    std::vector<double> values;
    values.reserve(masks.size() * (masks.size() - 1) / 2);
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) values.push_back(iou(masks[i], masks[j], label));
    return summarize(values);
}

AgreementStats reference_agreement(std::span<const LabelMask> candidates, const LabelMask& reference,
                                   std::uint8_t label) {
    if (candidates.empty()) throw InvalidArgument("reference_agreement needs at least one candidate");
    std::vector<double> values;
    values.reserve(candidates.size());
    for (const auto& c : candidates) values.push_back(iou(c, reference, label));
    return summarize(values);
}

std::vector<std::uint8_t> labels_present(std::span<const LabelMask> masks) {
    bool seen[256] = {};
    for (const auto& m : masks)
        for (auto l : m.labels) seen[l] = true;
    std::vector<std::uint8_t> out;
    for (int l = 1; l < 256; ++l)
        if (seen[l]) out.push_back(static_cast<std::uint8_t>(l));
    return out;
}

} // namespace invmark::eval

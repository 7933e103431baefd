#include <invmark/error.hpp>
#include <invmark/segmentation.hpp>

namespace invmark::segmentation {

LabelMask postprocess(const LabelMask& mask, int min_area) {
    if (min_area < 0) throw InvalidArgument("postprocess: min_area must be non-negative");
    LabelMask out = mask;
    if (min_area <= 1) return out;

    const int w = mask.width, h = mask.height;
    std::vector<bool> seen(mask.labels.size(), false);
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < mask.labels.size(); ++start) {
        const std::uint8_t label = mask.labels[start];
        if (label == 0 || seen[start]) continue;

        component.clear();
        stack.assign(1, start);
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            component.push_back(i);
            const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
            auto visit = [&](int nx, int ny) {
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) return;
                const std::size_t j = static_cast<std::size_t>(ny) * w + nx;
                if (!seen[j] && mask.labels[j] == label) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            };
            visit(x - 1, y);
            visit(x + 1, y);
            visit(x, y - 1);
            visit(x, y + 1);
        }
        if (component.size() < static_cast<std::size_t>(min_area))
            for (std::size_t i : component) out.labels[i] = 0;
    }
    return out;
}

} // namespace invmark::segmentation

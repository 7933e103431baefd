#include <invmark/features.hpp>

#include <limits>

namespace invmark::features {

namespace {

// Index of the Hamming-nearest element of `pool` (lowest index on ties).
std::size_t nearest(const Descriptor& d, std::span<const Descriptor> pool, int& best) {
    best = std::numeric_limits<int>::max();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
        const int dist = hamming(d, pool[j]);
        if (dist < best) {
            best = dist;
            arg = j;
        }
    }
    return arg;
}

} // namespace

std::vector<Match> match_bruteforce(std::span<const Descriptor> a, std::span<const Descriptor> b, int max_distance) {
    std::vector<Match> out;
    if (a.empty() || b.empty()) return out;

    std::vector<std::size_t> back(b.size());
    int unused = 0;
    for (std::size_t j = 0; j < b.size(); ++j) back[j] = nearest(b[j], a, unused);

    for (std::size_t i = 0; i < a.size(); ++i) {
        int dist = 0;
        const std::size_t j = nearest(a[i], b, dist);
        if (back[j] == i && dist <= max_distance) out.push_back({i, j, dist});
    }
    return out;
}

} // namespace invmark::features

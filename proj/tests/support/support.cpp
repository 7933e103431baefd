#include "support.hpp"

#include <invmark/controller.hpp>
#include <invmark/error.hpp>
#include <invmark/eval.hpp>
#include <invmark/ingest.hpp>
#include <invmark/log.hpp>
#include <invmark/registration.hpp>
#include <invmark/segmentation.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unistd.h>

namespace invmark::testing {

namespace fs = std::filesystem;

TempDir::TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("invmark_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

std::vector<std::pair<std::string, std::string>> snapshot_tree(const fs::path& root) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!fs::exists(root)) return out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file()) out.emplace_back(fs::relative(e.path(), root).generic_string(), read_file(e.path()));
    std::sort(out.begin(), out.end());
    return out;
}

Image random_image(std::mt19937_64& rng, int w, int h, int channels) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * h * channels);
    for (auto& v : data) v = static_cast<std::uint8_t>(rng() & 0xFF);
    return Image(w, h, channels, std::move(data));
}

LabelMask random_mask(std::mt19937_64& rng, int w, int h, int n_labels) {
    LabelMask m(w, h);
    // Bias toward background so that some labels are often absent.
    for (auto& l : m.labels) l = (rng() % 3 == 0) ? 0 : static_cast<std::uint8_t>(rng() % (n_labels + 1));
    return m;
}

features::Descriptor random_descriptor(std::mt19937_64& rng) {
    features::Descriptor d;
    for (auto& w : d.words) w = rng();
    return d;
}

namespace oracle {

Ratio count_overlap(const LabelMask& a, const LabelMask& b, std::uint8_t label) {
    Ratio r;
    for (int y = 0; y < a.height; ++y)
        for (int x = 0; x < a.width; ++x) {
            const bool pa = a.at(x, y) == label;
            const bool pb = b.at(x, y) == label;
            if (pa && pb) ++r.inter;
            if (pa || pb) ++r.uni;
        }
    return r;
}

double iou(const LabelMask& a, const LabelMask& b, std::uint8_t label) {
    const Ratio r = count_overlap(a, b, label);
    return r.uni == 0 ? 1.0 : static_cast<double>(r.inter) / static_cast<double>(r.uni);
}

std::pair<double, double> pairwise_stats(std::span<const LabelMask> masks, std::uint8_t label) {
    std::vector<double> v;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) v.push_back(iou(masks[i], masks[j], label));
    const double n = static_cast<double>(v.size());
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / n;
    double sq = 0.0;
    for (double x : v) sq += (x - mean) * (x - mean);
    return {mean, std::sqrt(sq / n)};
}

bool is_fast_corner(const Image& gray, int x, int y, int threshold) {
    // Circle of radius 3, listed by walking the perimeter clockwise.
    static const int circle[16][2] = {{0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},  {3, 1},  {2, 2},  {1, 3},
                                      {0, 3},  {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3}};
    const int c = gray.at(x, y);
    for (int sign : {1, -1})
        for (int start = 0; start < 16; ++start) {
            bool all = true;
            for (int k = 0; k < 9 && all; ++k) {
                const auto& o = circle[(start + k) % 16];
                const int p = gray.at(x + o[0], y + o[1]);
                all = sign > 0 ? p > c + threshold : p < c - threshold;
            }
            if (all) return true;
        }
    return false;
}

std::vector<features::Match> mutual_matches(std::span<const features::Descriptor> a,
                                            std::span<const features::Descriptor> b, int max_distance) {
    std::vector<features::Match> out;
    if (a.empty() || b.empty()) return out;
    std::vector<std::vector<int>> d(a.size(), std::vector<int>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            int bits = 0;
            for (int k = 0; k < features::kDescriptorBits; ++k) bits += a[i].bit(k) != b[j].bit(k);
            d[i][j] = bits;
        }
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t bj = 0;
        for (std::size_t j = 1; j < b.size(); ++j)
            if (d[i][j] < d[i][bj]) bj = j;
        std::size_t bi = 0;
        for (std::size_t k = 1; k < a.size(); ++k)
            if (d[k][bj] < d[bi][bj]) bi = k;
        if (bi == i && d[i][bj] <= max_distance) out.push_back({i, bj, d[i][bj]});
    }
    return out;
}

Components components4(const LabelMask& mask) {
    const int w = mask.width, h = mask.height;
    std::vector<int> parent(static_cast<std::size_t>(w) * h);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (x + 1 < w && mask.at(x, y) == mask.at(x + 1, y)) unite(i, i + 1);
            if (y + 1 < h && mask.at(x, y) == mask.at(x, y + 1)) unite(i, i + w);
        }
    Components c;
    c.id.resize(parent.size());
    std::vector<int> remap(parent.size(), -1);
    for (std::size_t i = 0; i < parent.size(); ++i) {
        const int r = find(static_cast<int>(i));
        if (remap[r] < 0) {
            remap[r] = static_cast<int>(c.size.size());
            c.size.push_back(0);
        }
        c.id[i] = remap[r];
        ++c.size[remap[r]];
    }
    return c;
}

double bilinear_sample(const Image& img, double x, double y, int c) {
    const int x0 = static_cast<int>(std::floor(x)), y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0, fy = y - y0;
    auto px = [&](int xx, int yy) {
        xx = std::clamp(xx, 0, img.width() - 1);
        yy = std::clamp(yy, 0, img.height() - 1);
        return static_cast<double>(img.at(xx, yy, c));
    };
    return (1 - fx) * (1 - fy) * px(x0, y0) + fx * (1 - fy) * px(x0 + 1, y0) + (1 - fx) * fy * px(x0, y0 + 1) +
           fx * fy * px(x0 + 1, y0 + 1);
}

} // namespace oracle

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

const Rgb kHues[] = {{255, 0, 0}, {0, 255, 0}, {0, 0, 255}, {255, 255, 0}, {255, 0, 255}, {0, 255, 255}};

synth::Shape random_shape(std::mt19937_64& rng, const synth::SceneSpec& spec, double rmin, double rmax,
                          double margin) {
    const double r = uniform(rng, rmin, rmax);
    const double cx = uniform(rng, r + margin, spec.width - 1 - r - margin);
    const double cy = uniform(rng, r + margin, spec.height - 1 - r - margin);
    if (rng() % 3 != 0) {
        const double ry = r * uniform(rng, 0.6, 1.0);
        return synth::Ellipse{cx, cy, r, ry, uniform(rng, 0, std::numbers::pi)};
    }
    synth::Polygon poly;
    const int n = 4 + static_cast<int>(rng() % 3);
    const double phase = uniform(rng, 0, 2 * std::numbers::pi);
    for (int i = 0; i < n; ++i) {
        const double a = phase + 2 * std::numbers::pi * i / n;
        const double rr = r * uniform(rng, 0.7, 1.0);
        poly.vertices.push_back({cx + rr * std::cos(a), cy + rr * std::sin(a)});
    }
    return poly;
}

std::vector<synth::BlobSpec> random_blobs(std::mt19937_64& rng, const synth::SceneSpec& spec, double rmin,
                                          double rmax, double margin) {
    std::vector<Rgb> hues(std::begin(kHues), std::end(kHues));
    std::shuffle(hues.begin(), hues.end(), rng);
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<synth::BlobSpec> blobs;
    for (int i = 0; i < n; ++i) {
        synth::BlobSpec b;
        b.label = static_cast<std::uint8_t>(i + 1);
        b.emission = hues[i];
        b.shape = random_shape(rng, spec, rmin, rmax, margin);
        blobs.push_back(b);
    }
    return blobs;
}

} // namespace

synth::SceneSpec dark_scene(std::uint64_t seed, double noise_sigma) {
    std::mt19937_64 rng(seed);
    synth::SceneSpec s;
    s.mode = CaptureMode::DarkRoom;
    s.seed = seed;
    s.background.kind = synth::BackgroundKind::RandomTexture;
    s.background.cell = 8;
    s.regular_light = 200;
    s.noise_sigma = noise_sigma;
    s.blobs = random_blobs(rng, s, 10, 24, 2);
    return s;
}

synth::SceneSpec ambient_scene(std::uint64_t seed, double max_translation) {
    std::mt19937_64 rng(seed ^ 0xA5A5A5A5ull);
    synth::SceneSpec s;
    s.mode = CaptureMode::AmbientBlink;
    s.seed = seed;
    s.background = {synth::BackgroundKind::RandomTexture, {255, 255, 255}, {0, 0, 0}, 6};
    s.ambient_level = 120;
    s.uv_emission_gain = 0.6;
    s.noise_sigma = uniform(rng, 0.0, 4.0);
    const bool moving = max_translation > 0;
    if (moving) s.camera = {max_translation, 0.01, 16, 0.05};
    s.blobs = random_blobs(rng, s, 10, moving ? 18 : 24, moving ? 20 : 2);
    return s;
}

synth::SceneSpec three_class_scene(std::uint64_t seed, CaptureMode mode) {
    std::mt19937_64 rng(seed ^ 0x3C3C3C3Cull);
    synth::SceneSpec s;
    s.mode = mode;
    s.seed = seed;
    s.noise_sigma = 2.0;
    if (mode == CaptureMode::DarkRoom) {
        s.background.kind = synth::BackgroundKind::RandomTexture;
        s.regular_light = 200;
    } else {
        s.background = {synth::BackgroundKind::RandomTexture, {255, 255, 255}, {0, 0, 0}, 6};
        s.ambient_level = 120;
        s.uv_emission_gain = 0.6;
    }
    // Red and green overlap in view (green drawn on top) without green
    // hiding most of red; blue sits apart or touches green.
    const double cx = uniform(rng, 60, 75), cy = uniform(rng, 55, 65);
    const double r1 = uniform(rng, 16, 22), r2 = uniform(rng, 14, 20);
    const double a = uniform(rng, -0.6, 0.6) + (rng() % 2 ? std::numbers::pi : 0.0);
    const double d = uniform(rng, 0.55, 0.8) * (r1 + r2);
    synth::BlobSpec red{1, {255, 0, 0}, {160, 160, 160}, synth::Ellipse{cx, cy, r1, r1 * 0.85, a}, {}};
    synth::BlobSpec green{2, {0, 255, 0}, {160, 160, 160},
                          synth::Ellipse{cx + d * std::cos(a), cy + d * std::sin(a), r2, r2, 0}, {}};
    const double bx = uniform(rng, 115, 135), by = uniform(rng, 30, 90);
    synth::Polygon tri{{{bx - 15, by - 14}, {bx + 16, by - 10}, {bx + 2, by + 16}}};
    synth::BlobSpec blue{3, {0, 0, 255}, {160, 160, 160}, tri, {}};
    s.blobs = {red, green, blue};
    return s;
}

double mean_label_iou(const LabelMask& got, const LabelMask& truth) {
    const LabelMask both[] = {got, truth};
    const auto labels = eval::labels_present(both);
    if (labels.empty()) return 1.0;
    double sum = 0.0;
    for (auto l : labels) sum += eval::iou(got, truth, l);
    return sum / static_cast<double>(labels.size());
}

namespace {

void fail(PropertyResult& r, const std::string& what) {
    if (r.failures++ == 0) r.first_failure = "case " + std::to_string(r.cases) + ": " + what;
}

ClassPalette random_palette(std::mt19937_64& rng, std::vector<PaintClass>& classes) {
    for (;;) {
        classes.clear();
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            Rgb e{static_cast<std::uint8_t>(rng() & 0xFF), static_cast<std::uint8_t>(rng() & 0xFF),
                  static_cast<std::uint8_t>(rng() & 0xFF)};
            classes.push_back({static_cast<std::uint8_t>(i + 1), e, static_cast<std::uint8_t>(rng() % 200)});
        }
        try {
            return ClassPalette(classes);
        } catch (const InvalidArgument&) {
            // black or duplicate emission drawn; try again
        }
    }
}

} // namespace

PropertyResult prop_threshold_monotonic(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    std::vector<PaintClass> classes;
    for (; r.cases < cases; ++r.cases) {
        const ClassPalette base = random_palette(rng, classes);
        const Image img = random_image(rng, 8, 8, 3);
        const LabelMask before = segmentation::classify_image(img, base);

        // Raise one class's threshold.
        auto raised = classes;
        const std::size_t k = rng() % raised.size();
        raised[k].threshold = static_cast<std::uint8_t>(std::min(255, raised[k].threshold + 1 + int(rng() % 100)));
        const LabelMask one = segmentation::classify_image(img, ClassPalette(raised));

        // Raise every threshold.
        auto all = classes;
        const int delta = 1 + static_cast<int>(rng() % 100);
        for (auto& c : all) c.threshold = static_cast<std::uint8_t>(std::min(255, c.threshold + delta));
        const LabelMask every = segmentation::classify_image(img, ClassPalette(all));

        for (std::size_t i = 0; i < before.labels.size(); ++i) {
            const auto b = before.labels[i], o = one.labels[i], e = every.labels[i];
            if (b == 0 && o != 0) fail(r, "raising one threshold added a foreground pixel");
            if (b != classes[k].label && o != b) fail(r, "raising a threshold relabelled another class");
            if (o == classes[k].label && b != o) fail(r, "raised class gained a pixel");
            if (b == 0 && e != 0) fail(r, "raising all thresholds added a foreground pixel");
        }
    }
    return r;
}

PropertyResult prop_absdiff_symmetric(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        const int w = 1 + static_cast<int>(rng() % 16), h = 1 + static_cast<int>(rng() % 16);
        const int ch = rng() % 2 ? 3 : 1;
        const Image a = random_image(rng, w, h, ch), b = random_image(rng, w, h, ch);
        const Image ab = absdiff(a, b), ba = absdiff(b, a), aa = absdiff(a, a);
        if (ab != ba) fail(r, "absdiff(a, b) != absdiff(b, a)");
        for (std::size_t i = 0; i < ab.data().size(); ++i) {
            if (ab.data()[i] != std::abs(int(a.data()[i]) - int(b.data()[i]))) fail(r, "absdiff value wrong");
            if (aa.data()[i] != 0) fail(r, "absdiff(a, a) not zero");
        }
    }
    return r;
}

PropertyResult prop_match_partial_injective(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        std::vector<features::Descriptor> a(rng() % 30), b;
        for (auto& d : a) d = random_descriptor(rng);
        // b: noisy copies of some of a, plus fresh random descriptors, shuffled.
        for (const auto& d : a)
            if (rng() % 2) {
                features::Descriptor c = d;
                const int flips = static_cast<int>(rng() % 80);
                for (int f = 0; f < flips; ++f) c.words[rng() % 4] ^= std::uint64_t{1} << (rng() % 64);
                b.push_back(c);
            }
        for (std::size_t n = rng() % 10; n > 0; --n) b.push_back(random_descriptor(rng));
        std::shuffle(b.begin(), b.end(), rng);
        const int max_d = 32 + static_cast<int>(rng() % 64);

        const auto m = features::match_bruteforce(a, b, max_d);
        std::vector<bool> used_a(a.size()), used_b(b.size());
        for (const auto& x : m) {
            if (x.index_a >= a.size() || x.index_b >= b.size()) {
                fail(r, "match index out of range");
                continue;
            }
            if (used_a[x.index_a] || used_b[x.index_b]) fail(r, "descriptor matched twice");
            used_a[x.index_a] = used_b[x.index_b] = true;
            if (x.distance > max_d) fail(r, "match above max distance");
            if (x.distance != features::hamming(a[x.index_a], b[x.index_b])) fail(r, "wrong match distance");
        }
        if (m != oracle::mutual_matches(a, b, max_d)) fail(r, "differs from exhaustive mutual matcher");
    }
    return r;
}

PropertyResult prop_warp_round_trip(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        const int w = 8 + static_cast<int>(rng() % 33), h = 8 + static_cast<int>(rng() % 33);
        const Image img = random_image(rng, w, h, rng() % 2 ? 3 : 1);

        const auto id = registration::warp(img, Homography{}, w, h);
        if (id.image != img) fail(r, "identity warp changed pixels");
        if (std::any_of(id.valid.data().begin(), id.valid.data().end(), [](auto v) { return v != 255; }))
            fail(r, "identity warp left invalid pixels");

        const int dx = static_cast<int>(rng() % 11) - 5, dy = static_cast<int>(rng() % 11) - 5;
        const Homography t = Homography::translation(dx, dy);
        const auto fwd = registration::warp(img, t, w, h);
        const auto back = registration::warp(fwd.image, t.inverse(), w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const bool interior = x + dx >= 0 && x + dx < w && y + dy >= 0 && y + dy < h;
                if (!interior) continue;
                if (back.valid.at(x, y) != 255) fail(r, "interior pixel marked invalid after round trip");
                for (int c = 0; c < img.channels(); ++c)
                    if (back.image.at(x, y, c) != img.at(x, y, c)) fail(r, "round trip changed an interior pixel");
            }

        // Sub-pixel general warp: each valid output equals a hand bilinear sample.
        const double ang = uniform(rng, -0.2, 0.2);
        const Homography g = Homography::rigid(ang, w / 2.0, h / 2.0, uniform(rng, -3, 3), uniform(rng, -3, 3));
        const auto gw = registration::warp(img, g, w, h);
        const Homography gi = g.inverse();
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                if (gw.valid.at(x, y) == 0) continue;
                const Point2 s = gi.apply({double(x), double(y)});
                for (int c = 0; c < img.channels(); ++c) {
                    const double want = oracle::bilinear_sample(img, s.x, s.y, c);
                    if (std::abs(gw.image.at(x, y, c) - want) > 0.5 + 1e-6) fail(r, "warp differs from bilinear");
                }
            }
    }
    return r;
}

PropertyResult prop_empty_mask_conventions(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        const int w = 1 + static_cast<int>(rng() % 12), h = 1 + static_cast<int>(rng() % 12);
        const LabelMask a = random_mask(rng, w, h, 3), b = random_mask(rng, w, h, 3);
        const auto absent = static_cast<std::uint8_t>(4 + rng() % 250);
        if (eval::iou(a, b, absent) != 1.0) fail(r, "iou of two empty regions is not 1");

        LabelMask c = a;
        c.at(static_cast<int>(rng() % w), static_cast<int>(rng() % h)) = absent;
        if (eval::iou(a, c, absent) != 0.0 || eval::iou(c, a, absent) != 0.0)
            fail(r, "iou with one side empty is not 0");

        const LabelMask zero(w, h);
        const std::vector<LabelMask> copies(2 + rng() % 4, zero);
        for (std::uint8_t l : {std::uint8_t{1}, absent}) {
            const auto st = eval::agreement_stats(copies, l);
            if (st.mean != 1.0 || st.std != 0.0) fail(r, "agreement over empty masks is not 1 +- 0");
            const auto rs = eval::reference_agreement(copies, zero, l);
            if (rs.mean != 1.0 || rs.std != 0.0) fail(r, "reference agreement over empty masks is not 1 +- 0");
        }
        if (segmentation::postprocess(zero, static_cast<int>(rng() % 20)) != zero)
            fail(r, "postprocess changed an empty mask");
        std::vector<PaintClass> classes;
        const ClassPalette pal = random_palette(rng, classes);
        if (segmentation::classify_image(Image(w, h, 3, 0), pal) != zero) fail(r, "black image classified");
    }
    return r;
}

PropertyResult prop_iou_matches_oracle(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        const int w = 1 + static_cast<int>(rng() % 16), h = 1 + static_cast<int>(rng() % 16);
        const LabelMask a = random_mask(rng, w, h, 3), b = random_mask(rng, w, h, 3);
        for (std::uint8_t l = 0; l <= 4; ++l)
            if (eval::iou(a, b, l) != oracle::iou(a, b, l)) fail(r, "iou differs from pixel count");
    }
    return r;
}

PropertyResult prop_agreement_matches_oracle(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (; r.cases < cases; ++r.cases) {
        const int w = 1 + static_cast<int>(rng() % 12), h = 1 + static_cast<int>(rng() % 12);
        std::vector<LabelMask> masks;
        for (std::size_t n = 2 + rng() % 5; n > 0; --n) masks.push_back(random_mask(rng, w, h, 2));
        for (std::uint8_t l = 1; l <= 3; ++l) {
            const auto st = eval::agreement_stats(masks, l);
            const auto [mean, sd] = oracle::pairwise_stats(masks, l);
            if (st.mean != mean || st.std != sd) fail(r, "agreement_stats differs from brute force");
            if (st.n_pairs != masks.size() * (masks.size() - 1) / 2) fail(r, "wrong pair count");
        }
    }
    return r;
}

PropertyResult prop_pairs_half_triggers(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    auto previous = log::set_warning_sink([](std::string_view) {});
    for (; r.cases < cases; ++r.cases) {
        controller::ControllerConfig cfg;
        cfg.camera_rate_hz = uniform(rng, 0.5, 240.0);
        cfg.mode = rng() % 2 ? CaptureMode::DarkRoom : CaptureMode::AmbientBlink;
        const double duration = uniform(rng, 0.0, 5000.0);
        const auto sched = controller::schedule(cfg, duration);
        const double period = controller::phase_period_ms(cfg);

        std::vector<Frame> frames;
        for (std::size_t k = 0; k < sched.size(); ++k) {
            if (sched[k].t_ms + period > duration + 1e-6) fail(r, "trigger phase overruns the duration");
            const LightKind kind = controller::expected_light(cfg, static_cast<std::int64_t>(k));
            if (sched[k].uv_on != (kind == LightKind::UV)) fail(r, "uv signal disagrees with expected light");
            frames.push_back(Frame{Image(1, 1, 3), kind, static_cast<std::int64_t>(k), 0});
        }
        if ((sched.size() + 1) * period <= duration - 1e-6) fail(r, "schedule stops early");
        if (ingest::pair_stream(frames).size() != sched.size() / 2) fail(r, "pairs != floor(triggers / 2)");
    }
    log::set_warning_sink(std::move(previous));
    return r;
}

} // namespace invmark::testing

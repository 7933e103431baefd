#include <doctest.h>

#include <invmark/controller.hpp>
#include <invmark/eval.hpp>
#include <invmark/features.hpp>
#include <invmark/ingest.hpp>
#include <invmark/log.hpp>
#include <invmark/registration.hpp>
#include <invmark/segmentation.hpp>

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace invmark;
using namespace invmark::testing;

namespace {

Image smooth_image(std::mt19937_64& rng, int w, int h) {
    std::uniform_real_distribution<double> phase(0, 6.28), period(14, 24);
    const double px = phase(rng), py = phase(rng), tx = period(rng), ty = period(rng);
    Image img(w, h, 1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = saturate_u8(128 + 60 * std::sin(x / tx + px) + 50 * std::cos(y / ty + py));
    return img;
}

Homography small_rigid(std::mt19937_64& rng, int w, int h) {
    std::uniform_real_distribution<double> ang(-0.05, 0.05), t(-4, 4);
    return Homography::rigid(ang(rng), w / 2.0, h / 2.0, t(rng), t(rng));
}

} // namespace

TEST_CASE("resizing a constant image there and back is lossless") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 90), level(0, 255), ch(0, 1);
    for (int i = 0; i < 200; ++i) {
        const int w = dim(rng), h = dim(rng), c = ch(rng) ? 3 : 1;
        const Image img(w, h, c, static_cast<std::uint8_t>(level(rng)));
        CHECK(resize_bilinear(resize_bilinear(img, dim(rng), dim(rng)), w, h) == img);
    }
}

TEST_CASE("image operations leave their inputs untouched") {
    std::mt19937_64 rng(12);
    const Image a = random_image(rng, 48, 40, 3), b = random_image(rng, 48, 40, 3);
    const Image a0 = a, b0 = b;
    (void)resize_bilinear(a, 17, 23);
    (void)absdiff(a, b);
    (void)registration::warp(a, small_rigid(rng, 48, 40), 48, 40);
    const Image g = features::grayscale(a);
    const Image g0 = g;
    (void)features::box_blur5(g);
    (void)features::detect_fast(g, 20, 100);
    CHECK(a == a0);
    CHECK(b == b0);
    CHECK(g == g0);
}

TEST_CASE("dark-room schedules never light both sources and are repeatable") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> rate(0.5, 240), dur(0, 5000), duty(0, 1);
    for (int i = 0; i < 300; ++i) {
        controller::ControllerConfig cfg;
        cfg.camera_rate_hz = rate(rng);
        cfg.regular_intensity = duty(rng);
        cfg.uv_intensity = duty(rng);
        cfg.settle_delay_ms = 0.0;
        const double d = dur(rng);
        const auto s = controller::schedule(cfg, d);
        CHECK(std::none_of(s.begin(), s.end(), [](const auto& e) { return e.regular_on && e.uv_on; }));
        CHECK(controller::schedule(cfg, d) == s);
    }
}

TEST_CASE("pair_stream preserves order") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> len(0, 40), gap(0, 3);
    const log::Sink previous = log::set_warning_sink([](std::string_view) {});
    for (int i = 0; i < 200; ++i) {
        std::vector<Frame> frames;
        std::int64_t seq = 0;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) {
            // Gaps only between pairs.
            if (k % 2 == 0) seq += gap(rng);
            frames.push_back({Image(2, 2, 3), k % 2 ? LightKind::UV : LightKind::Regular, seq++, 0});
        }
        const auto pairs = ingest::pair_stream(frames);
        REQUIRE(pairs.size() == static_cast<std::size_t>(n / 2));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            CHECK(pairs[p].regular.seq == frames[2 * p].seq);
            if (p + 1 < pairs.size()) CHECK(std::max(pairs[p].regular.seq, pairs[p].uv.seq) < pairs[p + 1].regular.seq);
        }
    }
    log::set_warning_sink(previous);
}

TEST_CASE("hamming distance is a metric on random triples") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_descriptor(rng), b = random_descriptor(rng), c = random_descriptor(rng);
        CHECK(features::hamming(a, b) == features::hamming(b, a));
        CHECK(features::hamming(a, c) <= features::hamming(a, b) + features::hamming(b, c));
        CHECK(features::hamming(a, a) == 0);
    }
}

TEST_CASE("FAST ignores a brightness offset that does not clip") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 40; ++i) {
        Image g = features::box_blur5(random_image(rng, 64, 48, 1));
        std::uint8_t hi = 0;
        for (auto& v : g.data()) {
            v = static_cast<std::uint8_t>(v * 3 / 4);
            hi = std::max(hi, v);
        }
        Image shifted = g;
        const int offset = std::uniform_int_distribution<int>(1, 255 - hi)(rng);
        for (auto& v : shifted.data()) v = static_cast<std::uint8_t>(v + offset);

        const auto a = features::detect_fast(g, 8, 500);
        const auto b = features::detect_fast(shifted, 8, 500);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].x == b[k].x);
            CHECK(a[k].y == b[k].y);
            CHECK(a[k].score == b[k].score);
            CHECK(a[k].angle == doctest::Approx(b[k].angle).epsilon(1e-12));
        }
    }
}

TEST_CASE("warping twice equals warping once by the product") {
    std::mt19937_64 rng(17);
    const int w = 80, h = 60;
    for (int i = 0; i < 50; ++i) {
        const Image img = smooth_image(rng, w, h);
        const Homography a = small_rigid(rng, w, h), b = small_rigid(rng, w, h);
        const auto first = registration::warp(img, a, w, h);
        const auto twice = registration::warp(first.image, b, w, h);
        const auto first_valid = registration::warp(first.valid, b, w, h);
        const auto once = registration::warp(img, b * a, w, h);
        int worst = 0;
        std::size_t compared = 0;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                if (twice.valid.at(x, y) != 255 || first_valid.image.at(x, y) != 255 || once.valid.at(x, y) != 255)
                    continue;
                ++compared;
                worst = std::max(worst, std::abs(twice.image.at(x, y) - once.image.at(x, y)));
            }
        CHECK(compared > static_cast<std::size_t>(w * h / 2));
        CHECK(worst <= 1);
    }
}

TEST_CASE("DLT does not depend on correspondence order") {
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> coord(0, 200), noise(-0.5, 0.5);
    for (int i = 0; i < 200; ++i) {
        const Homography truth = Homography::rigid(0.1, 100, 100, 3, -2) * Homography::translation(1, 1);
        std::vector<registration::PointPair> pairs;
        for (int k = 0; k < 12; ++k) {
            const Point2 p{coord(rng), coord(rng)};
            const Point2 q = truth.apply(p);
            pairs.push_back({p, {q.x + noise(rng), q.y + noise(rng)}});
        }
        const Homography h = registration::solve_homography_dlt(pairs);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        const Homography g = registration::solve_homography_dlt(pairs);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) CHECK(std::abs(h(r, c) - g(r, c)) < 1e-9);
    }
}

TEST_CASE("classification is unchanged by scaling brightness above threshold") {
    std::mt19937_64 rng(19);
    const ClassPalette palette({{1, {255, 0, 0}, 30}, {2, {0, 255, 0}, 30}, {3, {40, 80, 255}, 30}});
    std::uniform_int_distribution<int> ch(0, 127);
    for (int i = 0; i < 2000; ++i) {
        const Rgb p{static_cast<std::uint8_t>(ch(rng)), static_cast<std::uint8_t>(ch(rng)),
                    static_cast<std::uint8_t>(ch(rng))};
        if (p.max_channel() < 30) continue;
        const int k_max = 255 / p.max_channel();
        for (int k = 2; k <= k_max; ++k) {
            const Rgb q{static_cast<std::uint8_t>(p.r * k), static_cast<std::uint8_t>(p.g * k),
                        static_cast<std::uint8_t>(p.b * k)};
            CHECK(segmentation::classify_pixel(q, palette) == segmentation::classify_pixel(p, palette));
        }
    }
}

TEST_CASE("iou symmetry, identity and erosion") {
    std::mt19937_64 rng(20);
    std::bernoulli_distribution drop(0.2);
    for (int i = 0; i < 300; ++i) {
        const LabelMask a = random_mask(rng, 24, 18, 3), b = random_mask(rng, 24, 18, 3);
        for (std::uint8_t l = 1; l <= 3; ++l) {
            CHECK(eval::iou(a, b, l) == eval::iou(b, a, l));
            CHECK(eval::iou(a, a, l) == 1.0);
            bool same = true;
            for (std::size_t k = 0; k < a.labels.size(); ++k) same &= (a.labels[k] == l) == (b.labels[k] == l);
            CHECK((eval::iou(a, b, l) == 1.0) == same);
        }
        // a ⊆ b for label 1, then erode a further.
        LabelMask sub = b, eroded = b;
        for (std::size_t k = 0; k < b.labels.size(); ++k)
            if (b.labels[k] == 1 && drop(rng)) sub.labels[k] = eroded.labels[k] = 0;
        for (std::size_t k = 0; k < b.labels.size(); ++k)
            if (sub.labels[k] == 1 && drop(rng)) eroded.labels[k] = 0;
        CHECK(eval::iou(eroded, b, 1) <= eval::iou(sub, b, 1));
    }
}

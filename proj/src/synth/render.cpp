#include <invmark/controller.hpp>
#include <invmark/error.hpp>
#include <invmark/synth.hpp>

#include <cmath>
#include <numbers>
#include <random>

namespace invmark::synth {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index = 0) {
    return splitmix(splitmix(splitmix(seed) ^ purpose) ^ index);
}

enum Purpose : std::uint64_t { kCamera = 1, kNoise = 2, kTexture = 3 };

// Uniform in [0, 1) with 53 random bits; mt19937_64 output is fully
// specified, so streams are identical across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double gaussian(std::mt19937_64& rng) {
    const double u1 = 1.0 - unit(rng); // (0, 1]
    const double u2 = unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double lattice(std::uint64_t key, std::int64_t ix, std::int64_t iy) {
    const std::uint64_t h = splitmix(key ^ splitmix(static_cast<std::uint64_t>(ix) * 0x9E3779B1ull +
                                                    static_cast<std::uint64_t>(iy) * 0x85EBCA77ull));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double value_noise(std::uint64_t key, double x, double y, double cell) {
    const double gx = x / cell, gy = y / cell;
    const double fx0 = std::floor(gx), fy0 = std::floor(gy);
    const auto ix = static_cast<std::int64_t>(fx0), iy = static_cast<std::int64_t>(fy0);
    const double tx = smoothstep(gx - fx0), ty = smoothstep(gy - fy0);
    const double a = lattice(key, ix, iy), b = lattice(key, ix + 1, iy);
    const double c = lattice(key, ix, iy + 1), d = lattice(key, ix + 1, iy + 1);
    return (a * (1 - tx) + b * tx) * (1 - ty) + (c * (1 - tx) + d * tx) * ty;
}

struct Albedo {
    double r, g, b;
};

Albedo background_albedo(const SceneSpec& spec, Point2 p) {
    const Background& bg = spec.background;
    auto mix = [&](double t) {
        return Albedo{bg.color2.r + (bg.color.r - bg.color2.r) * t, bg.color2.g + (bg.color.g - bg.color2.g) * t,
                      bg.color2.b + (bg.color.b - bg.color2.b) * t};
    };
    switch (bg.kind) {
    case BackgroundKind::Flat: return mix(1.0);
    case BackgroundKind::Checkerboard: {
        const auto cx = static_cast<std::int64_t>(std::floor(p.x / bg.cell));
        const auto cy = static_cast<std::int64_t>(std::floor(p.y / bg.cell));
        return mix(((cx + cy) & 1) == 0 ? 1.0 : 0.0);
    }
    case BackgroundKind::RandomTexture: {
        const std::uint64_t key = stream_key(spec.seed, kTexture);
        const double n = 0.65 * value_noise(key, p.x, p.y, bg.cell) +
                         0.35 * value_noise(splitmix(key), p.x, p.y, bg.cell / 2.0);
        return mix(n);
    }
    }
    return mix(1.0);
}

bool inside(const Shape& shape, Point2 p) {
    if (const auto* e = std::get_if<Ellipse>(&shape)) {
        const double c = std::cos(e->angle), s = std::sin(e->angle);
        const double dx = p.x - e->cx, dy = p.y - e->cy;
        const double u = (c * dx + s * dy) / e->rx, v = (-s * dx + c * dy) / e->ry;
        return u * u + v * v <= 1.0;
    }
    const auto& v = std::get<Polygon>(shape).vertices;
    bool in = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y) &&
            p.x < (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
            in = !in;
    }
    return in;
}

// Topmost blob covering scene point p at capture `frame`, or null.
const BlobSpec* blob_at(const SceneSpec& spec, Point2 p, int frame) {
    for (auto it = spec.blobs.rbegin(); it != spec.blobs.rend(); ++it) {
        const Point2 local{p.x - it->velocity.x * frame, p.y - it->velocity.y * frame};
        if (inside(it->shape, local)) return &*it;
    }
    return nullptr;
}

} // namespace

std::vector<Homography> camera_path(const SceneSpec& spec, int n_frames) {
    std::vector<Homography> path;
    path.reserve(static_cast<std::size_t>(std::max(n_frames, 0)));
    std::mt19937_64 rng(stream_key(spec.seed, kCamera));
    const double cx = (spec.width - 1) / 2.0, cy = (spec.height - 1) / 2.0;
    double tx = 0, ty = 0, angle = 0;
    for (int k = 0; k < n_frames; ++k) {
        if (k > 0) {
            const double dir = 2.0 * std::numbers::pi * unit(rng);
            const double mag = spec.camera.max_translation * (0.5 + 0.5 * unit(rng));
            const double rot = spec.camera.max_rotation * (2.0 * unit(rng) - 1.0);
            double dx = mag * std::cos(dir), dy = mag * std::sin(dir), da = rot;
            if (std::abs(tx + dx) > spec.camera.max_offset) dx = -dx;
            if (std::abs(ty + dy) > spec.camera.max_offset) dy = -dy;
            if (std::abs(angle + da) > spec.camera.max_angle) da = -da;
            tx += dx;
            ty += dy;
            angle += da;
        }
        path.push_back(Homography::rigid(angle, cx, cy, tx, ty));
    }
    return path;
}

Image render_frame(const SceneSpec& spec, const Homography& camera, int frame_index, LightKind kind) {
    const Homography to_scene = camera.inverse();
    const double light = spec.ambient_level + (kind == LightKind::Regular ? spec.regular_light : 0.0);
    std::mt19937_64 noise(stream_key(spec.seed, kNoise, static_cast<std::uint64_t>(frame_index)));

    Image img(spec.width, spec.height, 3);
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x) {
            const Point2 p = to_scene.apply({static_cast<double>(x), static_cast<double>(y)});
            const BlobSpec* blob = blob_at(spec, p, frame_index);
            const Albedo a = blob ? Albedo{static_cast<double>(blob->albedo.r), static_cast<double>(blob->albedo.g),
                                           static_cast<double>(blob->albedo.b)}
                                  : background_albedo(spec, p);
            double v[3] = {a.r / 255.0 * light, a.g / 255.0 * light, a.b / 255.0 * light};
            if (blob && kind == LightKind::UV) {
                // Fluorescence adds to whatever the ambient light shows.
                v[0] += blob->emission.r * spec.uv_emission_gain;
                v[1] += blob->emission.g * spec.uv_emission_gain;
                v[2] += blob->emission.b * spec.uv_emission_gain;
            }
            for (int c = 0; c < 3; ++c) {
                if (spec.noise_sigma > 0) v[c] += spec.noise_sigma * gaussian(noise);
                img.at(x, y, c) = saturate_u8(v[c]);
            }
        }
    return img;
}

LabelMask render_truth(const SceneSpec& spec, const Homography& camera, int frame_index) {
    const Homography to_scene = camera.inverse();
    LabelMask mask(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x)
            if (const BlobSpec* b = blob_at(spec, to_scene.apply({double(x), double(y)}), frame_index))
                mask.at(x, y) = b->label;
    return mask;
}

SynthStream generate_stream(const SceneSpec& spec, int n_frames) {
    validate(spec);
    if (n_frames < 2) throw InvalidArgument("generate_stream needs at least 2 frames");

    controller::ControllerConfig ctl;
    ctl.camera_rate_hz = spec.camera_rate_hz;
    ctl.mode = spec.mode;

    SynthStream s;
    s.cameras = camera_path(spec, n_frames);
    for (int k = 0; k < n_frames; ++k) {
        const LightKind kind = controller::expected_light(ctl, k);
        const auto t = static_cast<std::int64_t>(std::llround(k * 1000.0 / spec.camera_rate_hz));
        s.frames.push_back(Frame{render_frame(spec, s.cameras[k], k, kind), kind, k, t});
    }
    for (int k = 0; k + 1 < n_frames; k += 2) s.masks.push_back(render_truth(spec, s.cameras[k], k));
    return s;
}

Homography pair_alignment(const SynthStream& stream, std::size_t pair_index) {
    return stream.cameras.at(2 * pair_index) * stream.cameras.at(2 * pair_index + 1).inverse();
}

} // namespace invmark::synth

#include <invmark/error.hpp>
#include <invmark/ingest.hpp>
#include <invmark/png_io.hpp>
#include <invmark/synth.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace invmark::synth {

using nlohmann::json;

namespace {

struct Box {
    double x0, y0, x1, y1;
};

Box bounds(const Shape& shape) {
    if (const auto* e = std::get_if<Ellipse>(&shape)) {
        const double c = std::cos(e->angle), s = std::sin(e->angle);
        const double hx = std::hypot(e->rx * c, e->ry * s), hy = std::hypot(e->rx * s, e->ry * c);
        return {e->cx - hx, e->cy - hy, e->cx + hx, e->cy + hy};
    }
    const auto& v = std::get<Polygon>(shape).vertices;
    Box b{v[0].x, v[0].y, v[0].x, v[0].y};
    for (const auto& p : v) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

std::string frame_name(std::string_view prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%05zu.png", i);
    return std::string(prefix) + buf;
}

json rgb_json(Rgb c) { return json::array({c.r, c.g, c.b}); }

Rgb rgb_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) throw InvalidArgument(std::string("scene: ") + what + " must be [r, g, b]");
    Rgb c;
    std::uint8_t* ch[3] = {&c.r, &c.g, &c.b};
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer() || j[i].get<int>() < 0 || j[i].get<int>() > 255)
            throw InvalidArgument(std::string("scene: ") + what + " entries must be integers in 0..255");
        *ch[i] = static_cast<std::uint8_t>(j[i].get<int>());
    }
    return c;
}

template <typename T>
T value_or(const json& obj, const char* key, T fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw InvalidArgument(std::string("scene: \"") + key + "\" has the wrong type");
    }
}

} // namespace

void validate(const SceneSpec& spec) {
    if (spec.width < 1 || spec.height < 1) throw InvalidArgument("scene size must be positive");
    if (!(spec.uv_emission_gain >= 0.0 && spec.uv_emission_gain <= 1.0))
        throw InvalidArgument("uv_emission_gain must lie in [0, 1]");
    if (!(spec.ambient_level >= 0.0 && spec.ambient_level <= 255.0))
        throw InvalidArgument("ambient_level must lie in [0, 255]");
    if (!(spec.regular_light >= 0.0 && spec.regular_light <= 255.0))
        throw InvalidArgument("regular_light must lie in [0, 255]");
    if (!(spec.noise_sigma >= 0.0)) throw InvalidArgument("noise_sigma must be non-negative");
    if (!(spec.camera_rate_hz > 0.0)) throw InvalidArgument("camera rate must be positive");
    if (!(spec.background.cell > 0.0)) throw InvalidArgument("background cell size must be positive");
    const auto& cam = spec.camera;
    if (!(cam.max_translation >= 0 && cam.max_rotation >= 0 && cam.max_offset >= 0 && cam.max_angle >= 0))
        throw InvalidArgument("camera motion limits must be non-negative");
    for (const auto& b : spec.blobs) {
        if (b.label == 0) throw InvalidArgument("blob label 0 is reserved for background");
        if (const auto* e = std::get_if<Ellipse>(&b.shape); e && !(e->rx > 0 && e->ry > 0))
            throw InvalidArgument("ellipse radii must be positive");
        if (const auto* p = std::get_if<Polygon>(&b.shape); p && p->vertices.size() < 3)
            throw InvalidArgument("polygon needs at least 3 vertices");
        const Box box = bounds(b.shape);
        if (box.x0 < 0 || box.y0 < 0 || box.x1 > spec.width - 1 || box.y1 > spec.height - 1)
            throw InvalidArgument("blob " + std::to_string(b.label) + " does not start inside the image");
    }
}

ClassPalette palette_for(const SceneSpec& spec) {
    std::vector<PaintClass> classes;
    for (const auto& b : spec.blobs) {
        if (std::any_of(classes.begin(), classes.end(), [&](const PaintClass& c) { return c.label == b.label; }))
            continue;
        const double peak = spec.uv_emission_gain * b.emission.max_channel();
        const auto threshold = static_cast<std::uint8_t>(std::clamp(std::lround(0.4 * peak), 1L, 255L));
        classes.push_back({b.label, b.emission, threshold});
    }
    return ClassPalette(std::move(classes));
}

SceneSpec parse_scene_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("scene spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("scene spec must be a JSON object");

    SceneSpec s;
    s.width = value_or(doc, "width", s.width);
    s.height = value_or(doc, "height", s.height);
    s.uv_emission_gain = value_or(doc, "uv_emission_gain", s.uv_emission_gain);
    s.ambient_level = value_or(doc, "ambient_level", s.ambient_level);
    s.regular_light = value_or(doc, "regular_light", s.regular_light);
    s.noise_sigma = value_or(doc, "noise_sigma", s.noise_sigma);
    s.seed = value_or(doc, "seed", s.seed);
    s.camera_rate_hz = value_or(doc, "camera_rate", s.camera_rate_hz);

    const std::string mode = value_or<std::string>(doc, "mode", s.ambient_level > 0 ? "ambient" : "dark");
    if (mode == "dark")
        s.mode = CaptureMode::DarkRoom;
    else if (mode == "ambient")
        s.mode = CaptureMode::AmbientBlink;
    else
        throw InvalidArgument("scene: mode must be \"dark\" or \"ambient\"");

    if (auto bg = doc.find("background"); bg != doc.end()) {
        const std::string kind = value_or<std::string>(*bg, "kind", "flat");
        if (kind == "flat")
            s.background.kind = BackgroundKind::Flat;
        else if (kind == "checkerboard")
            s.background.kind = BackgroundKind::Checkerboard;
        else if (kind == "random-texture")
            s.background.kind = BackgroundKind::RandomTexture;
        else
            throw InvalidArgument("scene: unknown background kind \"" + kind + "\"");
        if (bg->contains("color")) s.background.color = rgb_from(bg->at("color"), "background color");
        if (bg->contains("color2")) s.background.color2 = rgb_from(bg->at("color2"), "background color2");
        s.background.cell = value_or(*bg, "cell", s.background.cell);
    }

    if (auto cam = doc.find("camera_motion"); cam != doc.end()) {
        s.camera.max_translation = value_or(*cam, "max_translation", s.camera.max_translation);
        s.camera.max_rotation = value_or(*cam, "max_rotation", s.camera.max_rotation);
        s.camera.max_offset = value_or(*cam, "max_offset", s.camera.max_offset);
        s.camera.max_angle = value_or(*cam, "max_angle", s.camera.max_angle);
    }

    if (auto blobs = doc.find("blobs"); blobs != doc.end()) {
        if (!blobs->is_array()) throw InvalidArgument("scene: \"blobs\" must be an array");
        for (const json& b : *blobs) {
            BlobSpec blob;
            const int label = value_or(b, "label", 1);
            if (label < 1 || label > 255) throw InvalidArgument("scene: blob label must lie in 1..255");
            blob.label = static_cast<std::uint8_t>(label);
            if (b.contains("emission")) blob.emission = rgb_from(b.at("emission"), "emission");
            if (b.contains("albedo")) blob.albedo = rgb_from(b.at("albedo"), "albedo");
            if (auto e = b.find("ellipse"); e != b.end()) {
                blob.shape = Ellipse{value_or(*e, "cx", 0.0), value_or(*e, "cy", 0.0), value_or(*e, "rx", 1.0),
                                     value_or(*e, "ry", 1.0), value_or(*e, "angle", 0.0)};
            } else if (auto p = b.find("polygon"); p != b.end()) {
                Polygon poly;
                for (const json& v : *p) {
                    if (!v.is_array() || v.size() != 2) throw InvalidArgument("scene: polygon vertices must be [x, y]");
                    poly.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
                }
                blob.shape = std::move(poly);
            } else {
                throw InvalidArgument("scene: blob needs an \"ellipse\" or \"polygon\"");
            }
            if (auto v = b.find("velocity"); v != b.end()) {
                if (!v->is_array() || v->size() != 2) throw InvalidArgument("scene: velocity must be [vx, vy]");
                blob.velocity = {(*v)[0].get<double>(), (*v)[1].get<double>()};
            }
            s.blobs.push_back(std::move(blob));
        }
    }
    validate(s);
    return s;
}

std::string serialize_scene_spec(const SceneSpec& s) {
    static constexpr const char* kinds[] = {"flat", "checkerboard", "random-texture"};
    json blobs = json::array();
    for (const auto& b : s.blobs) {
        json j = {{"label", b.label},
                  {"emission", rgb_json(b.emission)},
                  {"albedo", rgb_json(b.albedo)},
                  {"velocity", {b.velocity.x, b.velocity.y}}};
        if (const auto* e = std::get_if<Ellipse>(&b.shape)) {
            j["ellipse"] = {{"cx", e->cx}, {"cy", e->cy}, {"rx", e->rx}, {"ry", e->ry}, {"angle", e->angle}};
        } else {
            json poly = json::array();
            for (const auto& v : std::get<Polygon>(b.shape).vertices) poly.push_back({v.x, v.y});
            j["polygon"] = std::move(poly);
        }
        blobs.push_back(std::move(j));
    }
    json doc = {{"width", s.width},
                {"height", s.height},
                {"mode", std::string(to_string(s.mode))},
                {"background",
                 {{"kind", kinds[static_cast<int>(s.background.kind)]},
                  {"color", rgb_json(s.background.color)},
                  {"color2", rgb_json(s.background.color2)},
                  {"cell", s.background.cell}}},
                {"blobs", std::move(blobs)},
                {"camera_motion",
                 {{"max_translation", s.camera.max_translation},
                  {"max_rotation", s.camera.max_rotation},
                  {"max_offset", s.camera.max_offset},
                  {"max_angle", s.camera.max_angle}}},
                {"uv_emission_gain", s.uv_emission_gain},
                {"ambient_level", s.ambient_level},
                {"regular_light", s.regular_light},
                {"noise_sigma", s.noise_sigma},
                {"seed", s.seed},
                {"camera_rate", s.camera_rate_hz}};
    return doc.dump(2) + "\n";
}

void write_stream(const SynthStream& stream, const SceneSpec& spec, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir / "frames");
    fs::create_directories(out_dir / "truth");

    ingest::StreamManifest manifest;
    manifest.mode = spec.mode;
    manifest.width = spec.width;
    manifest.height = spec.height;
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const Frame& f = stream.frames[i];
        const std::string rel = "frames/" + frame_name("frame_", i);
        io::write_png(out_dir / rel, f.image);
        manifest.entries.push_back({rel, f.kind, f.seq, f.timestamp_ms});
    }
    ingest::write_manifest(out_dir / "manifest.json", manifest);

    json cameras = json::array();
    for (const auto& c : stream.cameras) cameras.push_back(c.matrix());
    json pairs = json::array();
    for (std::size_t i = 0; i < stream.masks.size(); ++i) {
        io::write_mask_png(out_dir / "truth" / frame_name("mask_", i), stream.masks[i]);
        pairs.push_back({{"pair", i}, {"h", pair_alignment(stream, i).matrix()}});
    }
    std::ofstream(out_dir / "truth" / "homographies.json", std::ios::binary)
        << json{{"cameras", std::move(cameras)}, {"pairs", std::move(pairs)}}.dump(2) << "\n";

    const ClassPalette palette = palette_for(spec);
    json classes = json::array();
    for (const auto& c : palette.classes())
        classes.push_back({{"label", c.label}, {"color", rgb_json(c.emission)}, {"threshold", c.threshold}});
    std::ofstream(out_dir / "palette.json", std::ios::binary)
        << json{{"classes", std::move(classes)}, {"min_area", 4}}.dump(2) << "\n";
    std::ofstream(out_dir / "scene.json", std::ios::binary) << serialize_scene_spec(spec);
}

} // namespace invmark::synth

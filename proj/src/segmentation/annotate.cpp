#include <invmark/error.hpp>
#include <invmark/parallel.hpp>
#include <invmark/png_io.hpp>
#include <invmark/segmentation.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace invmark::segmentation {

using nlohmann::json;

std::string_view to_string(AlignmentStatus s) noexcept {
    switch (s) {
    case AlignmentStatus::Skipped: return "skipped";
    case AlignmentStatus::Identity: return "identity";
    case AlignmentStatus::Aligned: return "aligned";
    case AlignmentStatus::Failed: return "failed";
    }
    return "unknown";
}

PaletteConfig parse_palette_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("palette is not valid JSON: ") + e.what());
    }
    auto classes = doc.find("classes");
    if (!doc.is_object() || classes == doc.end() || !classes->is_array())
        throw InvalidArgument("palette: expected an object with a \"classes\" array");

    auto byte = [](const json& v, const char* what) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 255)
            throw InvalidArgument(std::string("palette: ") + what + " must be an integer in 0..255");
        return static_cast<std::uint8_t>(v.get<int>());
    };

    std::vector<PaintClass> list;
    for (const json& c : *classes) {
        if (!c.is_object() || !c.contains("label") || !c.contains("color") || !c.contains("threshold"))
            throw InvalidArgument("palette: each class needs label, color and threshold");
        const json& color = c.at("color");
        if (!color.is_array() || color.size() != 3) throw InvalidArgument("palette: color must be [r, g, b]");
        list.push_back({byte(c.at("label"), "label"),
                        {byte(color[0], "color"), byte(color[1], "color"), byte(color[2], "color")},
                        byte(c.at("threshold"), "threshold")});
    }
    PaletteConfig cfg{ClassPalette(std::move(list)), 4};
    if (auto it = doc.find("min_area"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 0)
            throw InvalidArgument("palette: min_area must be a non-negative integer");
        cfg.min_area = it->get<int>();
    }
    return cfg;
}

PaletteConfig read_palette_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_palette_config(ss.str());
}

std::string serialize_palette_config(const PaletteConfig& cfg) {
    json classes = json::array();
    for (const auto& c : cfg.palette.classes())
        classes.push_back({{"label", c.label}, {"color", {c.emission.r, c.emission.g, c.emission.b}}, {"threshold", c.threshold}});
    return json{{"classes", std::move(classes)}, {"min_area", cfg.min_area}}.dump(2) + "\n";
}

AnnotatedSample annotate_pair(const FramePair& input, std::size_t pair_index, const ClassPalette& palette,
                              const AnnotateConfig& cfg) {
    AnnotatedSample s;
    s.pair_index = pair_index;
    s.regular_seq = input.regular.seq;
    s.uv_seq = input.uv.seq;
    try {
        FramePair pair = input;
        if (cfg.resize) {
            pair.regular.image = resize_bilinear(pair.regular.image, cfg.resize->first, cfg.resize->second);
            pair.uv.image = resize_bilinear(pair.uv.image, cfg.resize->first, cfg.resize->second);
        }

        LabelMask raw;
        if (cfg.mode == CaptureMode::DarkRoom) {
            // The UV frame alone carries the annotation; no alignment needed.
            raw = dark_mode_mask(pair.uv, palette);
            s.alignment = AlignmentStatus::Skipped;
        } else {
            if (cfg.motion == CameraMotion::Moving) {
                registration::AlignConfig align = cfg.align;
                align.ransac.seed = registration::pair_seed(cfg.align.ransac.seed, pair_index);
                pair = registration::align_pair(std::move(pair), align);
                s.alignment = pair.alignment_failed ? AlignmentStatus::Failed : AlignmentStatus::Aligned;
                s.inliers = pair.inliers;
            } else {
                pair.alignment = Homography::identity();
                s.alignment = AlignmentStatus::Identity;
            }
            s.h = pair.alignment.value_or(Homography::identity());
            raw = ambient_mode_mask(pair, palette, cfg.motion);
        }
        s.mask = postprocess(raw, cfg.min_area);
        s.regular = std::move(pair.regular.image);
    } catch (const std::exception& e) {
        s.error = e.what();
    }
    return s;
}

std::vector<AnnotatedSample> annotate_pairs(const std::vector<FramePair>& pairs, const ClassPalette& palette,
                                            const AnnotateConfig& cfg) {
    if (palette.empty()) throw InvalidArgument("annotate: palette is empty");
    std::vector<AnnotatedSample> out(pairs.size());
    parallel_for(pairs.size(), cfg.jobs, [&](std::size_t i) { out[i] = annotate_pair(pairs[i], i, palette, cfg); });
    return out;
}

std::size_t Dataset::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const AnnotatedSample& s) {
        return !s.ok() || s.alignment == AlignmentStatus::Failed;
    }));
}

Dataset annotate_stream(const std::filesystem::path& manifest_path, const ClassPalette& palette,
                        const AnnotateConfig& cfg) {
    ingest::LoadedStream stream = ingest::load_stream(manifest_path);
    const auto pairs = ingest::pair_stream(stream.frames);
    return Dataset{cfg.mode, annotate_pairs(pairs, palette, cfg)};
}

std::string sample_file_name(std::string_view prefix, std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%05zu.png", index);
    return std::string(prefix) + buf;
}

Image overlay(const Image& regular, const LabelMask& mask, const ClassPalette& palette) {
    Image out = regular;
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) {
            const PaintClass* c = palette.find(mask.at(x, y));
            if (!c) continue;
            const std::uint8_t tint[3] = {c->emission.r, c->emission.g, c->emission.b};
            for (int ch = 0; ch < 3; ++ch) out.at(x, y, ch) = static_cast<std::uint8_t>((out.at(x, y, ch) + tint[ch] + 1) / 2);
        }
    return out;
}

void write_dataset(const Dataset& dataset, const ClassPalette& palette, const std::filesystem::path& out_dir,
                   bool preview) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir / "images");
    fs::create_directories(out_dir / "masks");
    if (preview) fs::create_directories(out_dir / "preview");

    json samples = json::array();
    for (const auto& s : dataset.samples) {
        json entry = {{"pair", s.pair_index},
                      {"regular_seq", s.regular_seq},
                      {"uv_seq", s.uv_seq},
                      {"alignment", std::string(to_string(s.alignment))}};
        if (!s.ok()) {
            entry["error"] = s.error;
            samples.push_back(std::move(entry));
            continue;
        }
        const std::string image = "images/" + sample_file_name("regular_", s.pair_index);
        const std::string mask = "masks/" + sample_file_name("mask_", s.pair_index);
        io::write_png(out_dir / image, s.regular);
        io::write_mask_png(out_dir / mask, s.mask);
        entry["image"] = image;
        entry["mask"] = mask;
        if (s.alignment == AlignmentStatus::Aligned || s.alignment == AlignmentStatus::Failed) {
            entry["h"] = s.h.matrix();
            entry["inliers"] = s.inliers;
        }
        if (preview) {
            const std::string ov = "preview/" + sample_file_name("overlay_", s.pair_index);
            io::write_png(out_dir / ov, overlay(s.regular, s.mask, palette));
            entry["preview"] = ov;
        }
        samples.push_back(std::move(entry));
    }

    json doc = {{"mode", std::string(to_string(dataset.mode))},
                {"exposure", "fixed across each pair (assumed)"},
                {"samples", std::move(samples)}};
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (!out) throw IoError("cannot write " + (out_dir / "manifest.json").string());
    out << doc.dump(2) << "\n";
}

} // namespace invmark::segmentation

#include <invmark/error.hpp>
#include <invmark/ingest.hpp>
#include <invmark/log.hpp>
#include <invmark/png_io.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace invmark::ingest {

using nlohmann::json;

namespace {

template <typename T>
T require(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ManifestError(std::string(where) + ": missing \"" + key + "\"");
    const auto wrong_type = [&] { return ManifestError(std::string(where) + ": \"" + key + "\" has the wrong type"); };
    if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) throw wrong_type();
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw wrong_type();
    }
}

LightKind parse_kind(const std::string& s) {
    if (s == "regular") return LightKind::Regular;
    if (s == "uv") return LightKind::UV;
    throw ManifestError("frame kind must be \"regular\" or \"uv\", got \"" + s + "\"");
}

CaptureMode parse_mode(const std::string& s) {
    if (s == "dark") return CaptureMode::DarkRoom;
    if (s == "ambient") return CaptureMode::AmbientBlink;
    throw ManifestError("mode must be \"dark\" or \"ambient\", got \"" + s + "\"");
}

} // namespace

StreamManifest parse_manifest(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ManifestError("manifest must be a JSON object");

    StreamManifest m;
    m.mode = parse_mode(require<std::string>(doc, "mode", "manifest"));
    m.width = require<int>(doc, "width", "manifest");
    m.height = require<int>(doc, "height", "manifest");
    if (m.width < 1 || m.height < 1) throw ManifestError("manifest width and height must be positive");

    auto frames = doc.find("frames");
    if (frames == doc.end() || !frames->is_array()) throw ManifestError("manifest: \"frames\" must be an array");
    for (const json& f : *frames) {
        if (!f.is_object()) throw ManifestError("manifest: frame entries must be objects");
        ManifestEntry e;
        e.path = require<std::string>(f, "path", "frame");
        e.kind = parse_kind(require<std::string>(f, "kind", "frame"));
        e.seq = require<std::int64_t>(f, "seq", "frame");
        e.timestamp_ms = require<std::int64_t>(f, "t_ms", "frame");
        m.entries.push_back(std::move(e));
    }

    std::stable_sort(m.entries.begin(), m.entries.end(),
                     [](const ManifestEntry& a, const ManifestEntry& b) { return a.seq < b.seq; });
    for (std::size_t i = 1; i < m.entries.size(); ++i) {
        if (m.entries[i].seq == m.entries[i - 1].seq)
            throw ManifestError("manifest: duplicate seq " + std::to_string(m.entries[i].seq));
        if (m.entries[i].timestamp_ms < m.entries[i - 1].timestamp_ms)
            throw ManifestError("manifest: timestamp decreases at seq " + std::to_string(m.entries[i].seq));
    }
    return m;
}

std::string serialize_manifest(const StreamManifest& manifest) {
    json frames = json::array();
    for (const auto& e : manifest.entries)
        frames.push_back({{"path", e.path.generic_string()},
                          {"kind", std::string(to_string(e.kind))},
                          {"seq", e.seq},
                          {"t_ms", e.timestamp_ms}});
    json doc = {{"mode", std::string(to_string(manifest.mode))},
                {"width", manifest.width},
                {"height", manifest.height},
                {"frames", std::move(frames)}};
    return doc.dump(2) + "\n";
}

StreamManifest read_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw MissingFile(manifest_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

void write_manifest(const std::filesystem::path& manifest_path, const StreamManifest& manifest) {
    std::ofstream out(manifest_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + manifest_path.string());
    out << serialize_manifest(manifest);
}

LoadedStream load_stream(const std::filesystem::path& manifest_path) {
    LoadedStream s;
    s.manifest = read_manifest(manifest_path);
    const auto base = manifest_path.parent_path();
    s.frames.reserve(s.manifest.entries.size());
    for (const auto& e : s.manifest.entries) {
        const auto path = e.path.is_absolute() ? e.path : base / e.path;
        Image img = io::read_png(path, 3);
        if (img.width() != s.manifest.width || img.height() != s.manifest.height)
            throw DimensionMismatch(path.string() + " is " + std::to_string(img.width()) + "x" +
                                    std::to_string(img.height()) + ", manifest declares " +
                                    std::to_string(s.manifest.width) + "x" + std::to_string(s.manifest.height));
        s.frames.push_back(Frame{std::move(img), e.kind, e.seq, e.timestamp_ms});
    }
    return s;
}

std::vector<FramePair> pair_stream(std::span<const Frame> frames) {
    for (std::size_t i = 1; i < frames.size(); ++i) {
        if (frames[i].seq <= frames[i - 1].seq) throw InvalidArgument("pair_stream: frames are not sorted by seq");
        if (frames[i].kind == frames[i - 1].kind)
            throw AlternationViolation(frames[i].seq, "alternation violation at seq " + std::to_string(frames[i].seq) +
                                                          ": two consecutive " +
                                                          std::string(to_string(frames[i].kind)) + " frames");
    }

    std::vector<FramePair> pairs;
    pairs.reserve(frames.size() / 2);
    for (std::size_t i = 0; i + 1 < frames.size(); i += 2) {
        const Frame& first = frames[i];
        const Frame& second = frames[i + 1];
        if (second.seq - first.seq != 1)
            throw AlternationViolation(second.seq, "alternation violation at seq " + std::to_string(second.seq) +
                                                       ": gap inside a capture pair (previous seq " +
                                                       std::to_string(first.seq) + ")");
        if (first.kind == LightKind::Regular)
            pairs.emplace_back(first, second);
        else
            pairs.emplace_back(second, first);
    }
    if (frames.size() % 2 == 1)
        log::warn("dropping trailing unpaired frame at seq " + std::to_string(frames.back().seq));
    return pairs;
}

} // namespace invmark::ingest

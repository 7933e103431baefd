#pragma once

#include <invmark/frame.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace invmark::ingest {

struct ManifestEntry {
    std::filesystem::path path; // as written in the manifest, relative to its directory
    LightKind kind = LightKind::Regular;
    std::int64_t seq = 0;
    std::int64_t timestamp_ms = 0;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// JSON schema:
///   {"mode": "dark"|"ambient", "width": int, "height": int,
///    "frames": [{"path": str, "kind": "regular"|"uv", "seq": int, "t_ms": int}]}
struct StreamManifest {
    CaptureMode mode = CaptureMode::DarkRoom;
    int width = 0;
    int height = 0;
    std::vector<ManifestEntry> entries; // sorted by seq

    friend bool operator==(const StreamManifest&, const StreamManifest&) = default;
};

/// Parses and validates a manifest document; entries come back sorted by
/// seq. Throws ManifestError on malformed JSON, schema violations, duplicate
/// seqs or timestamps that run backwards.
StreamManifest parse_manifest(const std::string& json_text);
std::string serialize_manifest(const StreamManifest& manifest);

StreamManifest read_manifest(const std::filesystem::path& manifest_path);
void write_manifest(const std::filesystem::path& manifest_path, const StreamManifest& manifest);

struct LoadedStream {
    StreamManifest manifest;
    std::vector<Frame> frames; // seq order
};

/// Reads the manifest and decodes every frame as RGB. Throws MissingFile
/// (naming the path), DimensionMismatch when an image disagrees with the
/// manifest size, or ManifestError.
LoadedStream load_stream(const std::filesystem::path& manifest_path);

/// Groups consecutive captures into (regular, uv) pairs. Throws
/// AlternationViolation on two same-kind neighbours or a seq gap inside a
/// pair, naming the offending seq. A trailing unpaired frame is dropped with
/// a warning.
std::vector<FramePair> pair_stream(std::span<const Frame> frames);

} // namespace invmark::ingest

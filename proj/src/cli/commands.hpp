#pragma once

#include <invmark/homography.hpp>
#include <invmark/image.hpp>
#include <invmark/registration.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

namespace invmark::cli {

using Action = std::function<int(std::ostream& out, std::ostream& err)>;

struct Command {
    CLI::App* app = nullptr;
    Action action;
};

Command add_pair(CLI::App& root);
Command add_align(CLI::App& root);
Command add_annotate(CLI::App& root);
Command add_synth(CLI::App& root);
Command add_eval(CLI::App& root);
Command add_controller(CLI::App& root);

// Shared helpers.
void write_text(const std::filesystem::path& path, const std::string& text);
nlohmann::json homography_json(const Homography& h);

/// Registers feature/RANSAC tuning flags on `app`, writing into `cfg`.
void add_alignment_options(CLI::App& app, registration::AlignConfig& cfg);

/// Resolves `sub` under `out_dir`, rejecting paths that would escape it.
std::filesystem::path inside(const std::filesystem::path& out_dir, const std::filesystem::path& sub);

/// Side-by-side regular | UV canvas with keypoints and match lines.
Image draw_alignment(const Image& regular, const Image& uv, const registration::AlignmentReport& report);

} // namespace invmark::cli

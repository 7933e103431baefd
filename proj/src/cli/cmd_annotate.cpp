#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/error.hpp>
#include <invmark/segmentation.hpp>

#include <memory>
#include <ostream>
#include <regex>

namespace invmark::cli {

namespace {

struct AnnotateOptions {
    std::string manifest;
    std::string palette;
    std::string mode;
    std::string out;
    std::string resize;
    bool moving_camera = false;
    bool preview = false;
    int min_area = -1;
    unsigned jobs = 0;
    registration::AlignConfig align;
};

int run_annotate(const AnnotateOptions& o, std::ostream& out, std::ostream& err) {
    const auto palette_cfg = segmentation::read_palette_config(o.palette);
    if (palette_cfg.palette.empty()) throw InvalidArgument("palette has no classes");

    segmentation::AnnotateConfig cfg;
    cfg.mode = o.mode.empty()   ? ingest::read_manifest(o.manifest).mode
               : o.mode == "dark" ? CaptureMode::DarkRoom
                                  : CaptureMode::AmbientBlink;
    cfg.motion = o.moving_camera ? segmentation::CameraMotion::Moving : segmentation::CameraMotion::Static;
    cfg.align = o.align;
    cfg.min_area = o.min_area >= 0 ? o.min_area : palette_cfg.min_area;
    cfg.jobs = o.jobs;
    if (!o.resize.empty()) {
        std::smatch m;
        if (!std::regex_match(o.resize, m, std::regex(R"((\d+)x(\d+))")))
            throw InvalidArgument("--resize expects WIDTHxHEIGHT, e.g. 160x120");
        cfg.resize = std::pair{std::stoi(m[1]), std::stoi(m[2])};
    }

    const auto dataset = segmentation::annotate_stream(o.manifest, palette_cfg.palette, cfg);
    segmentation::write_dataset(dataset, palette_cfg.palette, o.out, o.preview);

    for (const auto& s : dataset.samples) {
        if (!s.ok()) err << "pair " << s.pair_index << ": " << s.error << '\n';
        else if (s.alignment == segmentation::AlignmentStatus::Failed)
            err << "pair " << s.pair_index << ": alignment failed, identity used\n";
    }
    out << "annotated " << dataset.samples.size() - dataset.failures() << " of " << dataset.samples.size()
        << " pairs\n";
    return dataset.failures() ? kPartialFailure : kSuccess;
}

} // namespace

Command add_annotate(CLI::App& root) {
    auto opts = std::make_shared<AnnotateOptions>();
    CLI::App* app = root.add_subcommand("annotate", "Turn a capture stream into regular images + label masks");
    app->add_option("--manifest", opts->manifest, "Stream manifest JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--palette", opts->palette, "Palette JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--mode", opts->mode, "dark | ambient (default: the manifest's mode)")
        ->check(CLI::IsMember({"dark", "ambient"}));
    app->add_option("--out", opts->out, "Output dataset directory")->required();
    app->add_flag("--moving-camera", opts->moving_camera, "Align each UV frame onto its regular frame (ambient mode)");
    app->add_flag("--preview", opts->preview, "Also write mask overlays for threshold tuning");
    app->add_option("--min-area", opts->min_area, "Override the palette's min_area");
    app->add_option("--resize", opts->resize, "Resize frames first, WIDTHxHEIGHT");
    app->add_option("--jobs", opts->jobs, "Worker threads (0: all cores)")->capture_default_str();
    add_alignment_options(*app, opts->align);
    return {app, [opts](std::ostream& out, std::ostream& err) { return run_annotate(*opts, out, err); }};
}

} // namespace invmark::cli

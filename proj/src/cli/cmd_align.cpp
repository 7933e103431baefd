#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/ingest.hpp>
#include <invmark/parallel.hpp>
#include <invmark/png_io.hpp>
#include <invmark/segmentation.hpp>

#include <memory>
#include <ostream>

namespace invmark::cli {

namespace {

struct AlignOptions {
    std::string manifest;
    std::string out;
    std::string debug_dir;
    unsigned jobs = 0;
    registration::AlignConfig align;
};

int run_align(const AlignOptions& o, std::ostream& err) {
    const auto stream = ingest::load_stream(o.manifest);
    const auto pairs = ingest::pair_stream(stream.frames);
    const std::filesystem::path out_dir = o.out;
    std::filesystem::create_directories(out_dir);
    std::filesystem::path debug;
    if (!o.debug_dir.empty()) {
        debug = inside(out_dir, o.debug_dir);
        std::filesystem::create_directories(debug);
    }

    std::vector<registration::AlignmentReport> reports(pairs.size());
    parallel_for(pairs.size(), o.jobs, [&](std::size_t i) {
        registration::AlignConfig cfg = o.align;
        cfg.ransac.seed = registration::pair_seed(o.align.ransac.seed, i);
        reports[i] = registration::estimate_alignment(pairs[i].regular.image, pairs[i].uv.image, cfg);
    });

    nlohmann::json list = nlohmann::json::array();
    std::size_t failed = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& r = reports[i];
        failed += r.failed;
        const Homography h = r.failed ? Homography::identity() : r.h;
        list.push_back({{"pair", i}, {"h", homography_json(h)}, {"inliers", r.inlier_count}, {"failed", r.failed}});
        if (r.failed) err << "pair " << i << ": " << r.failure << '\n';
        if (!debug.empty())
            io::write_png(debug / segmentation::sample_file_name("matches_", i),
                          draw_alignment(pairs[i].regular.image, pairs[i].uv.image, r));
    }
    write_text(out_dir / "homographies.json", list.dump(2) + "\n");
    return failed ? kPartialFailure : kSuccess;
}

} // namespace

Command add_align(CLI::App& root) {
    auto opts = std::make_shared<AlignOptions>();
    CLI::App* app = root.add_subcommand("align", "Estimate UV-to-regular homographies for every pair");
    app->add_option("--manifest", opts->manifest, "Stream manifest JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--out", opts->out, "Output directory (homographies.json)")->required();
    app->add_option("--debug-dir", opts->debug_dir, "Keypoint/match drawings, relative to --out");
    app->add_option("--jobs", opts->jobs, "Worker threads (0: all cores)")->capture_default_str();
    add_alignment_options(*app, opts->align);
    return {app, [opts](std::ostream&, std::ostream& err) { return run_align(*opts, err); }};
}

} // namespace invmark::cli

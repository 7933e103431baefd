#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/error.hpp>
#include <invmark/synth.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace invmark::cli {

namespace {

struct SynthOptions {
    std::string spec;
    std::string out;
    int frames = 30;
    std::optional<std::uint64_t> seed;
};

int run_synth(const SynthOptions& o, std::ostream& out) {
    std::ifstream in(o.spec, std::ios::binary);
    if (!in) throw MissingFile(o.spec);
    std::ostringstream text;
    text << in.rdbuf();
    synth::SceneSpec spec = synth::parse_scene_spec(text.str());
    if (o.seed) spec.seed = *o.seed;

    const auto stream = synth::generate_stream(spec, o.frames);
    synth::write_stream(stream, spec, o.out);
    out << "wrote " << stream.frames.size() << " frames and " << stream.masks.size() << " truth masks\n";
    return kSuccess;
}

} // namespace

Command add_synth(CLI::App& root) {
    auto opts = std::make_shared<SynthOptions>();
    CLI::App* app = root.add_subcommand("synth", "Render a synthetic capture stream with ground truth");
    app->add_option("--spec", opts->spec, "Scene spec JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--out", opts->out, "Output directory")->required();
    app->add_option("--frames", opts->frames, "Number of captures")->capture_default_str()->check(CLI::Range(2, 100000));
    app->add_option("--seed", opts->seed, "Overrides the scene file's seed (default in the scene: 0)");
    return {app, [opts](std::ostream& out, std::ostream&) { return run_synth(*opts, out); }};
}

} // namespace invmark::cli

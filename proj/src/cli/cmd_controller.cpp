#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/controller.hpp>

#include <memory>
#include <ostream>

namespace invmark::cli {

namespace {

struct ControllerOptions {
    controller::ControllerConfig cfg;
    std::string mode = "dark";
    double duration_ms = 1000.0;
    std::string out;
};

int run_controller(ControllerOptions o, std::ostream& out) {
    o.cfg.mode = o.mode == "dark" ? CaptureMode::DarkRoom : CaptureMode::AmbientBlink;
    const std::string text = controller::format_schedule(controller::schedule(o.cfg, o.duration_ms));
    if (o.out.empty())
        out << text;
    else
        write_text(std::filesystem::path(o.out) / "schedule.csv", text);
    return kSuccess;
}

} // namespace

Command add_controller(CLI::App& root) {
    auto opts = std::make_shared<ControllerOptions>();
    CLI::App* app = root.add_subcommand("controller-sim", "Print the light/trigger schedule as t_ms,regular,uv,trigger");
    app->add_option("--rate", opts->cfg.camera_rate_hz, "Camera rate (Hz)")->capture_default_str();
    app->add_option("--duration", opts->duration_ms, "Schedule length (ms)")->capture_default_str();
    app->add_option("--mode", opts->mode, "dark | ambient")->capture_default_str()->check(CLI::IsMember({"dark", "ambient"}));
    app->add_option("--regular-intensity", opts->cfg.regular_intensity, "Regular LED duty, 0..1")->capture_default_str();
    app->add_option("--uv-intensity", opts->cfg.uv_intensity, "UV LED duty, 0..1")->capture_default_str();
    app->add_option("--settle-ms", opts->cfg.settle_delay_ms, "LED settle time before exposure")->capture_default_str();
    app->add_option("--out", opts->out, "Directory for schedule.csv (stdout when omitted)");
    return {app, [opts](std::ostream& out, std::ostream&) { return run_controller(*opts, out); }};
}

} // namespace invmark::cli

#include <invmark/controller.hpp>
#include <invmark/error.hpp>

#include <cmath>
#include <cstdio>

namespace invmark::controller {

void validate(const ControllerConfig& cfg) {
    if (!(cfg.camera_rate_hz > 0.0) || !std::isfinite(cfg.camera_rate_hz))
        throw InvalidArgument("camera rate must be positive");
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!unit(cfg.regular_intensity) || !unit(cfg.uv_intensity))
        throw InvalidArgument("light intensities must lie in [0, 1]");
    if (!(cfg.settle_delay_ms >= 0.0) || cfg.settle_delay_ms >= phase_period_ms(cfg))
        throw InvalidArgument("settle delay must be non-negative and shorter than one phase");
}

double phase_period_ms(const ControllerConfig& cfg) { return 1000.0 / cfg.camera_rate_hz; }

std::vector<ControlSignals> schedule(const ControllerConfig& cfg, double duration_ms) {
    validate(cfg);
    if (!(duration_ms >= 0.0) || !std::isfinite(duration_ms))
        throw InvalidArgument("schedule duration must be a non-negative number of milliseconds");

    // A trigger counts only when its whole phase fits; the epsilon absorbs
    // rounding in rate * duration (30 Hz over 1000 ms is exactly 30 phases).
    const auto triggers = static_cast<std::int64_t>(std::floor(duration_ms * cfg.camera_rate_hz / 1000.0 + 1e-9));
    const double period = phase_period_ms(cfg);

    std::vector<ControlSignals> out;
    out.reserve(static_cast<std::size_t>(triggers));
    for (std::int64_t k = 0; k < triggers; ++k) {
        const bool uv_phase = expected_light(cfg, k) == LightKind::UV;
        ControlSignals s;
        s.t_ms = static_cast<double>(k) * period;
        s.uv_on = uv_phase;
        s.regular_on = cfg.mode == CaptureMode::DarkRoom && !uv_phase;
        s.camera_trigger = true;
        s.exposure_ms = s.t_ms + cfg.settle_delay_ms;
        out.push_back(s);
    }
    return out;
}

LightKind expected_light(const ControllerConfig&, std::int64_t trigger_index) {
    // Both modes share the parity convention; in AmbientBlink the "regular"
    // phase is simply UV-off under ambient light.
    return trigger_index % 2 == 0 ? LightKind::Regular : LightKind::UV;
}

namespace {

std::string format_ms(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", t);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string format_schedule(const std::vector<ControlSignals>& signals) {
    std::string out;
    for (const auto& s : signals) {
        out += format_ms(s.t_ms);
        out += s.regular_on ? ",1" : ",0";
        out += s.uv_on ? ",1" : ",0";
        out += s.camera_trigger ? ",1\n" : ",0\n";
    }
    return out;
}

} // namespace invmark::controller

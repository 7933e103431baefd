#pragma once

#include <invmark/frame.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace invmark::controller {

struct ControllerConfig {
    double camera_rate_hz = 30.0;
    double regular_intensity = 1.0; // duty fraction, 0..1
    double uv_intensity = 1.0;      // duty fraction, 0..1
    CaptureMode mode = CaptureMode::DarkRoom;
    double settle_delay_ms = 1.0; // LED rise time between phase start and exposure
};

/// Line and trigger state at the start of one lighting phase.
struct ControlSignals {
    double t_ms = 0.0;
    bool regular_on = false;
    bool uv_on = false;
    bool camera_trigger = false;
    double exposure_ms = 0.0; // t_ms + settle delay

    friend bool operator==(const ControlSignals&, const ControlSignals&) = default;
};

/// Throws InvalidArgument on a non-positive rate, an intensity outside
/// [0, 1], or a settle delay that does not fit inside one phase.
void validate(const ControllerConfig& cfg);

/// Duration of one lighting phase (one camera period) in milliseconds.
double phase_period_ms(const ControllerConfig& cfg);

/// One entry per camera trigger whose full phase fits in `duration_ms`.
/// Trigger 0 is the regular (UV-off) phase; phases then alternate.
std::vector<ControlSignals> schedule(const ControllerConfig& cfg, double duration_ms);

/// Lighting phase active at trigger `trigger_index` (even: Regular, odd: UV).
LightKind expected_light(const ControllerConfig& cfg, std::int64_t trigger_index);

/// Newline-delimited `t_ms,regular,uv,trigger` records.
std::string format_schedule(const std::vector<ControlSignals>& signals);

} // namespace invmark::controller

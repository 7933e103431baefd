#pragma once

#include <functional>
#include <string_view>

namespace invmark::log {

using Sink = std::function<void(std::string_view)>;

/// Non-fatal diagnostics. The default sink writes "warning: ..." to stderr.
void warn(std::string_view message);

/// Replaces the warning sink and returns the previous one. An empty sink
/// silences warnings.
Sink set_warning_sink(Sink sink);

} // namespace invmark::log

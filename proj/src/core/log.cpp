#include <invmark/log.hpp>

#include <iostream>
#include <mutex>

namespace invmark::log {

namespace {

std::mutex& sink_mutex() {
    static std::mutex m;
    return m;
}

Sink& current_sink() {
    static Sink sink = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
    return sink;
}

} // namespace

void warn(std::string_view message) {
    std::lock_guard lock(sink_mutex());
    if (auto& sink = current_sink()) sink(message);
}

Sink set_warning_sink(Sink sink) {
    std::lock_guard lock(sink_mutex());
    std::swap(sink, current_sink());
    return sink;
}

} // namespace invmark::log

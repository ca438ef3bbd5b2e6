#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>

namespace tcdeg::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

using Sink = std::function<void(Level, std::string_view)>;

inline std::string_view level_name(Level level) {
    switch (level) {
        case Level::debug: return "debug";
        case Level::info: return "info";
        case Level::warn: return "warn";
        case Level::error: return "error";
    }
    return "?";
}

namespace detail {

struct State {
    std::mutex mutex;
    Level threshold = Level::warn;
    Sink sink = [](Level level, std::string_view msg) {
        std::clog << "[tcdeg " << level_name(level) << "] " << msg << '\n';
    };
};

inline State& state() {
    static State s;
    return s;
}

}  // namespace detail

inline void set_level(Level level) {
    auto& s = detail::state();
    std::lock_guard lock(s.mutex);
    s.threshold = level;
}

// Replace the output sink; returns the previous one so tests can restore it.
inline Sink set_sink(Sink sink) {
    auto& s = detail::state();
    std::lock_guard lock(s.mutex);
    return std::exchange(s.sink, std::move(sink));
}

inline void write(Level level, std::string_view msg) {
    auto& s = detail::state();
    std::lock_guard lock(s.mutex);
    if (level >= s.threshold && s.sink) s.sink(level, msg);
}

inline void debug(std::string_view msg) { write(Level::debug, msg); }
inline void info(std::string_view msg) { write(Level::info, msg); }
inline void warn(std::string_view msg) { write(Level::warn, msg); }

}  // namespace tcdeg::log

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tcdeg/errors.hpp"

namespace tcdeg {

enum class Engine { Analytic, Oracle, Classical, Validate };

inline std::string_view to_string(Engine e) {
    switch (e) {
        case Engine::Analytic: return "analytic";
        case Engine::Oracle: return "oracle";
        case Engine::Classical: return "classical";
        case Engine::Validate: return "validate";
    }
    return "?";
}

inline Engine engine_from_string(std::string_view s) {
    if (s == "analytic") return Engine::Analytic;
    if (s == "oracle") return Engine::Oracle;
    if (s == "classical") return Engine::Classical;
    if (s == "validate") return Engine::Validate;
    throw ConfigError("unknown engine: " + std::string(s));
}

// C(t) samples. The optional columns (u, v, std_error, leakage) are either
// empty or the same length as t.
struct ConcurrenceSeries {
    Engine engine = Engine::Analytic;
    std::vector<double> t;
    std::vector<double> omega_t;
    std::vector<double> concurrence;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> std_error;
    std::vector<double> leakage;
    int fock_dim = 0;  // 0 when no Fock truncation was involved

    std::size_t size() const { return t.size(); }
    bool has_uv() const { return !u.empty(); }
    bool has_std_error() const { return !std_error.empty(); }
    bool has_leakage() const { return !leakage.empty(); }

    friend bool operator==(const ConcurrenceSeries&, const ConcurrenceSeries&) = default;
};

// n_points evenly spaced times including both ends.
inline std::vector<double> linspace(double start, double end, int n_points) {
    if (n_points < 2) throw ConfigError("time grid needs at least 2 points");
    if (!(end > start)) throw ConfigError("time grid end must exceed start");
    std::vector<double> out(static_cast<std::size_t>(n_points));
    const double step = (end - start) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
    out.back() = end;
    return out;
}

}  // namespace tcdeg

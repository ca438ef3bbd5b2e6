#pragma once

// Scenario drivers behind the CLI subcommands.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcdeg/analytic.hpp"
#include "tcdeg/config.hpp"
#include "tcdeg/errors.hpp"
#include "tcdeg/fock_oracle.hpp"
#include "tcdeg/io.hpp"
#include "tcdeg/neoclassical.hpp"
#include "tcdeg/series.hpp"

namespace tcdeg::scenario {

using json = nlohmann::json;
using config::ScenarioConfig;

struct ValidationReport {
    double max_abs_diff = 0.0;
    double worst_t = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    json to_json() const {
        return {{"max_abs_diff", max_abs_diff},
                {"worst_t", worst_t},
                {"tolerance", tolerance},
                {"pass", pass}};
    }
};

struct RunResult {
    ConcurrenceSeries series;
    std::optional<ValidationReport> validation;
};

namespace detail {

inline const ModelParams& require_params(const ScenarioConfig& cfg) {
    if (!cfg.params) throw ConfigError("config needs params");
    return *cfg.params;
}

inline std::vector<double> require_grid(const ScenarioConfig& cfg) {
    if (!cfg.time_grid) throw ConfigError("config needs time_grid");
    return linspace(cfg.time_grid->t_start, cfg.time_grid->t_end, cfg.time_grid->n_points);
}

inline const OscillatorSpec& require_oscillator(const ScenarioConfig& cfg) {
    if (cfg.phase_space) throw ConfigError("phase_space is only valid for the classical engine");
    if (!cfg.oscillator) throw ConfigError("config needs an oscillator description");
    return *cfg.oscillator;
}

inline bool stationary(BellKind kind) {
    return kind == BellKind::PsiMinus || kind == BellKind::PhiMinus;
}

}  // namespace detail

// Psi- and Phi- are eigenstates of the degenerate Hamiltonian and stay
// maximally entangled; Phi+ is related to Psi+ by a local unitary commuting
// with H, so both follow the Psi+ closed form.
inline ConcurrenceSeries run_analytic(const ScenarioConfig& cfg) {
    const auto& params = detail::require_params(cfg);
    const auto& spec = detail::require_oscillator(cfg);
    const auto times = detail::require_grid(cfg);
    if (std::holds_alternative<ExplicitState>(spec))
        throw ConfigError("analytic engine has no closed form for an explicit oscillator density; use the oracle engine");
    warn_if_nondegenerate(params, "analytic");

    ConcurrenceSeries out;
    out.engine = Engine::Analytic;
    for (double t : times) {
        out.t.push_back(t);
        out.omega_t.push_back(params.omega() * t);
        if (detail::stationary(cfg.qubit_init)) {
            out.concurrence.push_back(1.0);
        } else {
            out.concurrence.push_back(analytic::concurrence(spec, t, params));
            const cplx i_t = analytic::psi_plus_coherence(spec, t, params);
            out.u.push_back(i_t.real());
            out.v.push_back(i_t.imag());
        }
    }
    return out;
}

inline ConcurrenceSeries run_oracle(const ScenarioConfig& cfg) {
    const auto& params = detail::require_params(cfg);
    const auto& spec = detail::require_oscillator(cfg);
    oracle::OracleOptions options;
    options.dim = cfg.oracle_dim;
    return oracle::oracle_concurrence_series(cfg.qubit_init, spec, detail::require_grid(cfg), params,
                                             options);
}

inline ConcurrenceSeries run_classical(const ScenarioConfig& cfg) {
    const auto& params = detail::require_params(cfg);
    if (cfg.oscillator) throw ConfigError("classical engine takes phase_space, not oscillator");
    if (!cfg.phase_space) throw ConfigError("classical engine needs phase_space");
    if (cfg.qubit_init != BellKind::PsiPlus)
        throw ConfigError("classical engine is defined for the PsiPlus initial state");
    const auto times = detail::require_grid(cfg);
    const auto& dist = *cfg.phase_space;

    ConcurrenceSeries out;
    out.engine = Engine::Classical;
    std::uint64_t point = 0;
    for (double t : times) {
        out.t.push_back(t);
        out.omega_t.push_back(params.omega() * t);
        if (cfg.monte_carlo.enabled) {
            // Distinct, reproducible stream per grid point.
            const std::uint64_t seed = cfg.monte_carlo.seed + 0x9E3779B97F4A7C15ull * point++;
            const auto mc = neoclassical::monte_carlo_classical_concurrence(
                dist, t, params, cfg.monte_carlo.samples, seed);
            out.concurrence.push_back(mc.estimate);
            out.std_error.push_back(mc.std_error);
        } else {
            out.concurrence.push_back(neoclassical::classical_concurrence(dist, t, params));
        }
    }
    return out;
}

inline RunResult run_validate(const ScenarioConfig& cfg) {
    ScenarioConfig analytic_cfg = cfg;
    const ConcurrenceSeries reference = run_analytic(analytic_cfg);
    ConcurrenceSeries checked = run_oracle(cfg);
    checked.engine = Engine::Validate;

    ValidationReport report;
    report.tolerance = cfg.validate_tolerance;
    for (std::size_t i = 0; i < checked.size(); ++i) {
        const double diff = std::abs(checked.concurrence[i] - reference.concurrence[i]);
        if (diff > report.max_abs_diff) {
            report.max_abs_diff = diff;
            report.worst_t = checked.t[i];
        }
    }
    report.pass = report.max_abs_diff <= report.tolerance;
    return {std::move(checked), report};
}

inline RunResult run(const ScenarioConfig& cfg) {
    switch (cfg.engine) {
        case Engine::Analytic: return {run_analytic(cfg), std::nullopt};
        case Engine::Oracle: return {run_oracle(cfg), std::nullopt};
        case Engine::Classical: return {run_classical(cfg), std::nullopt};
        case Engine::Validate: return run_validate(cfg);
    }
    throw ConfigError("unknown engine");
}

// Half-period concurrence C(wt = pi) against beta for each oscillator state.
struct SweepTable {
    std::vector<std::string> spec;
    std::vector<double> beta;
    std::vector<double> concurrence;
    std::size_t size() const { return beta.size(); }
};

inline SweepTable sweep_beta(const ScenarioConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("sweep-beta needs a sweep block");
    const auto& sweep = *cfg.sweep;
    SweepTable out;
    for (const auto& spec : sweep.oscillators) {
        if (std::holds_alternative<ExplicitState>(spec))
            throw ConfigError("sweep-beta supports thermal, coherent and fock oscillators");
        const std::string label = describe(spec);
        for (int i = 0; i < sweep.n_points; ++i) {
            const double beta = i + 1 == sweep.n_points
                                    ? sweep.beta_end
                                    : sweep.beta_start + (sweep.beta_end - sweep.beta_start) * i /
                                                             (sweep.n_points - 1);
            out.spec.push_back(label);
            out.beta.push_back(beta);
            out.concurrence.push_back(analytic::half_period_concurrence(spec, beta));
        }
    }
    return out;
}

inline std::string sweep_to_csv(const SweepTable& table) {
    if (table.size() == 0) throw io::IoError("refusing to emit an empty sweep");
    std::string out = "spec,beta,omega_t,C\n";
    const std::string half_period = io::format_number(std::numbers::pi);
    for (std::size_t i = 0; i < table.size(); ++i) {
        out += '"' + table.spec[i] + "\"," + io::format_number(table.beta[i]) + ',' + half_period + ',' +
               io::format_number(table.concurrence[i]) + '\n';
    }
    return out;
}

inline json sweep_to_json(const SweepTable& table, const json& config_echo) {
    if (table.size() == 0) throw io::IoError("refusing to emit an empty sweep");
    json j;
    j["artifact"] = io::kArtifactName;
    j["version"] = io::kArtifactVersion;
    j["kind"] = "sweep-beta";
    j["config"] = config_echo;
    j["omega_t"] = std::numbers::pi;
    j["spec"] = table.spec;
    j["beta"] = table.beta;
    j["C"] = table.concurrence;
    return j;
}

inline oracle::SpectrumReport spectrum(const ScenarioConfig& cfg, int default_dim = 60) {
    const auto& params = detail::require_params(cfg);
    const int dim = cfg.oracle_dim > 0 ? cfg.oracle_dim : default_dim;
    return oracle::spectrum_check(params, oracle::FockSpace(dim));
}

inline std::string spectrum_to_csv(const oracle::SpectrumReport& report) {
    std::string out = "index,numerical,expected,N,j,m,abs_error\n";
    for (const auto& l : report.levels) {
        out += std::to_string(l.index) + ',' + io::format_number(l.numerical) + ',' +
               io::format_number(l.expected) + ',' + std::to_string(l.n) + ',' + std::to_string(l.j) +
               ',' + std::to_string(l.m) + ',' + io::format_number(l.abs_error) + '\n';
    }
    return out;
}

inline json spectrum_to_json(const oracle::SpectrumReport& report, const json& config_echo) {
    json levels = json::array();
    for (const auto& l : report.levels) {
        levels.push_back({{"index", l.index},
                          {"numerical", l.numerical},
                          {"expected", l.expected},
                          {"N", l.n},
                          {"j", l.j},
                          {"m", l.m},
                          {"abs_error", l.abs_error}});
    }
    return {{"artifact", io::kArtifactName},
            {"version", io::kArtifactVersion},
            {"kind", "spectrum"},
            {"config", config_echo},
            {"dim", report.dim},
            {"checked", report.checked},
            {"tolerance", report.tolerance},
            {"max_abs_error", report.max_abs_error},
            {"pass", report.ok()},
            {"levels", levels}};
}

}  // namespace tcdeg::scenario

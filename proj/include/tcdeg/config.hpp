#pragma once

// Scenario configuration: a single JSON document, schema version 1. Unknown
// keys are rejected at every level.
//
// {
//   "schema_version": 1,
//   "engine": "analytic" | "oracle" | "classical" | "validate",
//   "qubit_init": "PsiPlus" | "PsiMinus" | "PhiPlus" | "PhiMinus",
//   "params": {"omega": 1.0, "lambda": 0.1, "omega0": 0.0},
//   "oscillator": {"kind": "thermal", "mean_n": 1.0}
//               | {"kind": "coherent", "alpha0": [re, im]}
//               | {"kind": "fock", "n": 2}
//               | {"kind": "explicit", "re": [[...]], "im": [[...]]},
//   "phase_space": {"kind": "delta", "q0": 0, "p0": 0}
//                | {"kind": "gaussian", "q_bar": 0, "p_bar": 0, "dq": 1, "dp": 1}
//                | {"kind": "thermal", "kT": 1.0}
//                | {"kind": "min_uncertainty", "q_bar": 0, "p_bar": 0}
//                | {"kind": "coherent", "alpha0": [re, im]},
//   "time_grid": {"t_start": 0, "t_end": 12.566370614359172, "n_points": 200},
//   "oracle": {"dim": 0},
//   "monte_carlo": {"enabled": false, "samples": 100000, "seed": 1},
//   "validate": {"tolerance": 1e-6},
//   "sweep": {"beta_start": 0, "beta_end": 0.3, "n_points": 61, "oscillators": [ ... ]},
//   "output": {"path": "out.csv", "format": "csv"}
// }

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcdeg/errors.hpp"
#include "tcdeg/model.hpp"
#include "tcdeg/neoclassical.hpp"
#include "tcdeg/oscillator.hpp"
#include "tcdeg/qubit.hpp"
#include "tcdeg/series.hpp"

namespace tcdeg::config {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    int n_points = 0;
};

struct MonteCarloOptions {
    bool enabled = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
};

struct SweepOptions {
    double beta_start = 0.0;
    double beta_end = 0.3;
    int n_points = 61;
    std::vector<OscillatorSpec> oscillators;
};

struct OutputOptions {
    std::string path;  // empty: stdout
    std::string format = "csv";
};

struct ScenarioConfig {
    Engine engine = Engine::Analytic;
    BellKind qubit_init = BellKind::PsiPlus;
    std::optional<ModelParams> params;
    std::optional<OscillatorSpec> oscillator;
    std::optional<neoclassical::PhaseSpaceDist> phase_space;
    std::optional<TimeGrid> time_grid;
    int oracle_dim = 0;
    MonteCarloOptions monte_carlo;
    double validate_tolerance = 1e-6;
    std::optional<SweepOptions> sweep;
    OutputOptions output;
};

namespace detail {

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
    if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!ok.contains(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError("missing key '" + std::string(key) + "' in " + where);
    return obj.at(key);
}

inline double number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
    return v.get<double>();
}

inline double number_or(const json& obj, const char* key, const std::string& where, double fallback) {
    return obj.contains(key) ? number(obj, key, where) : fallback;
}

inline std::int64_t integer(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    return v.get<std::int64_t>();
}

inline std::string string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

inline cplx complex_pair(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(where + "." + key + " must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

inline Eigen::MatrixXd real_matrix(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ConfigError(where + " must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(v.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = v[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
            throw ConfigError(where + " must be square");
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!row[static_cast<std::size_t>(j)].is_number())
                throw ConfigError(where + " entries must be numbers");
            m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
        }
    }
    return m;
}

}  // namespace detail

inline ModelParams parse_params(const json& j) {
    const std::string where = "params";
    detail::check_keys(j, {"omega", "lambda", "omega0"}, where);
    return ModelParams(detail::number(j, "omega", where), detail::number(j, "lambda", where),
                       detail::number_or(j, "omega0", where, 0.0));
}

inline OscillatorSpec parse_oscillator(const json& j, const std::string& where = "oscillator") {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    const std::string kind = detail::string(j, "kind", where);
    OscillatorSpec spec;
    if (kind == "thermal") {
        detail::check_keys(j, {"kind", "mean_n"}, where);
        spec = ThermalState{detail::number(j, "mean_n", where)};
    } else if (kind == "coherent") {
        detail::check_keys(j, {"kind", "alpha0"}, where);
        spec = CoherentState{detail::complex_pair(j, "alpha0", where)};
    } else if (kind == "fock") {
        detail::check_keys(j, {"kind", "n"}, where);
        spec = FockState{static_cast<int>(detail::integer(j, "n", where))};
    } else if (kind == "explicit") {
        detail::check_keys(j, {"kind", "re", "im"}, where);
        const Eigen::MatrixXd re = detail::real_matrix(detail::require(j, "re", where), where + ".re");
        Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
        if (j.contains("im")) im = detail::real_matrix(j.at("im"), where + ".im");
        if (im.rows() != re.rows()) throw ConfigError(where + ": re and im sizes differ");
        Eigen::MatrixXcd rho(re.rows(), re.cols());
        rho.real() = re;
        rho.imag() = im;
        spec = ExplicitState{rho};
    } else {
        throw ConfigError("unknown oscillator kind '" + kind + "'");
    }
    validate(spec);
    return spec;
}

inline neoclassical::PhaseSpaceDist parse_phase_space(const json& j, const ModelParams& params) {
    const std::string where = "phase_space";
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    const std::string kind = detail::string(j, "kind", where);
    if (kind == "delta") {
        detail::check_keys(j, {"kind", "q0", "p0"}, where);
        return neoclassical::Delta{detail::number(j, "q0", where), detail::number(j, "p0", where)};
    }
    if (kind == "gaussian") {
        detail::check_keys(j, {"kind", "q_bar", "p_bar", "dq", "dp"}, where);
        neoclassical::Gaussian g{detail::number_or(j, "q_bar", where, 0.0),
                                 detail::number_or(j, "p_bar", where, 0.0),
                                 detail::number(j, "dq", where), detail::number(j, "dp", where)};
        neoclassical::validate(g);
        return g;
    }
    if (kind == "thermal") {
        detail::check_keys(j, {"kind", "kT"}, where);
        return neoclassical::thermal_widths({detail::number(j, "kT", where)}, params);
    }
    if (kind == "min_uncertainty") {
        detail::check_keys(j, {"kind", "q_bar", "p_bar"}, where);
        return neoclassical::minimum_uncertainty(detail::number_or(j, "q_bar", where, 0.0),
                                                 detail::number_or(j, "p_bar", where, 0.0), params);
    }
    if (kind == "coherent") {
        detail::check_keys(j, {"kind", "alpha0"}, where);
        return neoclassical::coherent_wigner(detail::complex_pair(j, "alpha0", where), params);
    }
    throw ConfigError("unknown phase_space kind '" + kind + "'");
}

inline ScenarioConfig parse_config(const json& j) {
    detail::check_keys(j, {"schema_version", "engine", "qubit_init", "params", "oscillator",
                           "phase_space", "time_grid", "oracle", "monte_carlo", "validate",
                           "sweep", "output"},
                       "config");
    if (detail::integer(j, "schema_version", "config") != kSchemaVersion)
        throw ConfigError("unsupported schema_version (expected 1)");

    ScenarioConfig cfg;
    if (j.contains("engine")) cfg.engine = engine_from_string(detail::string(j, "engine", "config"));
    if (j.contains("qubit_init"))
        cfg.qubit_init = bell_kind_from_string(detail::string(j, "qubit_init", "config"));
    if (j.contains("params")) cfg.params = parse_params(j.at("params"));
    if (j.contains("oscillator")) cfg.oscillator = parse_oscillator(j.at("oscillator"));
    if (j.contains("phase_space")) {
        if (!cfg.params) throw ConfigError("phase_space requires params");
        cfg.phase_space = parse_phase_space(j.at("phase_space"), *cfg.params);
    }
    if (j.contains("time_grid")) {
        const json& g = j.at("time_grid");
        detail::check_keys(g, {"t_start", "t_end", "n_points"}, "time_grid");
        TimeGrid grid{detail::number_or(g, "t_start", "time_grid", 0.0),
                      detail::number(g, "t_end", "time_grid"),
                      static_cast<int>(detail::integer(g, "n_points", "time_grid"))};
        if (grid.n_points < 2) throw ConfigError("time_grid.n_points must be at least 2");
        if (!(grid.t_end > grid.t_start)) throw ConfigError("time_grid.t_end must exceed t_start");
        cfg.time_grid = grid;
    }
    if (j.contains("oracle")) {
        const json& o = j.at("oracle");
        detail::check_keys(o, {"dim"}, "oracle");
        cfg.oracle_dim = static_cast<int>(detail::integer(o, "dim", "oracle"));
        if (cfg.oracle_dim != 0 && cfg.oracle_dim < 2)
            throw ConfigError("oracle.dim must be 0 (automatic) or at least 2");
    }
    if (j.contains("monte_carlo")) {
        const json& m = j.at("monte_carlo");
        detail::check_keys(m, {"enabled", "samples", "seed"}, "monte_carlo");
        if (m.contains("enabled")) {
            if (!m.at("enabled").is_boolean()) throw ConfigError("monte_carlo.enabled must be a boolean");
            cfg.monte_carlo.enabled = m.at("enabled").get<bool>();
        }
        if (m.contains("samples")) {
            const auto s = detail::integer(m, "samples", "monte_carlo");
            if (s < 1000) throw ConfigError("monte_carlo.samples must be at least 1000");
            cfg.monte_carlo.samples = static_cast<std::uint64_t>(s);
        }
        if (m.contains("seed")) {
            const json& s = m.at("seed");
            if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
                throw ConfigError("monte_carlo.seed must be a non-negative integer");
            cfg.monte_carlo.seed = s.get<std::uint64_t>();
        }
    }
    if (j.contains("validate")) {
        const json& v = j.at("validate");
        detail::check_keys(v, {"tolerance"}, "validate");
        cfg.validate_tolerance = detail::number(v, "tolerance", "validate");
        if (!(cfg.validate_tolerance > 0.0)) throw ConfigError("validate.tolerance must be positive");
    }
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        detail::check_keys(s, {"beta_start", "beta_end", "n_points", "oscillators"}, "sweep");
        SweepOptions sweep;
        sweep.beta_start = detail::number_or(s, "beta_start", "sweep", 0.0);
        sweep.beta_end = detail::number(s, "beta_end", "sweep");
        sweep.n_points = static_cast<int>(detail::integer(s, "n_points", "sweep"));
        if (sweep.beta_start < 0.0 || sweep.beta_end > 0.5 || !(sweep.beta_end > sweep.beta_start))
            throw ConfigError("sweep beta range must satisfy 0 <= beta_start < beta_end <= 0.5");
        if (sweep.n_points < 2) throw ConfigError("sweep.n_points must be at least 2");
        const json& list = detail::require(s, "oscillators", "sweep");
        if (!list.is_array() || list.empty()) throw ConfigError("sweep.oscillators must be a non-empty array");
        for (std::size_t i = 0; i < list.size(); ++i)
            sweep.oscillators.push_back(parse_oscillator(list[i], "sweep.oscillators[" + std::to_string(i) + "]"));
        cfg.sweep = sweep;
    }
    if (j.contains("output")) {
        const json& o = j.at("output");
        detail::check_keys(o, {"path", "format"}, "output");
        if (o.contains("path")) cfg.output.path = detail::string(o, "path", "output");
        if (o.contains("format")) cfg.output.format = detail::string(o, "format", "output");
    }
    if (cfg.output.format != "csv" && cfg.output.format != "json")
        throw ConfigError("output.format must be csv or json");
    return cfg;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
}

}  // namespace tcdeg::config

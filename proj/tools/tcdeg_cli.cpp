// tcdeg: command-line front end.
//
//   tcdeg run        --config PATH [--out PATH] [--format csv|json] [--seed U64] [--dim N]
//   tcdeg validate   --config PATH ...
//   tcdeg sweep-beta --config PATH ...
//   tcdeg spectrum   --config PATH ...
//
// Exit codes: 0 success, 2 configuration error, 3 numerical or validation failure.
// Errors are reported on stderr as a single JSON object.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcdeg/tcdeg.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string config_path;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> dim;
};

int report_error(int code, const std::string& kind, const std::string& message) {
    json err = {{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << std::endl;
    return code;
}

// Command-line overrides are folded into the JSON document so the echoed config
// reproduces the run exactly.
json load_config(const Options& opt, const std::string& subcommand) {
    json j = tcdeg::config::load_json_file(opt.config_path);
    if (!j.is_object()) throw tcdeg::ConfigError("config must be a JSON object");
    if (opt.seed) j["monte_carlo"]["seed"] = *opt.seed;
    if (opt.dim) j["oracle"]["dim"] = *opt.dim;
    if (!opt.out.empty()) j["output"]["path"] = opt.out;
    if (!opt.format.empty()) j["output"]["format"] = opt.format;
    if (subcommand == "validate") j["engine"] = "validate";
    return j;
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        std::fflush(stdout);
    } else {
        tcdeg::io::write_atomically(path, body);
    }
}

void print_summary(const std::string& path, const json& summary) {
    (path.empty() ? std::cerr : std::cout) << summary.dump() << std::endl;
}

int run_series(const json& echo) {
    const auto cfg = tcdeg::config::parse_config(echo);
    const auto result = tcdeg::scenario::run(cfg);
    json extra = json::object();
    if (result.validation) extra["validation"] = result.validation->to_json();
    tcdeg::io::emit(result.series, cfg.output.format, cfg.output.path, echo, extra);
    if (result.validation) {
        print_summary(cfg.output.path, {{"validation", result.validation->to_json()}});
        if (!result.validation->pass) return kExitNumerical;
    }
    return kExitOk;
}

int run_sweep(const json& echo) {
    const auto cfg = tcdeg::config::parse_config(echo);
    const auto table = tcdeg::scenario::sweep_beta(cfg);
    const std::string body = cfg.output.format == "json"
                                 ? tcdeg::scenario::sweep_to_json(table, echo).dump(2) + "\n"
                                 : tcdeg::scenario::sweep_to_csv(table);
    write_text(cfg.output.path, body);
    return kExitOk;
}

int run_spectrum(const json& echo) {
    const auto cfg = tcdeg::config::parse_config(echo);
    const auto report = tcdeg::scenario::spectrum(cfg);
    const std::string body = cfg.output.format == "json"
                                 ? tcdeg::scenario::spectrum_to_json(report, echo).dump(2) + "\n"
                                 : tcdeg::scenario::spectrum_to_csv(report);
    write_text(cfg.output.path, body);
    print_summary(cfg.output.path, {{"spectrum",
                                     {{"dim", report.dim},
                                      {"checked", report.checked},
                                      {"max_abs_error", report.max_abs_error},
                                      {"tolerance", report.tolerance},
                                      {"pass", report.ok()}}}});
    return report.ok() ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit degenerate Tavis-Cummings dynamics beyond the RWA"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "Scenario config (JSON)")->required();
        sub->add_option("--out", opt.out, "Output path (default: stdout)");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", opt.seed, "Monte Carlo seed");
        sub->add_option("--dim", opt.dim, "Fock truncation dimension (0 = automatic)")
            ->check(CLI::NonNegativeNumber);
    };
    auto* run = app.add_subcommand("run", "Run the configured engine over the time grid");
    auto* validate = app.add_subcommand("validate", "Compare analytic and oracle engines");
    auto* sweep = app.add_subcommand("sweep-beta", "Half-period concurrence against beta");
    auto* spectrum = app.add_subcommand("spectrum", "Oracle eigenvalues against E_{N,m}");
    for (auto* sub : {run, validate, sweep, spectrum}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return report_error(kExitConfig, "usage", e.what());
    }

    try {
        if (*run) return run_series(load_config(opt, "run"));
        if (*validate) return run_series(load_config(opt, "validate"));
        if (*sweep) return run_sweep(load_config(opt, "sweep-beta"));
        if (*spectrum) return run_spectrum(load_config(opt, "spectrum"));
    } catch (const tcdeg::ConfigError& e) {
        return report_error(kExitConfig, "config", e.what());
    } catch (const tcdeg::io::IoError& e) {
        return report_error(kExitConfig, "io", e.what());
    } catch (const nlohmann::json::exception& e) {
        return report_error(kExitConfig, "config", e.what());
    } catch (const tcdeg::NumericalError& e) {
        return report_error(kExitNumerical, "numerical", e.what());
    } catch (const std::exception& e) {
        return report_error(kExitNumerical, "internal", e.what());
    }
    return kExitConfig;
}

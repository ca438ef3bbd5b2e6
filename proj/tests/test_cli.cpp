#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tcdeg/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "tcdeg_test_cli";
    fs::create_directories(dir);
    return dir;
}

Outcome run_cli(const std::string& args) {
    const auto out = scratch() / "stdout.txt";
    const auto err = scratch() / "stderr.txt";
    const std::string cmd = std::string("\"") + TCDEG_CLI_PATH + "\" " + args + " >\"" + out.string() +
                            "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Outcome o;
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.out = tcdeg::io::read_file(out);
    o.err = tcdeg::io::read_file(err);
    return o;
}

std::string sample(const std::string& name) { return std::string(TCDEG_SAMPLES_DIR) + "/" + name; }

fs::path write_config(const std::string& name, const json& j) {
    const auto path = scratch() / name;
    std::ofstream(path) << j.dump();
    return path;
}

}  // namespace

TEST(Cli, RunWritesCsvAndSidecar) {
    const auto out = scratch() / "thermal.csv";
    const auto o = run_cli("run --config " + sample("thermal_beta005.json") + " --out " + out.string());
    ASSERT_EQ(o.code, 0) << o.err;
    const auto series = tcdeg::io::from_csv(tcdeg::io::read_file(out));
    EXPECT_EQ(series.size(), 200u);
    EXPECT_DOUBLE_EQ(series.concurrence.front(), 1.0);
    const auto meta = json::parse(tcdeg::io::read_file(out.string() + ".meta.json"));
    EXPECT_EQ(meta.at("config").at("output").at("path"), out.string());
}

TEST(Cli, RunToStdoutAsJson) {
    const auto o = run_cli("run --config " + sample("thermal_beta005.json") + " --format json");
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json::parse(o.out);
    EXPECT_EQ(j.at("engine"), "analytic");
    EXPECT_EQ(j.at("C").size(), 200u);
}

TEST(Cli, SameSeedGivesIdenticalBytes) {
    const auto a = scratch() / "mc_a.csv";
    const auto b = scratch() / "mc_b.csv";
    ASSERT_EQ(run_cli("run --config " + sample("classical_coherent_mc.json") + " --seed 11 --out " + a.string()).code, 0);
    ASSERT_EQ(run_cli("run --config " + sample("classical_coherent_mc.json") + " --seed 11 --out " + b.string()).code, 0);
    EXPECT_EQ(tcdeg::io::read_file(a), tcdeg::io::read_file(b));
    const auto c = scratch() / "mc_c.csv";
    ASSERT_EQ(run_cli("run --config " + sample("classical_coherent_mc.json") + " --seed 12 --out " + c.string()).code, 0);
    EXPECT_NE(tcdeg::io::read_file(a), tcdeg::io::read_file(c));
}

TEST(Cli, OracleSingletIsFlat) {
    const auto o = run_cli("run --config " + sample("oracle_psiminus_coherent.json"));
    ASSERT_EQ(o.code, 0) << o.err;
    const auto series = tcdeg::io::from_csv(o.out);
    for (double c : series.concurrence) EXPECT_NEAR(c, 1.0, 1e-8);
}

TEST(Cli, ValidatePassesAndReports) {
    const auto o = run_cli("validate --config " + sample("validate_fock2.json") + " --out " + (scratch() / "v.csv").string());
    ASSERT_EQ(o.code, 0) << o.err;
    const auto report = json::parse(o.out).at("validation");
    EXPECT_TRUE(report.at("pass").get<bool>());
    EXPECT_LE(report.at("max_abs_diff").get<double>(), 1e-6);
}

TEST(Cli, ValidateFailureExitsThree) {
    // Engines agree to rounding level, not to 1e-18.
    auto j = json::parse(tcdeg::io::read_file(sample("validate_fock2.json")));
    j["validate"]["tolerance"] = 1e-18;
    const auto path = write_config("strict.json", j);
    const auto o = run_cli("validate --config " + path.string() + " --out " + (scratch() / "strict.csv").string());
    EXPECT_EQ(o.code, 3);
}

TEST(Cli, LeakageExitsThree) {
    const auto o = run_cli("run --config " + sample("validate_fock2.json") + " --dim 6");
    EXPECT_EQ(o.code, 3);
    EXPECT_EQ(json::parse(o.err).at("error").at("kind"), "numerical");
}

TEST(Cli, SweepAndSpectrum) {
    const auto sweep = run_cli("sweep-beta --config " + sample("sweep_half_period.json"));
    ASSERT_EQ(sweep.code, 0) << sweep.err;
    EXPECT_EQ(std::count(sweep.out.begin(), sweep.out.end(), '\n'), 1 + 4 * 61);

    const auto spectrum = run_cli("spectrum --config " + sample("spectrum_beta01.json") + " --format json");
    ASSERT_EQ(spectrum.code, 0) << spectrum.err;
    const auto j = json::parse(spectrum.out);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("checked"), 40);
}

TEST(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(run_cli("run --config /nonexistent/config.json").code, 2);
    EXPECT_EQ(run_cli("run").code, 2);
    EXPECT_EQ(run_cli("run --config " + sample("thermal_beta005.json") + " --format xml").code, 2);

    auto j = json::parse(tcdeg::io::read_file(sample("thermal_beta005.json")));
    j["params"]["mass"] = 1.0;
    const auto o = run_cli("run --config " + write_config("unknown_key.json", j).string());
    EXPECT_EQ(o.code, 2);
    const auto err = json::parse(o.err).at("error");
    EXPECT_EQ(err.at("kind"), "config");
    EXPECT_NE(err.at("message").get<std::string>().find("mass"), std::string::npos);

    const auto bad = scratch() / "bad.json";
    std::ofstream(bad) << "{ not json";
    EXPECT_EQ(run_cli("run --config " + bad.string()).code, 2);
}

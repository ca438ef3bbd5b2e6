#pragma once

// Series serialization.
//
// CSV: header `t,omega_t,C[,u,v,std_error,leakage]` (optional columns only when
// present), 12 significant digits, '\n' line endings, locale independent.
// JSON: the same columns at full double precision plus the config echo and
// diagnostics.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "tcdeg/errors.hpp"
#include "tcdeg/series.hpp"

namespace tcdeg::io {

using json = nlohmann::json;

inline constexpr std::string_view kArtifactName = "tcdeg";
inline constexpr std::string_view kArtifactVersion = "1.0.0";
inline constexpr int kCsvDigits = 12;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_number(double value, int digits = kCsvDigits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    if (res.ec != std::errc()) throw IoError("number formatting failed");
    return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view text) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw IoError("cannot parse number '" + std::string(text) + "'");
    return value;
}

// Writes to a temporary sibling and renames, so readers never see a partial file.
inline void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

inline void require_consistent(const ConcurrenceSeries& s) {
    if (s.size() == 0) throw IoError("refusing to emit an empty series");
    const auto n = s.size();
    auto ok = [n](const std::vector<double>& col) { return col.empty() || col.size() == n; };
    if (s.omega_t.size() != n || s.concurrence.size() != n || !ok(s.u) || !ok(s.v) ||
        !ok(s.std_error) || !ok(s.leakage) || s.u.size() != s.v.size())
        throw IoError("series columns have inconsistent lengths");
}

inline std::string to_csv(const ConcurrenceSeries& s) {
    require_consistent(s);
    std::string out = "t,omega_t,C";
    if (s.has_uv()) out += ",u,v";
    if (s.has_std_error()) out += ",std_error";
    if (s.has_leakage()) out += ",leakage";
    out += '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += format_number(s.t[i]);
        out += ',';
        out += format_number(s.omega_t[i]);
        out += ',';
        out += format_number(s.concurrence[i]);
        if (s.has_uv()) {
            out += ',' + format_number(s.u[i]);
            out += ',' + format_number(s.v[i]);
        }
        if (s.has_std_error()) out += ',' + format_number(s.std_error[i]);
        if (s.has_leakage()) out += ',' + format_number(s.leakage[i]);
        out += '\n';
    }
    return out;
}

inline ConcurrenceSeries from_csv(const std::string& text, Engine engine = Engine::Analytic) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    if (header.size() < 3 || header[0] != "t" || header[1] != "omega_t" || header[2] != "C")
        throw IoError("CSV header must start with t,omega_t,C");
    ConcurrenceSeries s;
    s.engine = engine;
    std::vector<std::vector<double>*> columns{&s.t, &s.omega_t, &s.concurrence};
    for (std::size_t k = 3; k < header.size(); ++k) {
        if (header[k] == "u") columns.push_back(&s.u);
        else if (header[k] == "v") columns.push_back(&s.v);
        else if (header[k] == "std_error") columns.push_back(&s.std_error);
        else if (header[k] == "leakage") columns.push_back(&s.leakage);
        else throw IoError("unknown CSV column '" + header[k] + "'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t col = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const auto end = comma == std::string::npos ? line.size() : comma;
            if (col >= columns.size()) throw IoError("too many CSV fields");
            columns[col++]->push_back(parse_number(std::string_view(line).substr(start, end - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (col != columns.size()) throw IoError("too few CSV fields");
    }
    require_consistent(s);
    return s;
}

inline json to_json(const ConcurrenceSeries& s, const json& config_echo = json::object(),
                    const json& extra = json::object()) {
    require_consistent(s);
    json j;
    j["artifact"] = kArtifactName;
    j["version"] = kArtifactVersion;
    j["engine"] = to_string(s.engine);
    j["config"] = config_echo;
    j["fock_dim"] = s.fock_dim;
    j["t"] = s.t;
    j["omega_t"] = s.omega_t;
    j["C"] = s.concurrence;
    if (s.has_uv()) {
        j["u"] = s.u;
        j["v"] = s.v;
    }
    if (s.has_std_error()) j["std_error"] = s.std_error;
    if (s.has_leakage()) j["leakage"] = s.leakage;
    for (const auto& item : extra.items()) j[item.key()] = item.value();
    return j;
}

inline ConcurrenceSeries series_from_json(const json& j) {
    ConcurrenceSeries s;
    s.engine = engine_from_string(j.at("engine").get<std::string>());
    s.fock_dim = j.value("fock_dim", 0);
    s.t = j.at("t").get<std::vector<double>>();
    s.omega_t = j.at("omega_t").get<std::vector<double>>();
    s.concurrence = j.at("C").get<std::vector<double>>();
    if (j.contains("u")) s.u = j.at("u").get<std::vector<double>>();
    if (j.contains("v")) s.v = j.at("v").get<std::vector<double>>();
    if (j.contains("std_error")) s.std_error = j.at("std_error").get<std::vector<double>>();
    if (j.contains("leakage")) s.leakage = j.at("leakage").get<std::vector<double>>();
    require_consistent(s);
    return s;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes `series` as csv or json. CSV output gets a `<path>.meta.json` sidecar
// carrying the config echo and diagnostics. An empty path means stdout.
inline void emit(const ConcurrenceSeries& series, const std::string& format, const std::string& path,
                 const json& config_echo = json::object(), const json& extra = json::object()) {
    std::string body;
    if (format == "csv") body = to_csv(series);
    else if (format == "json") body = to_json(series, config_echo, extra).dump(2) + "\n";
    else throw IoError("unknown output format '" + format + "'");

    if (path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        std::fflush(stdout);
        return;
    }
    write_atomically(path, body);
    if (format == "csv") {
        json meta;
        meta["artifact"] = kArtifactName;
        meta["version"] = kArtifactVersion;
        meta["engine"] = to_string(series.engine);
        meta["config"] = config_echo;
        meta["fock_dim"] = series.fock_dim;
        for (const auto& item : extra.items()) meta[item.key()] = item.value();
        write_atomically(path + ".meta.json", meta.dump(2) + "\n");
    }
}

}  // namespace tcdeg::io

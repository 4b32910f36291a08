#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "claw/errors.hpp"
#include "claw/grid.hpp"
#include "claw/solver.hpp"

namespace claw::io {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trip decimal form; reproducible across runs.
inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

inline std::string topology_string(Topology t) {
    return t == Topology::periodic ? "periodic" : "bounded";
}

inline Topology topology_from_string(const std::string& s) {
    if (s == "periodic") return Topology::periodic;
    if (s == "bounded") return Topology::bounded;
    throw data_error("field header: unknown topology '" + s + "'");
}

inline ordered_json field_header(const Field& f) {
    const Grid& g = f.grid();
    ordered_json j;
    j["dim"] = g.dim;
    j["n"] = std::vector<int>(g.n.begin(), g.n.begin() + g.dim);
    std::vector<double> h;
    for (int a = 0; a < g.dim; ++a) h.push_back(g.spacing(a));
    j["h"] = h;
    j["components"] = f.components();
    j["topology"] = topology_string(g.topology);
    std::vector<std::vector<double>> box;
    for (int a = 0; a < g.dim; ++a)
        box.push_back({g.lo[static_cast<std::size_t>(a)], g.hi[static_cast<std::size_t>(a)]});
    j["domain"] = box;
    return j;
}

/// Write `<stem>.json` (header) and `<stem>.f64` (raw little-endian doubles,
/// row-major, components interleaved).
inline void save_field(const Field& f, const std::string& stem) {
    {
        std::ofstream out(stem + ".json", std::ios::binary);
        if (!out) throw data_error("save_field: cannot open " + stem + ".json");
        out << field_header(f).dump(2) << "\n";
    }
    std::ofstream out(stem + ".f64", std::ios::binary);
    if (!out) throw data_error("save_field: cannot open " + stem + ".f64");
    const auto data = f.data();
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(double)));
}

inline Field load_field(const std::string& stem) {
    std::ifstream in(stem + ".json");
    if (!in) throw data_error("load_field: missing header " + stem + ".json");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw data_error("load_field: malformed header " + stem + ".json: " + e.what());
    }
    Grid g;
    try {
        g.dim = j.at("dim").get<int>();
        const auto n = j.at("n").get<std::vector<int>>();
        const auto box = j.at("domain").get<std::vector<std::vector<double>>>();
        const auto h = j.at("h").get<std::vector<double>>();
        if (static_cast<int>(n.size()) != g.dim || static_cast<int>(box.size()) != g.dim ||
            static_cast<int>(h.size()) != g.dim)
            throw data_error("axis count mismatch");
        g.topology = topology_from_string(j.at("topology").get<std::string>());
        for (int a = 0; a < g.dim; ++a) {
            const auto s = static_cast<std::size_t>(a);
            g.n[s] = n[s];
            g.lo[s] = box[s].at(0);
            g.hi[s] = box[s].at(1);
        }
        g.validate();
        for (int a = 0; a < g.dim; ++a) {
            const double expect = g.spacing(a);
            if (!(std::abs(expect - h[static_cast<std::size_t>(a)]) <= 1e-12 * expect))
                throw data_error("header spacing disagrees with domain/n");
        }
    } catch (const data_error&) {
        throw;
    } catch (const std::exception& e) {
        throw data_error("load_field: malformed header " + stem + ".json: " + e.what());
    }
    const int components = j.at("components").get<int>();
    if (components < 1) throw data_error("load_field: bad component count");

    Field f(g, components);
    std::ifstream data(stem + ".f64", std::ios::binary);
    if (!data) throw data_error("load_field: missing data " + stem + ".f64");
    data.seekg(0, std::ios::end);
    const auto bytes = static_cast<std::size_t>(data.tellg());
    const std::size_t expect = f.data().size() * sizeof(double);
    if (bytes != expect)
        throw data_error("load_field: " + stem + ".f64 has " + std::to_string(bytes) +
                         " bytes, expected " + std::to_string(expect));
    data.seekg(0);
    data.read(reinterpret_cast<char*>(f.data().data()), static_cast<std::streamsize>(expect));
    if (!data) throw data_error("load_field: short read on " + stem + ".f64");
    require_finite(f, "load_field");
    return f;
}

inline std::string step_stem(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "step_%06zu", i);
    return buf;
}

/// Trajectory file set: one field pair per stored step plus an index.
inline void save_trajectory(const Trajectory& traj, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    ordered_json j;
    j["system"] = traj.system;
    j["times"] = traj.times;
    j["scheme"] = to_string(traj.scheme);
    j["cfl"] = traj.cfl;
    j["bc"] = to_string(traj.bc);
    {
        std::ofstream out(dir / "trajectory.json", std::ios::binary);
        if (!out) throw data_error("save_trajectory: cannot open index in " + dir.string());
        out << j.dump(2) << "\n";
    }
    for (std::size_t i = 0; i < traj.states.size(); ++i)
        save_field(traj.states[i], (dir / step_stem(i)).string());
}

inline Trajectory load_trajectory(const std::filesystem::path& dir) {
    std::ifstream in(dir / "trajectory.json");
    if (!in) throw data_error("load_trajectory: missing index in " + dir.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw data_error("load_trajectory: malformed index: " + std::string(e.what()));
    }
    Trajectory traj;
    try {
        traj.system = j.at("system").get<std::string>();
        traj.times = j.at("times").get<std::vector<double>>();
        traj.scheme = flux_from_string(j.at("scheme").get<std::string>());
        traj.cfl = j.at("cfl").get<double>();
        traj.bc = bc_from_string(j.at("bc").get<std::string>());
    } catch (const std::exception& e) {
        throw data_error("load_trajectory: malformed index: " + std::string(e.what()));
    }
    if (traj.times.empty()) throw data_error("load_trajectory: empty time list");
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        traj.states.push_back(load_field((dir / step_stem(i)).string()));
    traj.grid = traj.states.front().grid();
    for (const Field& s : traj.states)
        if (!(s.grid() == traj.grid))
            throw data_error("load_trajectory: step grids disagree");
    return traj;
}

} // namespace claw::io

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "claw/builtins.hpp"
#include "claw/commutator.hpp"
#include "claw/defect.hpp"
#include "claw/errors.hpp"
#include "claw/holder.hpp"
#include "claw/io.hpp"
#include "claw/parallel.hpp"
#include "claw/solver.hpp"
#include "claw/system_file.hpp"

namespace claw::cli {

// Exit codes: 0 ok, 1 failed physics check (report still written),
// 2 usage, 3 data, 4 constraint violation.
inline constexpr int exit_ok = 0;
inline constexpr int exit_physics_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_data = 3;
inline constexpr int exit_constraint = 4;

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open output file " + path.string());
    out << text;
}

inline void write_summary(const std::filesystem::path& path, const io::ordered_json& j) {
    write_text(path, j.dump(2) + "\n");
}

struct CsvWriter {
    std::ostringstream out;
    explicit CsvWriter(const std::string& header) { out << header << "\n"; }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ",";
            out << cells[i];
        }
        out << "\n";
    }
    std::string str() const { return out.str(); }
};

inline std::string fd(double v) { return io::format_double(v); }

/// Parse "name:v1,v2,..." into name + values.
inline std::pair<std::string, std::vector<double>> parse_spec(const std::string& s) {
    const auto colon = s.find(':');
    std::pair<std::string, std::vector<double>> out;
    out.first = s.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::stringstream rest(s.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ','))
        if (!item.empty()) out.second.push_back(std::stod(item));
    return out;
}

} // namespace detail

struct GlobalOptions {
    std::string out_dir = ".";
    int threads = 1;
    std::uint64_t seed = 1;
    std::string format_version = "1";
};

/// Echoed configuration: the numeric experiment, excluding execution details
/// (worker count, output location) that must not change any result byte.
inline io::ordered_json config_echo(const GlobalOptions& g, const std::string& command) {
    io::ordered_json j;
    j["command"] = command;
    j["format_version"] = g.format_version;
    j["seed"] = g.seed;
    return j;
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

struct SynthOptions {
    int n = 65536;
    double alpha = 0.5;
    int base = 2;
    double amplitude = 1.0;
    std::string out = "field";
};

inline int cmd_synth(const GlobalOptions& g, const SynthOptions& o) {
    const Grid grid = Grid::periodic_1d(o.n);
    const Field f = make_weierstrass(grid, o.alpha, o.base, g.seed, o.amplitude);
    const std::filesystem::path dir(g.out_dir);
    std::filesystem::create_directories(dir);
    io::save_field(f, (dir / o.out).string());

    const HolderEstimate est = estimate_holder(f, o.alpha);
    io::ordered_json summary;
    auto cfg = config_echo(g, "synth");
    cfg["n"] = o.n;
    cfg["alpha"] = o.alpha;
    cfg["base"] = o.base;
    cfg["amplitude"] = o.amplitude;
    cfg["out"] = o.out;
    summary["config"] = cfg;
    summary["sup_norm"] = sup_norm(f);
    summary["l2_norm"] = l2_norm(f);
    summary["holder_seminorm"] = est.seminorm;
    summary["holder_pair_count"] = est.pair_count;
    detail::write_summary(dir / "synth_summary.json", summary);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// commutator-scan
// ---------------------------------------------------------------------------

struct ScanOptions {
    int n = 65536;
    double alpha = 0.5;
    int base = 2;
    double amplitude = 1.0;
    std::string nonlinearity = "square";
    double eps_decades = 2.5;
    double eps_max = 0.0; // default: L/16
    int eps_count = 12;
};

inline int cmd_commutator_scan(const GlobalOptions& g, const ScanOptions& o) {
    const Grid grid = Grid::periodic_1d(o.n);
    const Field v = make_weierstrass(grid, o.alpha, o.base, g.seed, o.amplitude);

    const double emax = o.eps_max > 0.0 ? o.eps_max : grid.length(0) / 16.0;
    const double emin = emax / std::pow(10.0, o.eps_decades);
    std::vector<double> eps(static_cast<std::size_t>(o.eps_count));
    for (int i = 0; i < o.eps_count; ++i)
        eps[static_cast<std::size_t>(i)] =
            emin * std::pow(emax / emin, static_cast<double>(i) / (o.eps_count - 1));

    const auto spec = detail::parse_spec(o.nonlinearity);
    SmoothMap F;
    double alpha_input = o.alpha;
    if (spec.first == "affine") {
        const double a = spec.second.size() > 0 ? spec.second[0] : 3.0;
        const double b = spec.second.size() > 1 ? spec.second[1] : 2.0;
        F = affine_map(a, b);
    } else {
        F = catalog_map(spec.first);
    }

    const ScalingReport rep = scaling_scan(v, F, eps, alpha_input);

    const double h = grid.spacing(0);
    detail::CsvWriter csv("epsilon,sup_norm,slope_running");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < rep.epsilons.size(); ++i) {
        double running = std::numeric_limits<double>::quiet_NaN();
        if (rep.epsilons[i] >= 8.0 * h && rep.sup_norms[i] > 0.0) {
            lx.push_back(std::log(rep.epsilons[i]));
            ly.push_back(std::log(rep.sup_norms[i]));
            if (lx.size() >= 2) running = least_squares(lx, ly).slope;
        }
        csv.row({detail::fd(rep.epsilons[i]), detail::fd(rep.sup_norms[i]), detail::fd(running)});
    }
    const std::filesystem::path dir(g.out_dir);
    detail::write_text(dir / "commutator_scan.csv", csv.str());

    io::ordered_json summary;
    auto cfg = config_echo(g, "commutator-scan");
    cfg["n"] = o.n;
    cfg["alpha"] = o.alpha;
    cfg["base"] = o.base;
    cfg["amplitude"] = o.amplitude;
    cfg["F"] = o.nonlinearity;
    cfg["eps_decades"] = o.eps_decades;
    cfg["eps_max"] = emax;
    cfg["eps_count"] = o.eps_count;
    summary["config"] = cfg;
    summary["alpha_input"] = rep.alpha_input;
    summary["slope"] = rep.fitted_slope;
    summary["intercept"] = rep.fitted_intercept;
    summary["r2"] = rep.r_squared;
    summary["verdict"] = rep.verdict;
    detail::write_summary(dir / "commutator_scan_summary.json", summary);
    return rep.verdict == "INCONCLUSIVE" ? exit_physics_fail : exit_ok;
}

// ---------------------------------------------------------------------------
// check-pair
// ---------------------------------------------------------------------------

struct CheckPairOptions {
    std::string system;
    std::string system_file;
    std::int64_t samples = 1000;
    double tolerance = 1e-8;
};

inline int cmd_check_pair(const GlobalOptions& g, const CheckPairOptions& o) {
    ConservationSystem sys;
    EntropyPair ep;
    if (!o.system_file.empty()) {
        std::tie(sys, ep) = load_system_file(o.system_file);
    } else {
        std::tie(sys, ep) = builtin(o.system);
    }

    const CompatibilityReport compat = check_compatibility(sys, ep, o.samples, g.seed);
    const CompatibilityReport sym = check_symmetry(sys, ep, o.samples, g.seed);
    const bool pass = compat.max_residual_compat <= o.tolerance &&
                      sym.max_residual_symmetry <= o.tolerance;

    detail::CsvWriter csv("check,residual,threshold,pass");
    csv.row({"compatibility", detail::fd(compat.max_residual_compat), detail::fd(o.tolerance),
             compat.max_residual_compat <= o.tolerance ? "1" : "0"});
    csv.row({"symmetry", detail::fd(sym.max_residual_symmetry), detail::fd(o.tolerance),
             sym.max_residual_symmetry <= o.tolerance ? "1" : "0"});
    const std::filesystem::path dir(g.out_dir);
    detail::write_text(dir / "check_pair.csv", csv.str());

    io::ordered_json summary;
    auto cfg = config_echo(g, "check-pair");
    cfg["system"] = o.system_file.empty() ? sys.name : std::string("file:" + o.system_file);
    cfg["samples"] = o.samples;
    cfg["tolerance"] = o.tolerance;
    summary["config"] = cfg;
    summary["verdict"] = pass ? "PASS" : "FAIL";
    summary["residual_compat"] = compat.max_residual_compat;
    summary["residual_symmetry"] = sym.max_residual_symmetry;
    summary["residual_derivative_fd"] = compat.max_residual_derivative;
    summary["worst_point_compat"] = compat.worst_point;
    summary["worst_point_symmetry"] = sym.worst_point;
    detail::write_summary(dir / "check_pair_summary.json", summary);
    return pass ? exit_ok : exit_physics_fail;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveOptions {
    std::string system = "burgers";
    int n = 1024;
    double lo = 0.0, hi = 1.0;
    double t_end = 0.2;
    double cfl = 0.4;
    std::string flux = "godunov";
    std::string bc = "periodic";
    std::string ic = "sin:1";
    int stride = 1;
    std::string out = "traj";
};

inline Field initial_condition(const Grid& grid, int k, const std::string& spec) {
    const auto [name, v] = detail::parse_spec(spec);
    if (name == "file") throw data_error("initial_condition: file ic must be resolved by caller");
    if (name == "riemann") {
        if (static_cast<int>(v.size()) != 2 * k)
            throw data_error("ic riemann needs 2k values (left state, right state)");
        const double mid = 0.5 * (grid.lo[0] + grid.hi[0]);
        return Field::from_function(grid, k, [&](std::span<const double> x, std::span<double> out) {
            for (int c = 0; c < k; ++c)
                out[static_cast<std::size_t>(c)] =
                    x[0] < mid ? v[static_cast<std::size_t>(c)] : v[static_cast<std::size_t>(c + k)];
        });
    }
    if (name == "sin") {
        if (k != 1) throw data_error("ic sin supports scalar systems only");
        const double amp = v.empty() ? 1.0 : v[0];
        const double L = grid.length(0);
        return Field::from_function(grid, 1, [&](std::span<const double> x, std::span<double> out) {
            out[0] = amp * std::sin(2.0 * std::numbers::pi * (x[0] - grid.lo[0]) / L);
        });
    }
    if (name == "bump") {
        if (k != 1) throw data_error("ic bump supports scalar systems only");
        const double amp = v.size() > 0 ? v[0] : 1.0;
        const double center = v.size() > 1 ? v[1] : 0.5 * (grid.lo[0] + grid.hi[0]);
        const double width = v.size() > 2 ? v[2] : grid.length(0) / 8.0;
        return Field::from_function(grid, 1, [&](std::span<const double> x, std::span<double> out) {
            const double s = (x[0] - center) / width;
            out[0] = amp * TestFunction::bump01(s);
        });
    }
    throw data_error("initial_condition: unknown ic spec '" + spec + "'");
}

inline int cmd_solve(const GlobalOptions& g, const SolveOptions& o) {
    auto [sys, ep] = builtin(o.system);
    const BoundaryCondition bc = bc_from_string(o.bc);
    const Grid grid = bc == BoundaryCondition::periodic ? Grid::periodic_1d(o.n, o.lo, o.hi)
                                                        : Grid::bounded_1d(o.n, o.lo, o.hi);
    Field u0;
    const auto icspec = detail::parse_spec(o.ic);
    if (icspec.first == "file") {
        u0 = io::load_field(o.ic.substr(5));
        if (!(u0.grid() == grid)) throw data_error("ic file grid does not match --n/--lo/--hi");
    } else {
        u0 = initial_condition(grid, sys.k, o.ic);
    }

    const Trajectory traj =
        solve(sys, u0, o.t_end, o.cfl, flux_from_string(o.flux), bc, o.stride);
    const std::filesystem::path dir(g.out_dir);
    io::save_trajectory(traj, dir / o.out);

    auto mass = [&](const Field& u) {
        Field a0 = pointwise_map(sys.flux[0], u);
        double m = 0.0;
        for (int j = 0; j < grid.n[0]; ++j) m += grid.quad_weight(0, j) * a0.at(j, 0);
        return m;
    };
    auto entropy = [&](const Field& u) {
        double e = 0.0;
        for (int j = 0; j < grid.n[0]; ++j) e += grid.quad_weight(0, j) * ep.eta(u.sample(j));
        return e;
    };

    io::ordered_json summary;
    auto cfg = config_echo(g, "solve");
    cfg["system"] = o.system;
    cfg["n"] = o.n;
    cfg["lo"] = o.lo;
    cfg["hi"] = o.hi;
    cfg["t_end"] = o.t_end;
    cfg["cfl"] = o.cfl;
    cfg["flux"] = o.flux;
    cfg["bc"] = o.bc;
    cfg["ic"] = o.ic;
    cfg["stride"] = o.stride;
    cfg["out"] = o.out;
    summary["config"] = cfg;
    summary["snapshots"] = traj.times.size();
    summary["t_final"] = traj.times.back();
    summary["mass_initial"] = mass(traj.states.front());
    summary["mass_final"] = mass(traj.states.back());
    summary["entropy_initial"] = entropy(traj.states.front());
    summary["entropy_final"] = entropy(traj.states.back());
    detail::write_summary(dir / "solve_summary.json", summary);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// defect
// ---------------------------------------------------------------------------

struct DefectOptions {
    std::string traj;
    std::string phis;
    std::string system_override;
};

inline std::vector<TestFunction> load_test_functions(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open test-function spec " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw data_error("malformed test-function spec: " + std::string(e.what()));
    }
    if (!j.is_array()) throw data_error("test-function spec must be a JSON list");
    std::vector<TestFunction> phis;
    for (const auto& e : j) {
        TestFunction phi;
        phi.dim = 2;
        const auto c = e.at("center").get<std::vector<double>>();
        const auto s = e.at("scales").get<std::vector<double>>();
        if (c.size() != 2 || s.size() != 2)
            throw data_error("test-function spec entries need center [t,x] and scales [st,sx]");
        phi.center = {c[0], c[1]};
        phi.scale = {s[0], s[1]};
        phis.push_back(phi);
    }
    return phis;
}

inline int cmd_defect(const GlobalOptions& g, const DefectOptions& o) {
    const Trajectory traj = io::load_trajectory(o.traj);
    const std::string sys_name = o.system_override.empty() ? traj.system : o.system_override;
    auto [sys, ep] = builtin(sys_name);
    const auto phis = load_test_functions(o.phis);

    const DefectReport rep = weak_residual(traj, ep, phis);

    detail::CsvWriter csv("phi_id,center_t,center_x,value");
    for (const auto& p : rep.pairings)
        csv.row({std::to_string(p.phi_id), detail::fd(p.center_t), detail::fd(p.center_x),
                 detail::fd(p.value)});
    const std::filesystem::path dir(g.out_dir);
    detail::write_text(dir / "defect.csv", csv.str());

    io::ordered_json summary;
    auto cfg = config_echo(g, "defect");
    cfg["traj"] = o.traj;
    cfg["phis"] = o.phis;
    cfg["system"] = sys_name;
    summary["config"] = cfg;
    summary["max_abs"] = rep.max_abs;
    summary["sign_summary"] = {{"positive", rep.positive},
                               {"negative", rep.negative},
                               {"near_zero", rep.near_zero}};
    detail::write_summary(dir / "defect_summary.json", summary);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// budget
// ---------------------------------------------------------------------------

struct BudgetOptions {
    std::string traj;
    std::vector<double> deltas;
    std::string system_override;
};

inline int cmd_budget(const GlobalOptions& g, const BudgetOptions& o) {
    const Trajectory traj = io::load_trajectory(o.traj);
    const std::string sys_name = o.system_override.empty() ? traj.system : o.system_override;
    auto [sys, ep] = builtin(sys_name);

    const EntropyBudget budget = entropy_budget(traj, ep, o.deltas);

    detail::CsvWriter entropy_csv("time,total_entropy");
    for (std::size_t i = 0; i < budget.times.size(); ++i)
        entropy_csv.row({detail::fd(budget.times[i]), detail::fd(budget.total_entropy[i])});
    detail::CsvWriter boundary_csv("delta,boundary_flux_sup");
    for (std::size_t i = 0; i < budget.delta_list.size(); ++i)
        boundary_csv.row(
            {detail::fd(budget.delta_list[i]), detail::fd(budget.boundary_flux_sup[i])});
    const std::filesystem::path dir(g.out_dir);
    detail::write_text(dir / "budget_entropy.csv", entropy_csv.str());
    detail::write_text(dir / "budget_boundary.csv", boundary_csv.str());

    io::ordered_json summary;
    auto cfg = config_echo(g, "budget");
    cfg["traj"] = o.traj;
    cfg["deltas"] = o.deltas;
    cfg["system"] = sys_name;
    summary["config"] = cfg;
    summary["entropy_initial"] = budget.total_entropy.front();
    summary["entropy_final"] = budget.total_entropy.back();
    summary["boundary_flux_sup"] = budget.boundary_flux_sup;
    summary["cutoff_entropy"] = budget.cutoff_entropy;
    detail::write_summary(dir / "budget_summary.json", summary);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args) {
    CLI::App app{"entropy-conservation diagnostics for conservation laws"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--out-dir", g.out_dir, "output directory");
    app.add_option("--threads", g.threads, "worker threads (does not change results)")
        ->check(CLI::Range(1, 256));
    app.add_option("--seed", g.seed, "deterministic seed");
    app.add_option("--format-version", g.format_version, "output schema version")
        ->check(CLI::IsMember({"1"}));

    SynthOptions synth;
    auto* synth_cmd = app.add_subcommand("synth", "write a synthetic Hölder field");
    synth_cmd->fallthrough();
    synth_cmd->add_option("--n", synth.n, "grid points")->check(CLI::Range(8, 1 << 26));
    synth_cmd->add_option("--alpha", synth.alpha, "Hölder exponent")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    synth_cmd->add_option("--base", synth.base, "lacunary base")->check(CLI::Range(2, 64));
    synth_cmd->add_option("--amplitude", synth.amplitude, "series amplitude");
    synth_cmd->add_option("--out", synth.out, "field stem");

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("commutator-scan", "commutator scaling sweep");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--n", scan.n, "grid points")->check(CLI::Range(8, 1 << 26));
    scan_cmd->add_option("--alpha", scan.alpha, "Hölder exponent")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    scan_cmd->add_option("--base", scan.base, "lacunary base")->check(CLI::Range(2, 64));
    scan_cmd->add_option("--amplitude", scan.amplitude, "series amplitude");
    scan_cmd->add_option("--F", scan.nonlinearity, "square|cube|exp-clamped|affine[:a,b]");
    scan_cmd->add_option("--eps-decades", scan.eps_decades, "decades of radii")
        ->check(CLI::Range(2.0, 6.0));
    scan_cmd->add_option("--eps-max", scan.eps_max, "largest radius (default L/16)");
    scan_cmd->add_option("--eps-count", scan.eps_count, "number of radii")
        ->check(CLI::Range(5, 64));

    CheckPairOptions pair;
    auto* pair_cmd = app.add_subcommand("check-pair", "verify entropy compatibility");
    pair_cmd->fallthrough();
    auto* sys_opt = pair_cmd->add_option("--system", pair.system, "builtin system name");
    pair_cmd->add_option("--system-file", pair.system_file, "plug-in expression file")
        ->excludes(sys_opt);
    pair_cmd->add_option("--samples", pair.samples, "sample count")
        ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1) << 24));
    pair_cmd->add_option("--tolerance", pair.tolerance, "pass threshold");

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "run the finite-volume solver");
    solve_cmd->fallthrough();
    solve_cmd->add_option("--system", solve_opts.system, "builtin system name");
    solve_cmd->add_option("--n", solve_opts.n, "cells")->check(CLI::Range(8, 1 << 22));
    solve_cmd->add_option("--lo", solve_opts.lo, "domain start");
    solve_cmd->add_option("--hi", solve_opts.hi, "domain end");
    solve_cmd->add_option("--t-end", solve_opts.t_end, "final time")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--cfl", solve_opts.cfl, "CFL number in (0,1)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    solve_cmd->add_option("--flux", solve_opts.flux, "godunov|rusanov")
        ->check(CLI::IsMember({"godunov", "rusanov"}));
    solve_cmd->add_option("--bc", solve_opts.bc, "periodic|outflow|zero-state")
        ->check(CLI::IsMember({"periodic", "outflow", "zero-state"}));
    solve_cmd->add_option("--ic", solve_opts.ic, "riemann:...|sin:amp|bump:amp,c,w|file:stem");
    solve_cmd->add_option("--stride", solve_opts.stride, "snapshot stride")
        ->check(CLI::Range(1, 1 << 20));
    solve_cmd->add_option("--out", solve_opts.out, "trajectory directory name");

    DefectOptions defect_opts;
    auto* defect_cmd = app.add_subcommand("defect", "weak-form entropy residuals");
    defect_cmd->fallthrough();
    defect_cmd->add_option("--traj", defect_opts.traj, "trajectory directory")->required();
    defect_cmd->add_option("--phis", defect_opts.phis, "test-function spec file")->required();
    defect_cmd->add_option("--system", defect_opts.system_override, "override system name");

    BudgetOptions budget_opts;
    auto* budget_cmd = app.add_subcommand("budget", "global entropy budget");
    budget_cmd->fallthrough();
    budget_cmd->add_option("--traj", budget_opts.traj, "trajectory directory")->required();
    budget_cmd->add_option("--deltas", budget_opts.deltas, "boundary-layer widths")
        ->required()
        ->delimiter(',');
    budget_cmd->add_option("--system", budget_opts.system_override, "override system name");

    std::vector<const char*> argv;
    argv.push_back("clawdiag");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    parallel::set_threads(g.threads);

    try {
        if (synth_cmd->parsed()) return cmd_synth(g, synth);
        if (scan_cmd->parsed()) return cmd_commutator_scan(g, scan);
        if (pair_cmd->parsed()) {
            if (pair.system.empty() && pair.system_file.empty()) {
                std::fprintf(stderr, "check-pair: need --system or --system-file\n");
                return exit_usage;
            }
            return cmd_check_pair(g, pair);
        }
        if (solve_cmd->parsed()) return cmd_solve(g, solve_opts);
        if (defect_cmd->parsed()) return cmd_defect(g, defect_opts);
        if (budget_cmd->parsed()) return cmd_budget(g, budget_opts);
    } catch (const data_error& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return exit_data;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "constraint violation: %s\n", e.what());
        return exit_constraint;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "constraint violation: %s\n", e.what());
        return exit_constraint;
    }
    return exit_usage;
}

} // namespace claw::cli

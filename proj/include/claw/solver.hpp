#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "claw/field_ops.hpp"
#include "claw/grid.hpp"
#include "claw/system.hpp"

namespace claw {

enum class FluxScheme { godunov, rusanov };
enum class BoundaryCondition { periodic, outflow, zero_state };

inline std::string to_string(FluxScheme s) {
    return s == FluxScheme::godunov ? "godunov" : "rusanov";
}
inline std::string to_string(BoundaryCondition b) {
    switch (b) {
        case BoundaryCondition::periodic: return "periodic";
        case BoundaryCondition::outflow: return "outflow";
        case BoundaryCondition::zero_state: return "zero-state";
    }
    return "?";
}

inline FluxScheme flux_from_string(const std::string& s) {
    if (s == "godunov") return FluxScheme::godunov;
    if (s == "rusanov") return FluxScheme::rusanov;
    throw std::invalid_argument("unknown flux scheme '" + s + "'");
}
inline BoundaryCondition bc_from_string(const std::string& s) {
    if (s == "periodic") return BoundaryCondition::periodic;
    if (s == "outflow") return BoundaryCondition::outflow;
    if (s == "zero-state") return BoundaryCondition::zero_state;
    throw std::invalid_argument("unknown boundary condition '" + s + "'");
}

/// Time-indexed sequence of states from the finite-volume solver.
struct Trajectory {
    Grid grid;
    std::vector<double> times;
    std::vector<Field> states;
    std::string system;
    FluxScheme scheme = FluxScheme::rusanov;
    double cfl = 0.0;
    BoundaryCondition bc = BoundaryCondition::periodic;

    const Field& state(std::size_t i) const { return states[i]; }
    std::size_t steps() const { return times.size(); }
};

namespace detail {

/// Exact Godunov flux for Burgers (convex scalar flux u^2/2):
/// F = max( f(max(ul, 0)), f(min(ur, 0)) ).
inline double burgers_godunov_flux(double ul, double ur) {
    const double a = std::max(ul, 0.0);
    const double b = std::min(ur, 0.0);
    return 0.5 * std::max(a * a, b * b);
}

struct Workspace {
    std::vector<double> ul, ur, fl, fr, flux;
};

} // namespace detail

/// First-order finite-volume update for the built-in evolvable 1D systems.
/// Godunov (exact Riemann) is implemented for Burgers only; Rusanov covers
/// every system with a wave-speed bound.  Both are entropy-satisfying.
///
/// Snapshots are stored every `snapshot_stride` steps (and always at t_end).
inline Trajectory solve(const ConservationSystem& sys, const Field& u0, double t_end, double cfl,
                        FluxScheme scheme, BoundaryCondition bc, int snapshot_stride = 1) {
    if (!sys.evolvable)
        throw std::invalid_argument("solve: system '" + sys.name + "' is not evolvable");
    if (sys.d != 1 || u0.grid().dim != 1)
        throw std::invalid_argument("solve: 1D systems only");
    if (u0.components() != sys.k)
        throw std::invalid_argument("solve: initial state has wrong component count");
    if (!(cfl > 0.0 && cfl < 1.0))
        throw std::invalid_argument("solve: cfl must lie in (0,1)");
    if (scheme == FluxScheme::godunov && sys.name != "burgers")
        throw std::invalid_argument("solve: godunov flux requires the burgers system");
    if (bc == BoundaryCondition::periodic && u0.grid().topology != Topology::periodic)
        throw std::invalid_argument("solve: periodic bc needs a periodic grid");
    if (bc != BoundaryCondition::periodic && u0.grid().topology != Topology::bounded)
        throw std::invalid_argument("solve: outflow/zero-state bc needs a bounded grid");
    if (snapshot_stride < 1) throw std::invalid_argument("solve: snapshot stride must be >= 1");
    if (!field_in_domain(u0, sys.domain))
        throw std::domain_error("solve: initial state escapes the domain box");

    const Grid& g = u0.grid();
    const int n = g.n[0];
    const int k = sys.k;
    const double h = g.spacing(0);
    const auto& A1 = sys.flux[1];

    Trajectory traj;
    traj.grid = g;
    traj.system = sys.name;
    traj.scheme = scheme;
    traj.cfl = cfl;
    traj.bc = bc;
    traj.times.push_back(0.0);
    traj.states.push_back(u0);

    Field u = u0;
    double t = 0.0;
    std::int64_t step = 0;
    std::vector<double> fL(static_cast<std::size_t>(k)), fR(static_cast<std::size_t>(k));
    std::vector<double> flux(static_cast<std::size_t>(n + 1) * k);

    auto ghost = [&](int side /*0 left, 1 right*/) -> std::vector<double> {
        std::vector<double> gstate(static_cast<std::size_t>(k));
        if (bc == BoundaryCondition::zero_state) {
            for (int c = 0; c < k; ++c)
                gstate[static_cast<std::size_t>(c)] = sys.reference_state[static_cast<std::size_t>(c)];
        } else { // outflow
            const std::int64_t edge = side == 0 ? 0 : n - 1;
            for (int c = 0; c < k; ++c) gstate[static_cast<std::size_t>(c)] = u.at(edge, c);
        }
        return gstate;
    };

    while (t < t_end) {
        // CFL-limited step from the current maximal wave speed.
        double lambda = 0.0;
        for (int j = 0; j < n; ++j) lambda = std::max(lambda, sys.wave_speed(u.sample(j)));
        if (!(lambda > 0.0)) lambda = 1e-12;
        double dt = cfl * h / lambda;
        if (t + dt >= t_end) dt = t_end - t;

        auto numerical_flux = [&](std::span<const double> ul, std::span<const double> ur,
                                  std::span<double> out) {
            if (scheme == FluxScheme::godunov) {
                out[0] = detail::burgers_godunov_flux(ul[0], ur[0]);
                return;
            }
            A1.value(ul, fL);
            A1.value(ur, fR);
            const double a = std::max(sys.wave_speed(ul), sys.wave_speed(ur));
            for (int c = 0; c < k; ++c)
                out[static_cast<std::size_t>(c)] =
                    0.5 * (fL[static_cast<std::size_t>(c)] + fR[static_cast<std::size_t>(c)]) -
                    0.5 * a * (ur[static_cast<std::size_t>(c)] - ul[static_cast<std::size_t>(c)]);
        };

        const std::vector<double> gl = bc == BoundaryCondition::periodic ? std::vector<double>{}
                                                                         : ghost(0);
        const std::vector<double> gr = bc == BoundaryCondition::periodic ? std::vector<double>{}
                                                                         : ghost(1);
        for (int f = 0; f <= n; ++f) {
            std::span<const double> ul, ur;
            if (f == 0)
                ul = bc == BoundaryCondition::periodic ? u.sample(n - 1) : std::span<const double>(gl);
            else
                ul = u.sample(f - 1);
            if (f == n)
                ur = bc == BoundaryCondition::periodic ? u.sample(0) : std::span<const double>(gr);
            else
                ur = u.sample(f);
            numerical_flux(ul, ur, {flux.data() + static_cast<std::size_t>(f) * k,
                                    static_cast<std::size_t>(k)});
        }

        const double r = dt / h;
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < k; ++c)
                u.at(j, c) -= r * (flux[static_cast<std::size_t>(j + 1) * k + c] -
                                   flux[static_cast<std::size_t>(j) * k + c]);

        t += dt;
        ++step;

        for (int j = 0; j < n; ++j) {
            if (!sys.domain.contains(u.sample(j)))
                throw std::domain_error("solve: state escapes the domain at t=" +
                                        std::to_string(t) + ", cell " + std::to_string(j));
        }

        if (step % snapshot_stride == 0 || t >= t_end) {
            traj.times.push_back(t);
            traj.states.push_back(u);
        }
    }
    return traj;
}

/// Decimate a trajectory in time and space.  Retained samples keep their
/// exact coordinates: on periodic grids the coarse domain is shifted by
/// (stride-1) h / 2 so the surviving cell centers line up, on bounded grids
/// the stride must divide n-1 so both endpoints survive.
inline Trajectory resample(const Trajectory& traj, int stride_t, int stride_x) {
    if (stride_t < 1 || stride_x < 1)
        throw std::invalid_argument("resample: strides must be >= 1");
    if (stride_t >= static_cast<int>(traj.times.size()))
        throw std::invalid_argument("resample: time stride exceeds available resolution");
    const Grid& g = traj.grid;
    const double h = g.spacing(0);
    Grid cg = g;
    if (g.topology == Topology::periodic) {
        if (g.n[0] % stride_x != 0 || g.n[0] / stride_x < 8)
            throw std::invalid_argument("resample: space stride must divide n with >= 8 cells left");
        cg.n[0] = g.n[0] / stride_x;
        cg.lo[0] = g.lo[0] - 0.5 * (stride_x - 1) * h;
        cg.hi[0] = cg.lo[0] + g.length(0);
    } else {
        if ((g.n[0] - 1) % stride_x != 0 || (g.n[0] - 1) / stride_x + 1 < 8)
            throw std::invalid_argument(
                "resample: space stride must divide n-1 with >= 8 nodes left");
        cg.n[0] = (g.n[0] - 1) / stride_x + 1;
    }

    Trajectory out;
    out.system = traj.system;
    out.scheme = traj.scheme;
    out.cfl = traj.cfl;
    out.bc = traj.bc;
    out.grid = cg;
    for (std::size_t i = 0; i < traj.times.size(); i += static_cast<std::size_t>(stride_t)) {
        out.times.push_back(traj.times[i]);
        const Field& s = traj.states[i];
        Field c(cg, s.components());
        for (int j = 0; j < cg.n[0]; ++j)
            for (int comp = 0; comp < s.components(); ++comp)
                c.at(j, comp) = s.at(static_cast<std::int64_t>(j) * stride_x, comp);
        out.states.push_back(std::move(c));
    }
    return out;
}

} // namespace claw

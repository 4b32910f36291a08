#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "claw/field_ops.hpp"
#include "claw/grid.hpp"
#include "claw/mollifier.hpp"
#include "claw/parallel.hpp"
#include "claw/solver.hpp"
#include "claw/system.hpp"
#include "claw/test_function.hpp"

namespace claw {

struct DefectReport {
    struct Pairing {
        int phi_id = 0;
        double center_t = 0.0;
        double center_x = 0.0;
        double value = 0.0;
    };
    std::vector<Pairing> pairings;
    double max_abs = 0.0;
    std::int64_t positive = 0, negative = 0, near_zero = 0;
};

namespace detail {

/// Trapezoid weight for a (possibly non-uniform) strictly increasing time list.
inline double time_weight(std::span<const double> times, std::size_t i) {
    const std::size_t n = times.size();
    if (n < 2) return 0.0;
    if (i == 0) return 0.5 * (times[1] - times[0]);
    if (i + 1 == n) return 0.5 * (times[n - 1] - times[n - 2]);
    return 0.5 * (times[i + 1] - times[i - 1]);
}

inline void require_trajectory_sane(const Trajectory& traj, const EntropyPair& ep) {
    if (traj.times.size() != traj.states.size() || traj.times.size() < 2)
        throw std::invalid_argument("trajectory: times/states inconsistent");
    for (std::size_t i = 1; i < traj.times.size(); ++i)
        if (!(traj.times[i] > traj.times[i - 1]))
            throw std::invalid_argument("trajectory: times must be strictly increasing");
    if (traj.states.front().components() != ep.k)
        throw std::invalid_argument("trajectory: state dimension does not match entropy pair");
    if (traj.grid.dim != 1)
        throw std::invalid_argument("defect diagnostics support 1D space only");
}

inline double max_time_step(std::span<const double> times) {
    double dt = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) dt = std::max(dt, times[i] - times[i - 1]);
    return dt;
}

} // namespace detail

/// Weak-form entropy residual pairings:
///   E(phi) = sum_{i=0..d} int int d_i phi . q_i(u) dx dt,   x_0 = t.
/// E near zero signals local entropy conservation inside supp phi; positive
/// values signal dissipation concentrated there.
inline DefectReport weak_residual(const Trajectory& traj, const EntropyPair& ep,
                                  std::span<const TestFunction> phis) {
    detail::require_trajectory_sane(traj, ep);
    const Grid& g = traj.grid;
    const auto& times = traj.times;
    const double dt_max = detail::max_time_step(times);

    for (const auto& phi : phis) {
        if (phi.dim != 2)
            throw std::invalid_argument("weak_residual: phi must be a space-time test function");
        if (!(phi.center[0] - phi.scale[0] >= times.front() &&
              phi.center[0] + phi.scale[0] <= times.back()) ||
            !(phi.center[1] - phi.scale[1] >= g.lo[0] && phi.center[1] + phi.scale[1] <= g.hi[0]))
            throw std::invalid_argument("weak_residual: phi support leaves the trajectory domain");
        if (dt_max > phi.scale[0] / 8.0)
            throw std::invalid_argument(
                "weak_residual: trajectory time step exceeds phi time-scale / 8");
    }

    DefectReport rep;
    rep.pairings.resize(phis.size());

    parallel::parallel_for(0, static_cast<std::int64_t>(phis.size()), [&](std::int64_t pi) {
        const TestFunction& phi = phis[static_cast<std::size_t>(pi)];
        double acc = 0.0;
        std::array<double, 2> tx{};
        std::vector<double> q(2, 0.0);
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            tx[0] = times[ti];
            if (tx[0] < phi.center[0] - phi.scale[0] || tx[0] > phi.center[0] + phi.scale[0])
                continue;
            const double wt = detail::time_weight(times, ti);
            const Field& u = traj.states[ti];
            double row = 0.0;
            for (int j = 0; j < g.n[0]; ++j) {
                tx[1] = g.coord(0, j);
                if (tx[1] < phi.center[1] - phi.scale[1] || tx[1] > phi.center[1] + phi.scale[1])
                    continue;
                const auto state = u.sample(j);
                double q0 = 0.0, q1 = 0.0;
                ep.q[0].value(state, {&q0, 1});
                ep.q[1].value(state, {&q1, 1});
                row += g.quad_weight(0, j) *
                       (phi.derivative(0, tx) * q0 + phi.derivative(1, tx) * q1);
            }
            acc += wt * row;
        }
        auto& pairing = rep.pairings[static_cast<std::size_t>(pi)];
        pairing.phi_id = static_cast<int>(pi);
        pairing.center_t = phi.center[0];
        pairing.center_x = phi.center[1];
        pairing.value = acc;
    });

    for (const auto& p : rep.pairings) rep.max_abs = std::max(rep.max_abs, std::abs(p.value));
    const double tol = 1e-12 * std::max(1.0, rep.max_abs);
    for (const auto& p : rep.pairings) {
        if (p.value > tol)
            ++rep.positive;
        else if (p.value < -tol)
            ++rep.negative;
        else
            ++rep.near_zero;
    }
    return rep;
}

/// Locate the steepest cell interface over all snapshots using the jump
/// threshold |du| > 10 x (mean absolute neighbor increment); returns the
/// cell coordinate.  Throws when no snapshot passes the threshold.
inline double locate_shock(const Trajectory& traj) {
    const Grid& g = traj.grid;
    double best_ratio = 0.0;
    double best_x = 0.0;
    for (const Field& u : traj.states) {
        double mean = 0.0;
        double biggest = 0.0;
        int arg = 0;
        const int n = g.n[0];
        for (int j = 0; j + 1 < n; ++j) {
            double jump = 0.0;
            for (int c = 0; c < u.components(); ++c)
                jump = std::max(jump, std::abs(u.at(j + 1, c) - u.at(j, c)));
            mean += jump;
            if (jump > biggest) {
                biggest = jump;
                arg = j;
            }
        }
        mean /= std::max(1, n - 1);
        if (mean <= 0.0) continue;
        const double ratio = biggest / mean;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_x = 0.5 * (g.coord(0, arg) + g.coord(0, arg + 1));
        }
    }
    if (best_ratio <= 10.0)
        throw std::invalid_argument("locate_shock: no shock detected (gradient threshold)");
    return best_x;
}

/// Entropy dissipation rate of a single isolated shock: the negative of
/// d/dt int_window eta dx + [q across the window edges], averaged over the
/// interior snapshot times.  Positive values mean dissipation.
inline double shock_dissipation_rate(const Trajectory& traj, const EntropyPair& ep,
                                     double window_halfwidth) {
    detail::require_trajectory_sane(traj, ep);
    const Grid& g = traj.grid;
    const double xs = locate_shock(traj);
    const double a = xs - window_halfwidth;
    const double b = xs + window_halfwidth;
    if (!(a > g.lo[0] && b < g.hi[0]))
        throw std::invalid_argument("shock_dissipation_rate: window leaves the domain");

    // cells whose coordinates fall inside [a, b]
    int ja = -1, jb = -1;
    for (int j = 0; j < g.n[0]; ++j) {
        const double x = g.coord(0, j);
        if (x >= a && ja < 0) ja = j;
        if (x <= b) jb = j;
    }
    if (ja < 0 || jb <= ja)
        throw std::invalid_argument("shock_dissipation_rate: window holds no cells");

    const auto& times = traj.times;
    const std::size_t nt = times.size();
    std::vector<double> S(nt, 0.0), G(nt, 0.0);
    const double h = g.spacing(0);
    for (std::size_t ti = 0; ti < nt; ++ti) {
        const Field& u = traj.states[ti];
        double s = 0.0;
        for (int j = ja; j <= jb; ++j) {
            const double w = (j == ja || j == jb) ? 0.5 * h : h;
            s += w * ep.eta(u.sample(j));
        }
        S[ti] = s;
        double qa = 0.0, qb = 0.0;
        ep.q[1].value(u.sample(ja), {&qa, 1});
        ep.q[1].value(u.sample(jb), {&qb, 1});
        G[ti] = qb - qa;
    }

    // centered time derivative of S; average -(dS/dt + G) over interior times
    double acc = 0.0;
    std::int64_t count = 0;
    for (std::size_t ti = 1; ti + 1 < nt; ++ti) {
        const double dS = (S[ti + 1] - S[ti - 1]) / (times[ti + 1] - times[ti - 1]);
        acc += -(dS + G[ti]);
        ++count;
    }
    if (count == 0)
        throw std::invalid_argument("shock_dissipation_rate: too few snapshots");
    return acc / static_cast<double>(count);
}

/// Global entropy bookkeeping on a bounded domain: total entropy over time,
/// the sup of the outward normal entropy flux on shrinking boundary layers
/// (d(x, boundary) < delta/2), and the cutoff-weighted interior entropy
/// int eta chi(d/delta) dx reproducing the global theorem's test function.
struct EntropyBudget {
    std::vector<double> times;
    std::vector<double> total_entropy;
    std::vector<double> delta_list;
    std::vector<double> boundary_flux_sup;           // per delta
    std::vector<std::vector<double>> cutoff_entropy; // [delta][time]
};

inline EntropyBudget entropy_budget(const Trajectory& traj, const EntropyPair& ep,
                                    std::span<const double> deltas) {
    detail::require_trajectory_sane(traj, ep);
    const Grid& g = traj.grid;
    if (g.topology != Topology::bounded)
        throw std::invalid_argument("entropy_budget: bounded spatial domain required");
    const double delta0 = g.min_length() / 2.0;
    for (double d : deltas)
        if (!(d > 0.0 && d < delta0 / 2.0))
            throw std::invalid_argument("entropy_budget: delta out of range (0, delta0/2)");

    EntropyBudget budget;
    budget.times = traj.times;
    budget.delta_list.assign(deltas.begin(), deltas.end());
    budget.total_entropy.resize(traj.times.size());
    budget.boundary_flux_sup.assign(deltas.size(), 0.0);
    budget.cutoff_entropy.assign(deltas.size(),
                                 std::vector<double>(traj.times.size(), 0.0));

    for (std::size_t ti = 0; ti < traj.times.size(); ++ti) {
        const Field& u = traj.states[ti];
        double total = 0.0;
        for (int j = 0; j < g.n[0]; ++j) {
            const double w = g.quad_weight(0, j);
            const double x = g.coord(0, j);
            const double dist = std::min(x - g.lo[0], g.hi[0] - x);
            const double eta = ep.eta(u.sample(j));
            total += w * eta;
            double q1 = 0.0;
            ep.q[1].value(u.sample(j), {&q1, 1});
            for (std::size_t di = 0; di < deltas.size(); ++di) {
                const double delta = deltas[di];
                if (dist < 0.5 * delta) {
                    // 1D outward normal is -1 at lo, +1 at hi; |q n| = |q|
                    budget.boundary_flux_sup[di] =
                        std::max(budget.boundary_flux_sup[di], std::abs(q1));
                }
                budget.cutoff_entropy[di][ti] += w * eta * chi_profile(dist / delta);
            }
        }
        budget.total_entropy[ti] = total;
    }
    return budget;
}

} // namespace claw

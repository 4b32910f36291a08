#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "claw/builtins.hpp"
#include "claw/field_ops.hpp"
#include "claw/solver.hpp"
#include "claw/test_function.hpp"
#include "support/oracles.hpp"

using namespace claw;

namespace {

Field sine_ic(const Grid& g, double amp = 1.0) {
    return Field::from_function(g, 1, [&](std::span<const double> x, std::span<double> out) {
        out[0] = amp * std::sin(2.0 * std::numbers::pi * x[0]);
    });
}

Field riemann_ic(const Grid& g, double ul, double ur) {
    const double mid = 0.5 * (g.lo[0] + g.hi[0]);
    return Field::from_function(g, 1, [&](std::span<const double> x, std::span<double> out) {
        out[0] = x[0] < mid ? ul : ur;
    });
}

double mass(const ConservationSystem& sys, const Field& u) {
    const Field a0 = pointwise_map(sys.flux[0], u);
    double m = 0.0;
    for (int j = 0; j < u.grid().n[0]; ++j) m += u.grid().quad_weight(0, j) * a0.at(j, 0);
    return m;
}

double entropy(const EntropyPair& ep, const Field& u) {
    double e = 0.0;
    for (int j = 0; j < u.grid().n[0]; ++j) e += u.grid().quad_weight(0, j) * ep.eta(u.sample(j));
    return e;
}

} // namespace

TEST_CASE("pre-breaking burgers matches the characteristics oracle at first order") {
    auto [sys, ep] = builtin("burgers");
    auto u0 = [](double x) { return std::sin(2.0 * std::numbers::pi * x); };
    auto du0 = [](double x) { return 2.0 * std::numbers::pi * std::cos(2.0 * std::numbers::pi * x); };
    const double t_end = 0.1; // breaking time is 1/(2 pi) = 0.159

    double prev_err = 0.0;
    for (int level = 0; level < 3; ++level) {
        const int n = 512 << level;
        const Grid g = Grid::periodic_1d(n);
        const Trajectory traj = solve(sys, sine_ic(g), t_end, 0.4, FluxScheme::godunov,
                                      BoundaryCondition::periodic, 1 << 20);
        const Field& uf = traj.states.back();
        double l1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double exact =
                oracles::burgers_characteristics(u0, du0, traj.times.back(), g.coord(0, j));
            l1 += std::abs(uf.at(j) - exact) * g.spacing(0);
        }
        if (level > 0) CHECK(prev_err / l1 >= 1.8); // first-order convergence
        prev_err = l1;
    }
    CHECK(prev_err < 5e-3);
}

TEST_CASE("riemann shock stays at the midpoint with zero speed") {
    auto [sys, ep] = builtin("burgers");
    const int n = 513;
    const Grid g = Grid::bounded_1d(n, 0.0, 1.0);
    const double t_end = 0.2;
    const Trajectory traj = solve(sys, riemann_ic(g, 1.0, -1.0), t_end, 0.4,
                                  FluxScheme::godunov, BoundaryCondition::outflow, 1 << 20);
    const Field& uf = traj.states.back();
    // steepest interface location
    int arg = 0;
    double biggest = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
        const double jump = std::abs(uf.at(j + 1) - uf.at(j));
        if (jump > biggest) {
            biggest = jump;
            arg = j;
        }
    }
    const double xs = 0.5 * (g.coord(0, arg) + g.coord(0, arg + 1));
    CHECK(std::abs(xs - 0.5) <= g.spacing(0)); // speed 0 within dx/t
}

TEST_CASE("linear advection with periodic bc conserves mass to 1e-12") {
    auto [sys, ep] = builtin("linear-advection");
    const Grid g = Grid::periodic_1d(512);
    const Trajectory traj = solve(sys, sine_ic(g, 0.7), 0.5, 0.45, FluxScheme::rusanov,
                                  BoundaryCondition::periodic, 16);
    const double m0 = mass(sys, traj.states.front());
    for (const Field& s : traj.states) CHECK(std::abs(mass(sys, s) - m0) <= 1e-12);
}

TEST_CASE("conservation holds for every evolvable builtin under periodic bc") {
    // burgers
    {
        auto [sys, ep] = builtin("burgers");
        const Grid g = Grid::periodic_1d(256);
        const Trajectory traj = solve(sys, sine_ic(g), 0.3, 0.4, FluxScheme::godunov,
                                      BoundaryCondition::periodic, 8);
        const double m0 = mass(sys, traj.states.front());
        for (const Field& s : traj.states) REQUIRE(std::abs(mass(sys, s) - m0) <= 1e-12);
    }
    // shallow water: conserve both h and m
    {
        auto [sys, ep] = builtin("shallow-water-1d");
        const Grid g = Grid::periodic_1d(256);
        const Field u0 = Field::from_function(g, 2, [](std::span<const double> x, std::span<double> out) {
            out[0] = 1.0 + 0.1 * std::sin(2.0 * std::numbers::pi * x[0]);
            out[1] = 0.0;
        });
        const Trajectory traj =
            solve(sys, u0, 0.05, 0.4, FluxScheme::rusanov, BoundaryCondition::periodic, 8);
        for (int c = 0; c < 2; ++c) {
            double m0 = 0.0;
            for (int j = 0; j < g.n[0]; ++j) m0 += g.quad_weight(0, j) * traj.states.front().at(j, c);
            for (const Field& s : traj.states) {
                double m = 0.0;
                for (int j = 0; j < g.n[0]; ++j) m += g.quad_weight(0, j) * s.at(j, c);
                REQUIRE(std::abs(m - m0) <= 1e-12);
            }
        }
    }
    // isentropic euler
    {
        auto [sys, ep] = builtin("isentropic-euler-1d");
        const Grid g = Grid::periodic_1d(256);
        const Field u0 = Field::from_function(g, 2, [](std::span<const double> x, std::span<double> out) {
            out[0] = 1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * x[0]);
            out[1] = 0.1;
        });
        const Trajectory traj =
            solve(sys, u0, 0.05, 0.4, FluxScheme::rusanov, BoundaryCondition::periodic, 8);
        const double m0 = mass(sys, traj.states.front());
        REQUIRE(std::abs(mass(sys, traj.states.back()) - m0) <= 1e-12);
    }
}

TEST_CASE("godunov burgers entropy is nonincreasing step by step") {
    auto [sys, ep] = builtin("burgers");
    const Grid g = Grid::periodic_1d(512);
    const Trajectory traj = solve(sys, sine_ic(g), 0.4, 0.45, FluxScheme::godunov,
                                  BoundaryCondition::periodic, 1);
    double prev = entropy(ep, traj.states.front());
    for (std::size_t i = 1; i < traj.states.size(); ++i) {
        const double e = entropy(ep, traj.states[i]);
        REQUIRE(e <= prev + 1e-13);
        prev = e;
    }
    // a shock has formed by t = 0.4, so entropy strictly dissipates
    CHECK(entropy(ep, traj.states.back()) < entropy(ep, traj.states.front()) - 1e-3);
}

TEST_CASE("zero-state bc keeps compactly supported bumps conservative early") {
    auto [sys, ep] = builtin("burgers");
    const Grid g = Grid::bounded_1d(513, 0.0, 1.0);
    const Field u0 = Field::from_function(g, 1, [](std::span<const double> x, std::span<double> out) {
        out[0] = TestFunction::bump01((x[0] - 0.5) / 0.15);
    });
    const Trajectory traj =
        solve(sys, u0, 0.1, 0.4, FluxScheme::godunov, BoundaryCondition::zero_state, 8);
    // the wave cannot have reached the boundary: edge nodes stay exactly zero
    for (const Field& s : traj.states) {
        REQUIRE(s.at(0) == 0.0);
        REQUIRE(s.at(g.n[0] - 1) == 0.0);
    }
}

TEST_CASE("resample strides: identity, exact halving, constraints") {
    auto [sys, ep] = builtin("burgers");
    const Grid g = Grid::periodic_1d(256);
    const Trajectory traj = solve(sys, sine_ic(g), 0.1, 0.4, FluxScheme::godunov,
                                  BoundaryCondition::periodic, 1);

    const Trajectory same = resample(traj, 1, 1);
    CHECK(same.times == traj.times);
    CHECK(same.grid == traj.grid);

    const std::size_t nt = traj.times.size();
    REQUIRE(nt % 2 == 1); // snapshots include t=0, so odd counts halve exactly
    const Trajectory half = resample(traj, 2, 1);
    CHECK(half.times.size() == (nt + 1) / 2);
    CHECK(half.times.front() == traj.times.front());

    const Trajectory coarse = resample(traj, 1, 4);
    CHECK(coarse.grid.n[0] == 64);
    // surviving samples keep their exact coordinates
    CHECK(coarse.grid.coord(0, 3) == Catch::Approx(traj.grid.coord(0, 12)).margin(1e-15));
    CHECK(coarse.states.front().at(3) == traj.states.front().at(12));

    CHECK_THROWS_AS(resample(traj, static_cast<int>(nt) + 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(resample(traj, 1, 7), std::invalid_argument);  // does not divide 256
    CHECK_THROWS_AS(resample(traj, 1, 64), std::invalid_argument); // < 8 cells left
}

TEST_CASE("solver rejects invalid setups") {
    auto [bsys, bep] = builtin("burgers");
    auto [asys, aep] = builtin("linear-advection");
    auto [esys, eep] = builtin("incompressible-euler-static");
    const Grid g = Grid::periodic_1d(64);
    const Field u0 = sine_ic(g);

    CHECK_THROWS_AS(solve(bsys, u0, 0.1, 1.5, FluxScheme::godunov, BoundaryCondition::periodic),
                    std::invalid_argument); // cfl out of range
    CHECK_THROWS_AS(solve(asys, u0, 0.1, 0.4, FluxScheme::godunov, BoundaryCondition::periodic),
                    std::invalid_argument); // godunov needs burgers
    CHECK_THROWS_AS(solve(esys, Field(g, 4), 0.1, 0.4, FluxScheme::rusanov,
                          BoundaryCondition::periodic),
                    std::invalid_argument); // not evolvable
    CHECK_THROWS_AS(solve(bsys, u0, 0.1, 0.4, FluxScheme::godunov, BoundaryCondition::outflow),
                    std::invalid_argument); // outflow needs a bounded grid

    // initial state outside the domain box
    auto [ssys, sep] = builtin("isentropic-euler-1d");
    const Field bad = Field::from_function(g, 2, [](std::span<const double>, std::span<double> out) {
        out[0] = 0.1; // below the rho floor
        out[1] = 0.0;
    });
    CHECK_THROWS_AS(solve(ssys, bad, 0.1, 0.4, FluxScheme::rusanov, BoundaryCondition::periodic),
                    std::domain_error);
}

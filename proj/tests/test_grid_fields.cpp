#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "claw/grid.hpp"
#include "claw/holder.hpp"
#include "claw/rng.hpp"

using namespace claw;

TEST_CASE("grid spacing follows the topology") {
    const Grid p = Grid::periodic_1d(64, 0.0, 2.0);
    CHECK(p.spacing(0) == Catch::Approx(2.0 / 64).epsilon(1e-15));
    CHECK(p.coord(0, 0) == Catch::Approx(0.5 * p.spacing(0)));

    const Grid b = Grid::bounded_1d(65, 0.0, 2.0);
    CHECK(b.spacing(0) == Catch::Approx(2.0 / 64).epsilon(1e-15));
    CHECK(b.coord(0, 0) == 0.0);
    CHECK(b.coord(0, 64) == Catch::Approx(2.0));

    CHECK_THROWS_AS(Grid::periodic_1d(4), std::invalid_argument);
    CHECK_THROWS_AS(Grid::bounded_1d(16, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("norms: zero field, spike, closed-form sine integral") {
    const Grid g = Grid::periodic_1d(1 << 12);
    Field zero(g, 1);
    CHECK(sup_norm(zero) == 0.0);
    CHECK(l2_norm(zero) == 0.0);

    Field spike(g, 1);
    spike.at(17) = 3.0;
    CHECK(sup_norm(spike) == 3.0);

    const Field f = Field::from_function(g, 1, [&](std::span<const double> x, std::span<double> out) {
        out[0] = std::sin(2.0 * std::numbers::pi * x[0]);
    });
    // integral of sin^2 over [0,1] is 1/2
    CHECK(l2_norm(f) == Catch::Approx(std::sqrt(0.5)).margin(1e-6));
}

TEST_CASE("weierstrass basics: zero amplitude, near-Lipschitz convergence, determinism") {
    const Grid g = Grid::periodic_1d(1 << 10);
    const Field zero = make_weierstrass(g, 0.5, 2, 7, 0.0);
    CHECK(sup_norm(zero) == 0.0);

    // alpha just below 1: the series converges geometrically, seminorm finite
    const Field nearlip = make_weierstrass(g, 0.999, 2, 3, 1.0);
    const HolderEstimate est = estimate_holder(nearlip, 0.999);
    CHECK(est.seminorm > 0.0);
    CHECK(std::isfinite(est.seminorm));

    const Field a = make_weierstrass(g, 0.4, 2, 42, 1.0);
    const Field b = make_weierstrass(g, 0.4, 2, 42, 1.0);
    REQUIRE(a.data().size() == b.data().size());
    for (std::size_t i = 0; i < a.data().size(); ++i) REQUIRE(a.data()[i] == b.data()[i]);

    CHECK_THROWS_AS(make_weierstrass(g, 1.2, 2, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_weierstrass(g, 0.5, 1, 1, 1.0), std::invalid_argument);
    const Grid bounded = Grid::bounded_1d(64);
    CHECK_THROWS_AS(make_weierstrass(bounded, 0.5, 2, 1, 1.0), std::invalid_argument);
}

TEST_CASE("estimate_holder: constant and linear reference values") {
    const Grid g = Grid::bounded_1d(257, 0.0, 1.0);
    Field constant(g, 1);
    for (auto& v : constant.data()) v = 4.2;
    CHECK(estimate_holder(constant, 0.5).seminorm == 0.0);

    const Field linear = Field::from_function(g, 1, [](std::span<const double> x, std::span<double> out) {
        out[0] = x[0];
    });
    CHECK(estimate_holder(linear, 1.0).seminorm == Catch::Approx(1.0).margin(1e-12));
}

// Brute-force oracle: evaluate the truncated lacunary series directly at
// off-grid points over dyadic separations and take the sup ratio.
static double holder_oracle(double alpha, int base, std::uint64_t seed, int kmax) {
    double best = 0.0;
    for (int bp = 0; bp < 2048; ++bp) {
        const double x = claw::uniform01(claw::hash_combine(12345, static_cast<std::uint64_t>(bp)));
        for (int j = 1; j <= 16; ++j) {
            const double r = std::pow(0.5, j);
            const double a = claw::detail::weierstrass_series(x, alpha, base, kmax, seed, 0);
            const double b = claw::detail::weierstrass_series(x + r, alpha, base, kmax, seed, 0);
            best = std::max(best, std::abs(b - a) / std::pow(r, alpha));
        }
    }
    return best;
}

TEST_CASE("estimate_holder tracks the analytic seminorm of the partial sum") {
    const int n = 1 << 16;
    const Grid g = Grid::periodic_1d(n);
    const Field f = make_weierstrass(g, 0.4, 2, 7, 1.0);
    const double estimated = estimate_holder(f, 0.4).seminorm;
    const double oracle = holder_oracle(0.4, 2, 7, claw::detail::weierstrass_octaves(2, n / 2));
    CHECK(estimated >= 0.5 * oracle);
    CHECK(estimated <= 2.0 * oracle);
}

TEST_CASE("seminorm is stable under grid refinement") {
    const double alpha = 0.5;
    const Grid g1 = Grid::periodic_1d(1 << 12);
    const Grid g2 = Grid::periodic_1d(1 << 13);
    const double s1 = estimate_holder(make_weierstrass(g1, alpha, 2, 9, 1.0), alpha).seminorm;
    const double s2 = estimate_holder(make_weierstrass(g2, alpha, 2, 9, 1.0), alpha).seminorm;
    const double ratio = s2 / s1;
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.25);
}

TEST_CASE("seminorm scales exactly with the data") {
    const Grid g = Grid::periodic_1d(1 << 10);
    const Field f = make_weierstrass(g, 0.6, 2, 3, 1.0);
    Field doubled(g, 1), scaled(g, 1);
    for (std::int64_t p = 0; p < f.points(); ++p) {
        doubled.at(p) = -2.0 * f.at(p); // power of two: exact in binary fp
        scaled.at(p) = 2.5 * f.at(p);
    }
    const double s = estimate_holder(f, 0.6).seminorm;
    CHECK(estimate_holder(doubled, 0.6).seminorm == 2.0 * s);
    CHECK(estimate_holder(scaled, 0.6).seminorm == Catch::Approx(2.5 * s).epsilon(1e-14));
}

TEST_CASE("seminorm is nondecreasing in alpha on unit domains") {
    const Grid g = Grid::periodic_1d(1 << 10, 0.0, 1.0);
    const Field f = make_weierstrass(g, 0.5, 2, 11, 1.0);
    double prev = 0.0;
    for (double alpha : {0.2, 0.35, 0.5, 0.65, 0.8, 0.95}) {
        const double s = estimate_holder(f, alpha).seminorm;
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("2d weierstrass carries the exponent in every direction") {
    const Grid g = Grid::periodic_2d(256, 256);
    const Field f = make_weierstrass(g, 0.5, 2, 5, 1.0);
    REQUIRE(all_finite(f));
    const HolderEstimate est = estimate_holder(f, 0.5);
    CHECK(est.seminorm > 0.0);
    // pair count covers three directions of dyadic lags
    CHECK(est.pair_count > 3 * 256 * 256);
}

TEST_CASE("topology conversions preserve samples and spacing") {
    const Grid g = Grid::periodic_1d(64, 0.0, 1.0);
    const Field f = make_weierstrass(g, 0.5, 2, 1, 1.0);
    const Field b = as_bounded(f);
    CHECK(b.grid().topology == Topology::bounded);
    CHECK(b.grid().spacing(0) == Catch::Approx(g.spacing(0)).epsilon(1e-15));
    const Field p = extend_periodic(b);
    CHECK(p.grid().topology == Topology::periodic);
    CHECK(p.grid().spacing(0) == Catch::Approx(g.spacing(0)).epsilon(1e-15));
    for (std::int64_t i = 0; i < f.points(); ++i) REQUIRE(p.at(i) == f.at(i));
}

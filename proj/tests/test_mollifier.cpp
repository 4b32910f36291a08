#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "claw/grid.hpp"
#include "claw/holder.hpp"
#include "claw/mollifier.hpp"

using namespace claw;

TEST_CASE("kernel construction: taps, mass, symmetry, first moment") {
    const Grid g = Grid::periodic_1d(1 << 10);
    const double h = g.spacing(0);
    const MollifierKernel k = make_kernel(g, 4.0 * h);

    CHECK(k.taps >= 7);
    CHECK(k.mass == Catch::Approx(1.0).margin(1e-12));

    double moment = 0.0;
    for (int j = -k.radius[0]; j <= k.radius[0]; ++j) {
        REQUIRE(k.weight(j) == k.weight(-j)); // even stencil, exactly
        REQUIRE(k.weight(j) >= 0.0);
        moment += (j * h) * k.weight(j);
    }
    CHECK(std::abs(moment) < 1e-12);

    CHECK_THROWS_AS(make_kernel(g, 1.5 * h), std::invalid_argument);
    CHECK_THROWS_AS(make_kernel(g, 0.3), std::invalid_argument); // >= L/4
}

TEST_CASE("mollify preserves constants to 1e-12") {
    const Grid g = Grid::periodic_1d(1 << 12);
    Field c(g, 2);
    for (std::int64_t p = 0; p < c.points(); ++p) {
        c.at(p, 0) = 3.25;
        c.at(p, 1) = -1.5;
    }
    for (double eps : {4.0 * g.spacing(0), 200.0 * g.spacing(0)}) {
        const MollifierKernel k = make_kernel(g, eps);
        const Field m = mollify(c, k);
        for (std::int64_t p = 0; p < m.points(); ++p) {
            REQUIRE(m.at(p, 0) == Catch::Approx(3.25).margin(1e-12));
            REQUIRE(m.at(p, 1) == Catch::Approx(-1.5).margin(1e-12));
        }
    }
}

TEST_CASE("mollifying a cosine applies the kernel Fourier multiplier") {
    const Grid g = Grid::periodic_1d(1 << 12);
    const double L = g.length(0);
    const Field f = Field::from_function(g, 1, [&](std::span<const double> x, std::span<double> out) {
        out[0] = std::cos(2.0 * std::numbers::pi * x[0] / L);
    });
    const MollifierKernel k = make_kernel(g, 48.0 * g.spacing(0));

    // multiplier at wavenumber 1 from the stencil itself
    double ghat = 0.0;
    for (int j = -k.radius[0]; j <= k.radius[0]; ++j)
        ghat += k.weight(j) * std::cos(2.0 * std::numbers::pi * (j * g.spacing(0)) / L);

    const Field direct = mollify_direct(f, k);
    const Field viafft = mollify_fft(f, k);
    for (std::int64_t p = 0; p < f.points(); ++p) {
        REQUIRE(direct.at(p) == Catch::Approx(ghat * f.at(p)).margin(1e-10));
        REQUIRE(std::abs(direct.at(p) - viafft.at(p)) < 1e-10);
    }
}

TEST_CASE("direct and FFT convolution agree to 1e-10 on rough data") {
    const Grid g = Grid::periodic_1d(1 << 11);
    const Field v = make_weierstrass(g, 0.35, 2, 19, 1.0);
    for (double cells : {4.0, 23.0, 150.0}) {
        const MollifierKernel k = make_kernel(g, cells * g.spacing(0));
        const Field a = mollify_direct(v, k);
        const Field b = mollify_fft(v, k);
        double gap = 0.0;
        for (std::int64_t p = 0; p < v.points(); ++p)
            gap = std::max(gap, std::abs(a.at(p) - b.at(p)));
        CHECK(gap < 1e-10);
    }
}

TEST_CASE("2d direct and FFT convolution agree") {
    const Grid g = Grid::periodic_2d(96, 128);
    const Field v = make_weierstrass(g, 0.5, 2, 23, 1.0);
    const MollifierKernel k = make_kernel(g, 5.0 * g.max_spacing());
    const Field a = mollify_direct(v, k);
    const Field b = mollify_fft(v, k);
    double gap = 0.0;
    for (std::int64_t p = 0; p < v.points(); ++p)
        gap = std::max(gap, std::abs(a.at(p) - b.at(p)));
    CHECK(gap < 1e-10);
}

TEST_CASE("mollification is linear and does not increase the sup norm") {
    const Grid g = Grid::periodic_1d(1 << 11);
    const Field f = make_weierstrass(g, 0.5, 2, 3, 1.0);
    const Field w = make_weierstrass(g, 0.7, 3, 4, 0.5);
    const MollifierKernel k = make_kernel(g, 16.0 * g.spacing(0));

    Field combo(g, 1);
    for (std::int64_t p = 0; p < f.points(); ++p) combo.at(p) = 2.0 * f.at(p) - 3.0 * w.at(p);
    const Field mc = mollify(combo, k);
    const Field mf = mollify(f, k);
    const Field mw = mollify(w, k);
    const double scale = sup_norm(mc);
    for (std::int64_t p = 0; p < f.points(); ++p)
        REQUIRE(std::abs(mc.at(p) - (2.0 * mf.at(p) - 3.0 * mw.at(p))) <= 1e-12 * scale);

    CHECK(sup_norm(mf) <= sup_norm(f) * (1.0 + 1e-13));
}

TEST_CASE("mollification commutes with whole-cell translation") {
    const Grid g = Grid::periodic_1d(512);
    const Field f = make_weierstrass(g, 0.45, 2, 8, 1.0);
    const int shift = 37;
    Field shifted(g, 1);
    for (int i = 0; i < g.n[0]; ++i) shifted.at((i + shift) % g.n[0]) = f.at(i);

    const MollifierKernel k = make_kernel(g, 8.0 * g.spacing(0)); // direct path
    const Field a = mollify(shifted, k);
    const Field b = mollify(f, k);
    for (int i = 0; i < g.n[0]; ++i) REQUIRE(a.at((i + shift) % g.n[0]) == b.at(i));
}

TEST_CASE("holder bound on the mollification error, with estimated seminorm") {
    const double alpha = 0.5;
    const Grid g = Grid::periodic_1d(1 << 14);
    const Field f = make_weierstrass(g, alpha, 2, 5, 1.0);
    const double semi = estimate_holder(f, alpha).seminorm;

    for (double cells : {8.0, 64.0, 512.0}) {
        const double eps = cells * g.spacing(0);
        const Field m = mollify(f, make_kernel(g, eps));
        double gap = 0.0;
        for (std::int64_t p = 0; p < f.points(); ++p)
            gap = std::max(gap, std::abs(m.at(p) - f.at(p)));
        CHECK(gap <= 1.1 * semi * std::pow(eps, alpha));
    }

    // mollifying twice moves the field by at most seminorm (2 eps)^alpha
    const double eps = 64.0 * g.spacing(0);
    const MollifierKernel k = make_kernel(g, eps);
    const Field once = mollify(f, k);
    const Field twice = mollify(once, k);
    double gap = 0.0;
    for (std::int64_t p = 0; p < f.points(); ++p)
        gap = std::max(gap, std::abs(twice.at(p) - once.at(p)));
    CHECK(gap <= 1.1 * semi * std::pow(2.0 * eps, alpha));
}

TEST_CASE("localize: plateau, margin zeros, sup bound, support arithmetic") {
    const Grid g = Grid::bounded_1d(1025, 0.0, 1.0);
    Field one(g, 1);
    for (auto& v : one.data()) v = 1.0;

    const double inner = 0.06, outer = 0.12;
    const Field loc = localize(one, inner, outer);
    for (int i = 0; i < g.n[0]; ++i) {
        const double x = g.coord(0, i);
        const double dist = std::min(x, 1.0 - x);
        if (dist <= inner) REQUIRE(loc.at(i) == 0.0);
        if (dist >= outer) REQUIRE(loc.at(i) == 1.0);
        REQUIRE(loc.at(i) >= 0.0);
        REQUIRE(loc.at(i) <= 1.0);
    }

    const Field rough = make_weierstrass(Grid::periodic_1d(1024), 0.5, 2, 2, 1.0);
    Field on_bounded(g, 1);
    for (int i = 0; i < 1024; ++i) on_bounded.at(i) = rough.at(i);
    const Field lr = localize(on_bounded, inner, outer);
    CHECK(sup_norm(lr) <= sup_norm(on_bounded) * (1.0 + 1e-13));

    // localize with inner margin 3 eps, extend, mollify: the result vanishes
    // within (inner - eps) of the boundary
    const double eps = 0.02; // ~20 cells: direct-sum path, exact zeros
    const Field loc3 = localize(on_bounded, 3.0 * eps, 4.5 * eps);
    const Field per = extend_periodic(loc3);
    const Field m = mollify(per, make_kernel(per.grid(), eps));
    for (int i = 0; i < g.n[0] - 1; ++i) {
        const double x = g.coord(0, i);
        const double dist = std::min(x, 1.0 - x);
        if (dist <= 3.0 * eps - eps - g.spacing(0)) REQUIRE(m.at(i) == 0.0);
    }

    CHECK_THROWS_AS(localize(on_bounded, 0.2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(localize(rough, 0.1, 0.2), std::invalid_argument); // periodic input
}

TEST_CASE("chi cutoff: breakpoints, monotonicity, unit derivative mass") {
    CHECK(chi_profile(0.0) == 0.0);
    CHECK(chi_profile(0.2) == 0.0);
    CHECK(chi_profile(0.25) == 0.0);
    CHECK(chi_profile(0.5) == 1.0);
    CHECK(chi_profile(0.6) == 1.0);
    CHECK(chi_profile(7.0) == 1.0);
    CHECK_THROWS_AS(chi_profile(-0.1), std::invalid_argument);

    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double s = i * 1e-4;
        const double v = chi_profile(s);
        REQUIRE(v >= prev);
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0);
        prev = v;
    }

    // fundamental theorem: integral of chi' over [0,1] is 1
    const int n = 100000;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        acc += w * chi_derivative(s) / n;
    }
    CHECK(acc == Catch::Approx(1.0).margin(1e-8));

    // closed-form derivative agrees with finite differences
    for (double s : {0.26, 0.3, 0.375, 0.45, 0.49}) {
        const double fd = (chi_profile(s + 1e-6) - chi_profile(s - 1e-6)) / 2e-6;
        REQUIRE(chi_derivative(s) == Catch::Approx(fd).margin(1e-5));
    }
}

TEST_CASE("mollify rejects mismatched grids and bounded input") {
    const Grid a = Grid::periodic_1d(256);
    const Grid b = Grid::periodic_1d(512);
    const Field f = make_weierstrass(a, 0.5, 2, 1, 1.0);
    const MollifierKernel kb = make_kernel(b, 8.0 * b.spacing(0));
    CHECK_THROWS_AS(mollify(f, kb), std::invalid_argument);

    const Field bounded = as_bounded(f);
    const MollifierKernel ka = make_kernel(a, 8.0 * a.spacing(0));
    CHECK_THROWS_AS(mollify(bounded, ka), std::invalid_argument);
}

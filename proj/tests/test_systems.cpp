#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "claw/builtins.hpp"
#include "claw/system.hpp"

using namespace claw;

namespace {

/// Burgers pair with the wrong space flux q_1 = u^2/2 (instead of u^3/3).
EntropyPair broken_burgers_pair() {
    auto [sys, ep] = builtin("burgers");
    ep.q[1] = detail::scalar1([](double u) { return 0.5 * u * u; }, [](double u) { return u; },
                              [](double) { return 1.0; });
    return ep;
}

/// Deliberately asymmetric pair: B = (u2, 0) against A_1 = (u1^2, u2^2).
std::pair<ConservationSystem, EntropyPair> asymmetric_pair() {
    ConservationSystem sys;
    sys.name = "asymmetric";
    sys.k = sys.l = 2;
    sys.d = 1;
    sys.domain = {{1.0, 1.0}, {2.0, 2.0}};
    sys.flux.push_back(detail::identity_flux(2));
    SmoothMap a1;
    a1.in_dim = a1.out_dim = 2;
    a1.value = [](std::span<const double> u, std::span<double> out) {
        out[0] = u[0] * u[0];
        out[1] = u[1] * u[1];
    };
    a1.jacobian = [](std::span<const double> u, std::span<double> out) {
        out[0] = 2.0 * u[0];
        out[1] = 0.0;
        out[2] = 0.0;
        out[3] = 2.0 * u[1];
    };
    a1.hessian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        out[0] = 2.0;
        out[7] = 2.0;
    };
    sys.flux.push_back(std::move(a1));

    EntropyPair ep;
    ep.k = ep.l = 2;
    ep.d = 1;
    ep.B.in_dim = ep.B.out_dim = 2;
    ep.B.value = [](std::span<const double> u, std::span<double> out) {
        out[0] = u[1];
        out[1] = 0.0;
    };
    ep.B.jacobian = [](std::span<const double>, std::span<double> out) {
        out[0] = 0.0;
        out[1] = 1.0;
        out[2] = 0.0;
        out[3] = 0.0;
    };
    ep.B.hessian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
    };
    SmoothMap zero = scalar_map(
        2, [](std::span<const double>) { return 0.0; },
        [](std::span<const double>, std::span<double> out) { out[0] = out[1] = 0.0; },
        [](std::span<const double>, std::span<double> out) {
            std::fill(out.begin(), out.end(), 0.0);
        });
    ep.q.push_back(zero);
    ep.q.push_back(zero);
    return {std::move(sys), std::move(ep)};
}

} // namespace

TEST_CASE("burgers compatibility is an algebraic identity") {
    auto [sys, ep] = builtin("burgers");
    const auto rep = check_compatibility(sys, ep, 1000, 7);
    CHECK(rep.max_residual_compat <= 1e-10);
    CHECK(rep.sample_count == 1000);
    REQUIRE(rep.worst_point.size() == 1);

    const auto sym = check_symmetry(sys, ep, 1000, 7);
    CHECK(sym.max_residual_symmetry == 0.0); // scalar case: alpha = beta forced
}

TEST_CASE("broken burgers flux fails with the hand-computed residual") {
    auto [sys, ep] = builtin("burgers");
    const EntropyPair broken = broken_burgers_pair();

    // hand differentiation at u = 2: |B A_1' - q_1'| = |u^2 - u| = 2
    const double u = 2.0;
    std::vector<double> b(1), aj(1), qj(1);
    broken.B.value({&u, 1}, b);
    sys.flux[1].jacobian({&u, 1}, aj);
    broken.q[1].jacobian({&u, 1}, qj);
    CHECK(std::abs(b[0] * aj[0] - qj[0]) == Catch::Approx(2.0).margin(1e-14));

    const auto rep = check_compatibility(sys, broken, 1000, 7);
    CHECK(rep.max_residual_compat >= 0.1);
}

TEST_CASE("all builtin pairs pass both checks at 1e-8 over 1e3 samples") {
    for (const char* name : {"burgers", "linear-advection", "shallow-water-1d",
                             "isentropic-euler-1d", "incompressible-euler-static"}) {
        auto [sys, ep] = builtin(name);
        const auto compat = check_compatibility(sys, ep, 1000, 11);
        const auto sym = check_symmetry(sys, ep, 1000, 11);
        INFO(name);
        CHECK(compat.max_residual_compat <= 1e-8);
        CHECK(sym.max_residual_symmetry <= 1e-8);
        // closed-form Jacobians stay within O(step^2) of central differences
        CHECK(compat.max_residual_derivative <= 1e-4);
    }
    CHECK_THROWS_AS(builtin("navier-stokes"), std::invalid_argument);
}

TEST_CASE("asymmetric pair is caught by the symmetry check") {
    auto [sys, ep] = asymmetric_pair();
    const auto sym = check_symmetry(sys, ep, 500, 3);
    CHECK(sym.max_residual_symmetry > 0.1);

    // hand computation: S^{12} - S^{21} = 2 u1 on M = [1,2]^2
    const std::vector<double> u{1.5, 1.5};
    std::vector<double> bj(4), aj(4);
    ep.B.jacobian(u, bj);
    sys.flux[1].jacobian(u, aj);
    const double s12 = bj[0 * 2 + 1] * aj[0 * 2 + 0] + bj[1 * 2 + 1] * aj[1 * 2 + 0];
    const double s21 = bj[0 * 2 + 0] * aj[0 * 2 + 1] + bj[1 * 2 + 0] * aj[1 * 2 + 1];
    CHECK(std::abs(s12 - s21) == Catch::Approx(2.0 * u[0]).margin(1e-14));
}

TEST_CASE("finite-difference cross-check converges at second order") {
    auto [sys, ep] = builtin("shallow-water-1d");
    const std::vector<double> u{1.3, 0.7};
    const std::vector<double> s1{1e-3, 1e-3};
    const std::vector<double> s2{5e-4, 5e-4};
    const double g1 = detail::fd_jacobian_gap(sys.flux[1], u, s1);
    const double g2 = detail::fd_jacobian_gap(sys.flux[1], u, s2);
    CHECK(g1 / g2 >= 3.5);
}

TEST_CASE("affine flux shifts leave the compatibility residual unchanged") {
    auto [sys, ep] = builtin("burgers");
    const auto base = check_compatibility(sys, ep, 500, 5);

    // A_1 += 3u + 2, q_1 += 3 u^2/2 (the affine image through B(u) = u)
    ConservationSystem shifted = sys;
    shifted.flux[1] = detail::scalar1([](double u) { return 0.5 * u * u + 3.0 * u + 2.0; },
                                      [](double u) { return u + 3.0; },
                                      [](double) { return 1.0; });
    EntropyPair epshift = ep;
    epshift.q[1] = detail::scalar1([](double u) { return u * u * u / 3.0 + 1.5 * u * u; },
                                   [](double u) { return u * u + 3.0 * u; },
                                   [](double u) { return 2.0 * u + 3.0; });
    const auto rep = check_compatibility(shifted, epshift, 500, 5);
    CHECK(std::abs(rep.max_residual_compat - base.max_residual_compat) <= 1e-10);
}

TEST_CASE("dimension mismatches and bad domain boxes are rejected") {
    auto [bsys, bep] = builtin("burgers");
    auto [ssys, sep] = builtin("shallow-water-1d");
    CHECK_THROWS_AS(check_compatibility(bsys, sep, 10, 1), std::invalid_argument);

    ConservationSystem bad = bsys;
    bad.domain = {{2.0}, {-2.0}}; // inverted box: every sample escapes
    CHECK_THROWS_AS(check_compatibility(bad, bep, 10, 1), std::domain_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    auto [sys, ep] = builtin("isentropic-euler-1d");
    const auto a = check_compatibility(sys, ep, 200, 99);
    const auto b = check_compatibility(sys, ep, 200, 99);
    CHECK(a.max_residual_compat == b.max_residual_compat);
    CHECK(a.worst_point == b.worst_point);
}

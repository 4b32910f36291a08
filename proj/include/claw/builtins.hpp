#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "claw/system.hpp"

namespace claw {

namespace detail {

inline SmoothMap identity_flux(int k) {
    SmoothMap m;
    m.in_dim = m.out_dim = k;
    m.value = [k](std::span<const double> u, std::span<double> out) {
        for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)];
    };
    m.jacobian = [k](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j) * k + j] = 1.0;
    };
    m.hessian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
    };
    return m;
}

/// Scalar 1D map u -> f(u) with derivatives.
inline SmoothMap scalar1(double (*f)(double), double (*f1)(double), double (*f2)(double)) {
    SmoothMap m;
    m.in_dim = m.out_dim = 1;
    m.value = [f](std::span<const double> u, std::span<double> out) { out[0] = f(u[0]); };
    m.jacobian = [f1](std::span<const double> u, std::span<double> out) { out[0] = f1(u[0]); };
    m.hessian = [f2](std::span<const double> u, std::span<double> out) { out[0] = f2(u[0]); };
    return m;
}

inline std::pair<ConservationSystem, EntropyPair> make_burgers() {
    ConservationSystem sys;
    sys.name = "burgers";
    sys.k = sys.d = sys.l = 1;
    sys.domain = {{-8.0}, {8.0}};
    sys.flux.push_back(identity_flux(1));
    sys.flux.push_back(scalar1([](double u) { return 0.5 * u * u; },
                               [](double u) { return u; }, [](double) { return 1.0; }));
    sys.wave_speed = [](std::span<const double> u) { return std::abs(u[0]); };
    sys.reference_state = {0.0};
    sys.evolvable = true;

    EntropyPair ep;
    ep.k = ep.d = ep.l = 1;
    ep.B = scalar1([](double u) { return u; }, [](double) { return 1.0; },
                   [](double) { return 0.0; });
    ep.q.push_back(scalar1([](double u) { return 0.5 * u * u; }, [](double u) { return u; },
                           [](double) { return 1.0; }));
    ep.q.push_back(scalar1([](double u) { return u * u * u / 3.0; },
                           [](double u) { return u * u; }, [](double u) { return 2.0 * u; }));
    return {std::move(sys), std::move(ep)};
}

inline std::pair<ConservationSystem, EntropyPair> make_linear_advection(double c = 1.0) {
    ConservationSystem sys;
    sys.name = "linear-advection";
    sys.k = sys.d = sys.l = 1;
    sys.domain = {{-8.0}, {8.0}};
    sys.flux.push_back(identity_flux(1));
    SmoothMap a1;
    a1.in_dim = a1.out_dim = 1;
    a1.value = [c](std::span<const double> u, std::span<double> out) { out[0] = c * u[0]; };
    a1.jacobian = [c](std::span<const double>, std::span<double> out) { out[0] = c; };
    a1.hessian = [](std::span<const double>, std::span<double> out) { out[0] = 0.0; };
    sys.flux.push_back(std::move(a1));
    sys.wave_speed = [c](std::span<const double>) { return std::abs(c); };
    sys.reference_state = {0.0};
    sys.evolvable = true;

    EntropyPair ep;
    ep.k = ep.d = ep.l = 1;
    ep.B = scalar1([](double u) { return u; }, [](double) { return 1.0; },
                   [](double) { return 0.0; });
    ep.q.push_back(scalar1([](double u) { return 0.5 * u * u; }, [](double u) { return u; },
                           [](double) { return 1.0; }));
    SmoothMap q1;
    q1.in_dim = q1.out_dim = 1;
    q1.value = [c](std::span<const double> u, std::span<double> out) { out[0] = 0.5 * c * u[0] * u[0]; };
    q1.jacobian = [c](std::span<const double> u, std::span<double> out) { out[0] = c * u[0]; };
    q1.hessian = [c](std::span<const double>, std::span<double> out) { out[0] = c; };
    ep.q.push_back(std::move(q1));
    return {std::move(sys), std::move(ep)};
}

/// Shallow water, state (h, m) with m = h u, gravity g.
inline std::pair<ConservationSystem, EntropyPair> make_shallow_water(double g = 9.81) {
    ConservationSystem sys;
    sys.name = "shallow-water-1d";
    sys.k = 2;
    sys.d = 1;
    sys.l = 2;
    sys.domain = {{0.3, -2.0}, {3.0, 2.0}};
    sys.flux.push_back(identity_flux(2));

    SmoothMap a1;
    a1.in_dim = a1.out_dim = 2;
    a1.value = [g](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        out[0] = m;
        out[1] = m * m / h + 0.5 * g * h * h;
    };
    a1.jacobian = [g](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        out[0] = 0.0;
        out[1] = 1.0;
        out[2] = -m * m / (h * h) + g * h;
        out[3] = 2.0 * m / h;
    };
    a1.hessian = [g](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        std::fill(out.begin(), out.end(), 0.0);
        // component 1: m^2/h + g h^2/2
        out[4 + 0] = 2.0 * m * m / (h * h * h) + g; // d2/dh2
        out[4 + 1] = -2.0 * m / (h * h);            // d2/dh dm
        out[4 + 2] = -2.0 * m / (h * h);
        out[4 + 3] = 2.0 / h;
    };
    sys.flux.push_back(std::move(a1));
    sys.wave_speed = [g](std::span<const double> u) {
        return std::abs(u[1] / u[0]) + std::sqrt(g * u[0]);
    };
    sys.reference_state = {1.0, 0.0};
    sys.evolvable = true;

    EntropyPair ep;
    ep.k = 2;
    ep.d = 1;
    ep.l = 2;
    // B = grad eta, eta = m^2/(2h) + g h^2/2
    ep.B.in_dim = ep.B.out_dim = 2;
    ep.B.value = [g](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        out[0] = -0.5 * m * m / (h * h) + g * h;
        out[1] = m / h;
    };
    ep.B.jacobian = [g](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        out[0] = m * m / (h * h * h) + g;
        out[1] = -m / (h * h);
        out[2] = -m / (h * h);
        out[3] = 1.0 / h;
    };
    ep.B.hessian = [](std::span<const double> u, std::span<double> out) {
        const double h = u[0], m = u[1];
        std::fill(out.begin(), out.end(), 0.0);
        out[0] = -3.0 * m * m / (h * h * h * h); // b1 hh
        out[1] = 2.0 * m / (h * h * h);          // b1 hm
        out[2] = 2.0 * m / (h * h * h);
        out[3] = -1.0 / (h * h); // b1 mm
        out[4] = 2.0 * m / (h * h * h);
        out[5] = -1.0 / (h * h);
        out[6] = -1.0 / (h * h);
        out[7] = 0.0;
    };
    SmoothMap q0 = scalar_map(
        2,
        [g](std::span<const double> u) { return 0.5 * u[1] * u[1] / u[0] + 0.5 * g * u[0] * u[0]; },
        [g](std::span<const double> u, std::span<double> out) {
            const double h = u[0], m = u[1];
            out[0] = -0.5 * m * m / (h * h) + g * h;
            out[1] = m / h;
        },
        [g](std::span<const double> u, std::span<double> out) {
            const double h = u[0], m = u[1];
            out[0] = m * m / (h * h * h) + g;
            out[1] = -m / (h * h);
            out[2] = -m / (h * h);
            out[3] = 1.0 / h;
        });
    SmoothMap q1 = scalar_map(
        2,
        [g](std::span<const double> u) {
            const double h = u[0], m = u[1];
            return 0.5 * m * m * m / (h * h) + g * h * m;
        },
        [g](std::span<const double> u, std::span<double> out) {
            const double h = u[0], m = u[1];
            out[0] = -m * m * m / (h * h * h) + g * m;
            out[1] = 1.5 * m * m / (h * h) + g * h;
        },
        [g](std::span<const double> u, std::span<double> out) {
            const double h = u[0], m = u[1];
            out[0] = 3.0 * m * m * m / (h * h * h * h);
            out[1] = -3.0 * m * m / (h * h * h) + g;
            out[2] = -3.0 * m * m / (h * h * h) + g;
            out[3] = 3.0 * m / (h * h);
        });
    ep.q.push_back(std::move(q0));
    ep.q.push_back(std::move(q1));
    return {std::move(sys), std::move(ep)};
}

/// Isentropic Euler, state (rho, m), pressure p = kappa rho^gamma.
inline std::pair<ConservationSystem, EntropyPair> make_isentropic_euler(double kappa = 1.0,
                                                                        double gamma = 2.0) {
    ConservationSystem sys;
    sys.name = "isentropic-euler-1d";
    sys.k = 2;
    sys.d = 1;
    sys.l = 2;
    sys.domain = {{0.5, -1.0}, {2.0, 1.0}};
    sys.flux.push_back(identity_flux(2));

    auto p = [kappa, gamma](double r) { return kappa * std::pow(r, gamma); };
    auto dp = [kappa, gamma](double r) { return kappa * gamma * std::pow(r, gamma - 1.0); };
    auto d2p = [kappa, gamma](double r) {
        return kappa * gamma * (gamma - 1.0) * std::pow(r, gamma - 2.0);
    };
    // pressure potential P with eta = m^2/(2 rho) + P(rho)
    auto P = [kappa, gamma](double r) { return kappa * std::pow(r, gamma) / (gamma - 1.0); };
    auto dP = [kappa, gamma](double r) {
        return kappa * gamma * std::pow(r, gamma - 1.0) / (gamma - 1.0);
    };
    auto d2P = [kappa, gamma](double r) { return kappa * gamma * std::pow(r, gamma - 2.0); };

    SmoothMap a1;
    a1.in_dim = a1.out_dim = 2;
    a1.value = [p](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        out[0] = m;
        out[1] = m * m / r + p(r);
    };
    a1.jacobian = [dp](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        out[0] = 0.0;
        out[1] = 1.0;
        out[2] = -m * m / (r * r) + dp(r);
        out[3] = 2.0 * m / r;
    };
    a1.hessian = [d2p](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        std::fill(out.begin(), out.end(), 0.0);
        out[4 + 0] = 2.0 * m * m / (r * r * r) + d2p(r);
        out[4 + 1] = -2.0 * m / (r * r);
        out[4 + 2] = -2.0 * m / (r * r);
        out[4 + 3] = 2.0 / r;
    };
    sys.flux.push_back(std::move(a1));
    sys.wave_speed = [dp](std::span<const double> u) {
        return std::abs(u[1] / u[0]) + std::sqrt(dp(u[0]));
    };
    sys.reference_state = {1.0, 0.0};
    sys.evolvable = true;

    EntropyPair ep;
    ep.k = 2;
    ep.d = 1;
    ep.l = 2;
    ep.B.in_dim = ep.B.out_dim = 2;
    ep.B.value = [dP](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        out[0] = -0.5 * m * m / (r * r) + dP(r);
        out[1] = m / r;
    };
    ep.B.jacobian = [d2P](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        out[0] = m * m / (r * r * r) + d2P(r);
        out[1] = -m / (r * r);
        out[2] = -m / (r * r);
        out[3] = 1.0 / r;
    };
    ep.B.hessian = [kappa, gamma](std::span<const double> u, std::span<double> out) {
        const double r = u[0], m = u[1];
        std::fill(out.begin(), out.end(), 0.0);
        const double d3P = kappa * gamma * (gamma - 2.0) * std::pow(r, gamma - 3.0);
        out[0] = -3.0 * m * m / (r * r * r * r) + d3P;
        out[1] = 2.0 * m / (r * r * r);
        out[2] = 2.0 * m / (r * r * r);
        out[3] = -1.0 / (r * r);
        out[4] = 2.0 * m / (r * r * r);
        out[5] = -1.0 / (r * r);
        out[6] = -1.0 / (r * r);
        out[7] = 0.0;
    };
    SmoothMap q0 = scalar_map(
        2,
        [P](std::span<const double> u) { return 0.5 * u[1] * u[1] / u[0] + P(u[0]); },
        [dP](std::span<const double> u, std::span<double> out) {
            const double r = u[0], m = u[1];
            out[0] = -0.5 * m * m / (r * r) + dP(r);
            out[1] = m / r;
        },
        [d2P](std::span<const double> u, std::span<double> out) {
            const double r = u[0], m = u[1];
            out[0] = m * m / (r * r * r) + d2P(r);
            out[1] = -m / (r * r);
            out[2] = -m / (r * r);
            out[3] = 1.0 / r;
        });
    // q_1 = u (eta + p) = m^3/(2 rho^2) + m (P(rho) + p(rho)) / rho
    auto G = [P, p](double r) { return (P(r) + p(r)) / r; };
    auto dG = [P, p, dP, dp](double r) {
        return (dP(r) + dp(r)) / r - (P(r) + p(r)) / (r * r);
    };
    auto d2G = [P, p, dP, dp, d2P, d2p](double r) {
        return (d2P(r) + d2p(r)) / r - 2.0 * (dP(r) + dp(r)) / (r * r) +
               2.0 * (P(r) + p(r)) / (r * r * r);
    };
    SmoothMap q1 = scalar_map(
        2,
        [G](std::span<const double> u) {
            const double r = u[0], m = u[1];
            return 0.5 * m * m * m / (r * r) + m * G(r);
        },
        [G, dG](std::span<const double> u, std::span<double> out) {
            const double r = u[0], m = u[1];
            out[0] = -m * m * m / (r * r * r) + m * dG(r);
            out[1] = 1.5 * m * m / (r * r) + G(r);
        },
        [dG, d2G](std::span<const double> u, std::span<double> out) {
            const double r = u[0], m = u[1];
            out[0] = 3.0 * m * m * m / (r * r * r * r) + m * d2G(r);
            out[1] = -3.0 * m * m / (r * r * r) + dG(r);
            out[2] = -3.0 * m * m / (r * r * r) + dG(r);
            out[3] = 3.0 * m / (r * r);
        });
    ep.q.push_back(std::move(q0));
    ep.q.push_back(std::move(q1));
    return {std::move(sys), std::move(ep)};
}

/// Incompressible Euler written as a first-order system in u = (v, p):
/// A_0 = (v, 0), A_i = (v_i v + p e_i, v_i).  The degenerate A_0 makes it
/// non-evolvable here; it is exposed for the static entropy checks only.
/// The entropy row is B = (v, p - |v|^2/2) with q_0 = |v|^2/2 and
/// q_i = v_i (|v|^2/2 + p), the classical energy flux.
inline std::pair<ConservationSystem, EntropyPair> make_incompressible_euler_static() {
    constexpr int k = 4; // v1 v2 v3 p
    ConservationSystem sys;
    sys.name = "incompressible-euler-static";
    sys.k = k;
    sys.d = 3;
    sys.l = 4;
    sys.domain = {{-1.0, -1.0, -1.0, -1.0}, {1.0, 1.0, 1.0, 1.0}};

    SmoothMap a0;
    a0.in_dim = a0.out_dim = k;
    a0.value = [](std::span<const double> u, std::span<double> out) {
        out[0] = u[0];
        out[1] = u[1];
        out[2] = u[2];
        out[3] = 0.0;
    };
    a0.jacobian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        out[0 * k + 0] = out[1 * k + 1] = out[2 * k + 2] = 1.0;
    };
    a0.hessian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
    };
    sys.flux.push_back(std::move(a0));

    for (int i = 0; i < 3; ++i) {
        SmoothMap ai;
        ai.in_dim = ai.out_dim = k;
        ai.value = [i](std::span<const double> u, std::span<double> out) {
            for (int j = 0; j < 3; ++j)
                out[static_cast<std::size_t>(j)] =
                    u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)] +
                    (i == j ? u[3] : 0.0);
            out[3] = u[static_cast<std::size_t>(i)];
        };
        ai.jacobian = [i](std::span<const double> u, std::span<double> out) {
            std::fill(out.begin(), out.end(), 0.0);
            for (int j = 0; j < 3; ++j) {
                for (int m = 0; m < 3; ++m)
                    out[static_cast<std::size_t>(j) * k + m] =
                        (i == m ? u[static_cast<std::size_t>(j)] : 0.0) +
                        (j == m ? u[static_cast<std::size_t>(i)] : 0.0);
                if (i == j) out[static_cast<std::size_t>(j) * k + 3] = 1.0;
            }
            out[3 * k + i] = 1.0;
        };
        ai.hessian = [i](std::span<const double>, std::span<double> out) {
            std::fill(out.begin(), out.end(), 0.0);
            for (int j = 0; j < 3; ++j)
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n)
                        if ((i == m && j == n) || (j == m && i == n))
                            out[(static_cast<std::size_t>(j) * k + m) * k + n] += 1.0;
        };
        sys.flux.push_back(std::move(ai));
    }
    sys.evolvable = false;

    EntropyPair ep;
    ep.k = k;
    ep.d = 3;
    ep.l = 4;
    ep.B.in_dim = ep.B.out_dim = k;
    ep.B.value = [](std::span<const double> u, std::span<double> out) {
        out[0] = u[0];
        out[1] = u[1];
        out[2] = u[2];
        out[3] = u[3] - 0.5 * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    };
    ep.B.jacobian = [](std::span<const double> u, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        out[0 * k + 0] = out[1 * k + 1] = out[2 * k + 2] = 1.0;
        out[3 * k + 0] = -u[0];
        out[3 * k + 1] = -u[1];
        out[3 * k + 2] = -u[2];
        out[3 * k + 3] = 1.0;
    };
    ep.B.hessian = [](std::span<const double>, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        for (int m = 0; m < 3; ++m) out[(3 * static_cast<std::size_t>(k) + m) * k + m] = -1.0;
    };
    SmoothMap q0 = scalar_map(
        k,
        [](std::span<const double> u) {
            return 0.5 * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        },
        [](std::span<const double> u, std::span<double> out) {
            out[0] = u[0];
            out[1] = u[1];
            out[2] = u[2];
            out[3] = 0.0;
        },
        [](std::span<const double>, std::span<double> out) {
            std::fill(out.begin(), out.end(), 0.0);
            out[0 * k + 0] = out[1 * k + 1] = out[2 * k + 2] = 1.0;
        });
    ep.q.push_back(std::move(q0));
    for (int i = 0; i < 3; ++i) {
        SmoothMap qi = scalar_map(
            k,
            [i](std::span<const double> u) {
                const double e = 0.5 * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]) + u[3];
                return u[static_cast<std::size_t>(i)] * e;
            },
            [i](std::span<const double> u, std::span<double> out) {
                const double e = 0.5 * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]) + u[3];
                for (int m = 0; m < 3; ++m)
                    out[static_cast<std::size_t>(m)] =
                        (i == m ? e : 0.0) +
                        u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(m)];
                out[3] = u[static_cast<std::size_t>(i)];
            },
            [i](std::span<const double> u, std::span<double> out) {
                std::fill(out.begin(), out.end(), 0.0);
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n) {
                        double v = 0.0;
                        if (i == m) v += u[static_cast<std::size_t>(n)];
                        if (i == n) v += u[static_cast<std::size_t>(m)];
                        if (m == n) v += u[static_cast<std::size_t>(i)];
                        out[static_cast<std::size_t>(m) * k + n] = v;
                    }
                for (int m = 0; m < 3; ++m)
                    if (i == m) {
                        out[static_cast<std::size_t>(m) * k + 3] = 1.0;
                        out[3 * static_cast<std::size_t>(k) + m] = 1.0;
                    }
            });
        ep.q.push_back(std::move(qi));
    }
    return {std::move(sys), std::move(ep)};
}

} // namespace detail

/// Closed-form system/entropy catalog.  "linear-advection" is included for
/// solver ground-truth runs alongside the four standard instances.
inline std::pair<ConservationSystem, EntropyPair> builtin(std::string_view name) {
    if (name == "burgers") return detail::make_burgers();
    if (name == "linear-advection") return detail::make_linear_advection();
    if (name == "shallow-water-1d") return detail::make_shallow_water();
    if (name == "isentropic-euler-1d") return detail::make_isentropic_euler();
    if (name == "incompressible-euler-static") return detail::make_incompressible_euler_static();
    throw std::invalid_argument("builtin: unknown system '" + std::string(name) + "'");
}

} // namespace claw

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "claw/rng.hpp"

namespace claw {

/// Open box of admissible states.
struct StateDomain {
    std::vector<double> lo, hi;

    int dimension() const { return static_cast<int>(lo.size()); }

    bool contains(std::span<const double> u, double margin = 0.0) const {
        for (std::size_t j = 0; j < lo.size(); ++j)
            if (!(u[j] > lo[j] + margin && u[j] < hi[j] - margin)) return false;
        return true;
    }

    void require_inside(std::span<const double> u, const char* what) const {
        if (!contains(u))
            throw std::domain_error(std::string(what) + ": state escapes the domain box");
    }
};

/// Twice continuously differentiable map M in R^k -> R^m with closed-form
/// derivative evaluators.
///   value(u, out):    out[j]          = F_j(u)
///   jacobian(u, out): out[j*k + a]    = dF_j/du_a
///   hessian(u, out):  out[(j*k+a)*k+b] = d2F_j/du_a du_b
struct SmoothMap {
    int in_dim = 0;
    int out_dim = 0;
    std::function<void(std::span<const double>, std::span<double>)> value;
    std::function<void(std::span<const double>, std::span<double>)> jacobian;
    std::function<void(std::span<const double>, std::span<double>)> hessian;

    std::vector<double> value_of(std::span<const double> u) const {
        std::vector<double> out(static_cast<std::size_t>(out_dim));
        value(u, out);
        return out;
    }
    std::vector<double> jacobian_of(std::span<const double> u) const {
        std::vector<double> out(static_cast<std::size_t>(out_dim) * in_dim);
        jacobian(u, out);
        return out;
    }
    std::vector<double> hessian_of(std::span<const double> u) const {
        std::vector<double> out(static_cast<std::size_t>(out_dim) * in_dim * in_dim);
        hessian(u, out);
        return out;
    }
};

/// Scalar map helper (out_dim == 1) for entropy fluxes.
inline SmoothMap scalar_map(int k, std::function<double(std::span<const double>)> f,
                            std::function<void(std::span<const double>, std::span<double>)> grad,
                            std::function<void(std::span<const double>, std::span<double>)> hess) {
    SmoothMap m;
    m.in_dim = k;
    m.out_dim = 1;
    m.value = [f = std::move(f)](std::span<const double> u, std::span<double> out) {
        out[0] = f(u);
    };
    m.jacobian = std::move(grad);
    m.hessian = std::move(hess);
    return m;
}

/// System of conservation laws sum_i d_i A_i(u) = 0 with A_0 the time flux.
struct ConservationSystem {
    std::string name;
    int k = 0; // state dimension
    int d = 0; // space dimension
    int l = 0; // flux range dimension
    StateDomain domain;
    std::vector<SmoothMap> flux; // A_0 .. A_d
    /// Spectral radius of the space-flux Jacobian at u (solver wave speed);
    /// empty for non-evolvable systems.
    std::function<double(std::span<const double>)> wave_speed;
    /// Ghost state for the zero-state boundary condition.
    std::vector<double> reference_state;
    bool evolvable = false;
};

/// Generalized entropy: row map B with fluxes q_0..q_d, q_0 the entropy.
struct EntropyPair {
    int k = 0, d = 0, l = 0;
    SmoothMap B;              // k -> l
    std::vector<SmoothMap> q; // d+1 scalars

    double eta(std::span<const double> u) const {
        double out = 0.0;
        q[0].value(u, {&out, 1});
        return out;
    }
};

struct CompatibilityReport {
    double max_residual_compat = 0.0;
    double max_residual_symmetry = 0.0;
    double max_residual_derivative = 0.0; // finite-difference cross-check
    std::int64_t sample_count = 0;
    std::vector<double> worst_point;
};

namespace detail {

inline void require_matching(const ConservationSystem& sys, const EntropyPair& ep) {
    if (sys.k != ep.k || sys.d != ep.d || sys.l != ep.l)
        throw std::invalid_argument("entropy pair dimensions do not match the system");
    if (static_cast<int>(sys.flux.size()) != sys.d + 1 ||
        static_cast<int>(ep.q.size()) != ep.d + 1)
        throw std::invalid_argument("flux/entropy-flux list has wrong length");
}

/// Quasi-random sample inside the domain box, inset so finite-difference
/// stencils stay inside.
inline std::vector<double> sample_state(const StateDomain& dom, std::uint64_t index,
                                        std::uint64_t seed, double inset_frac) {
    const int k = dom.dimension();
    auto p = halton_point(index, k, seed);
    std::vector<double> u(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const auto s = static_cast<std::size_t>(j);
        const double width = dom.hi[s] - dom.lo[s];
        const double inset = inset_frac * width;
        u[s] = dom.lo[s] + inset + p[s] * (width - 2.0 * inset);
    }
    return u;
}

/// Max disagreement between the supplied Jacobian of `map` and central
/// finite differences of its value at u.  step per component.
inline double fd_jacobian_gap(const SmoothMap& map, std::span<const double> u,
                              std::span<const double> step) {
    const int k = map.in_dim, m = map.out_dim;
    std::vector<double> jac(static_cast<std::size_t>(m) * k);
    map.jacobian(u, jac);
    std::vector<double> up(u.begin(), u.end()), um(u.begin(), u.end());
    std::vector<double> fp(static_cast<std::size_t>(m)), fm(static_cast<std::size_t>(m));
    double gap = 0.0;
    for (int a = 0; a < k; ++a) {
        const auto sa = static_cast<std::size_t>(a);
        up[sa] = u[sa] + step[sa];
        um[sa] = u[sa] - step[sa];
        map.value(up, fp);
        map.value(um, fm);
        for (int j = 0; j < m; ++j) {
            const double fd = (fp[static_cast<std::size_t>(j)] - fm[static_cast<std::size_t>(j)]) /
                              (2.0 * step[sa]);
            gap = std::max(gap, std::abs(fd - jac[static_cast<std::size_t>(j) * k + a]));
        }
        up[sa] = u[sa];
        um[sa] = u[sa];
    }
    return gap;
}

} // namespace detail

/// Check the generalized-entropy condition B(u) . grad A_i(u) = grad q_i(u)
/// at quasi-random states.  Also cross-checks every supplied Jacobian
/// against central finite differences (step = 1e-5 of the box width).
inline CompatibilityReport check_compatibility(const ConservationSystem& sys,
                                               const EntropyPair& ep, std::int64_t samples,
                                               std::uint64_t seed) {
    detail::require_matching(sys, ep);
    const int k = sys.k, l = sys.l;
    constexpr double step_frac = 1e-5;

    std::vector<double> step(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        step[static_cast<std::size_t>(j)] =
            step_frac * (sys.domain.hi[static_cast<std::size_t>(j)] -
                         sys.domain.lo[static_cast<std::size_t>(j)]);

    CompatibilityReport rep;
    rep.sample_count = samples;
    std::vector<double> b(static_cast<std::size_t>(l));
    std::vector<double> jac(static_cast<std::size_t>(l) * k);
    std::vector<double> grad(static_cast<std::size_t>(k));
    for (std::int64_t s = 0; s < samples; ++s) {
        const auto u = detail::sample_state(sys.domain, static_cast<std::uint64_t>(s), seed,
                                            2.0 * step_frac);
        sys.domain.require_inside(u, "check_compatibility");
        ep.B.value(u, b);
        double worst_here = 0.0;
        for (int i = 0; i <= sys.d; ++i) {
            const auto& A = sys.flux[static_cast<std::size_t>(i)];
            const auto& q = ep.q[static_cast<std::size_t>(i)];
            A.jacobian(u, jac);
            q.jacobian(u, grad);
            for (int a = 0; a < k; ++a) {
                double dot = 0.0;
                for (int j = 0; j < l; ++j)
                    dot += b[static_cast<std::size_t>(j)] * jac[static_cast<std::size_t>(j) * k + a];
                worst_here = std::max(worst_here,
                                      std::abs(dot - grad[static_cast<std::size_t>(a)]));
            }
            rep.max_residual_derivative =
                std::max(rep.max_residual_derivative, detail::fd_jacobian_gap(A, u, step));
            rep.max_residual_derivative =
                std::max(rep.max_residual_derivative, detail::fd_jacobian_gap(q, u, step));
        }
        rep.max_residual_derivative =
            std::max(rep.max_residual_derivative, detail::fd_jacobian_gap(ep.B, u, step));
        if (worst_here >= rep.max_residual_compat) {
            rep.max_residual_compat = worst_here;
            rep.worst_point = u;
        }
    }
    return rep;
}

/// Check the equivalent symmetry form of the entropy condition:
/// sum_j (db_j/du_beta)(dA_i^j/du_alpha) must be symmetric in (alpha, beta).
inline CompatibilityReport check_symmetry(const ConservationSystem& sys, const EntropyPair& ep,
                                          std::int64_t samples, std::uint64_t seed) {
    detail::require_matching(sys, ep);
    const int k = sys.k, l = sys.l;

    CompatibilityReport rep;
    rep.sample_count = samples;
    std::vector<double> bj(static_cast<std::size_t>(l) * k);
    std::vector<double> aj(static_cast<std::size_t>(l) * k);
    std::vector<double> S(static_cast<std::size_t>(k) * k);
    for (std::int64_t s = 0; s < samples; ++s) {
        const auto u = detail::sample_state(sys.domain, static_cast<std::uint64_t>(s), seed, 1e-9);
        sys.domain.require_inside(u, "check_symmetry");
        ep.B.jacobian(u, bj);
        double worst_here = 0.0;
        for (int i = 0; i <= sys.d; ++i) {
            sys.flux[static_cast<std::size_t>(i)].jacobian(u, aj);
            for (int a = 0; a < k; ++a)
                for (int be = 0; be < k; ++be) {
                    double acc = 0.0;
                    for (int j = 0; j < l; ++j)
                        acc += bj[static_cast<std::size_t>(j) * k + be] *
                               aj[static_cast<std::size_t>(j) * k + a];
                    S[static_cast<std::size_t>(a) * k + be] = acc;
                }
            for (int a = 0; a < k; ++a)
                for (int be = a + 1; be < k; ++be)
                    worst_here = std::max(worst_here,
                                          std::abs(S[static_cast<std::size_t>(a) * k + be] -
                                                   S[static_cast<std::size_t>(be) * k + a]));
        }
        if (worst_here >= rep.max_residual_symmetry) {
            rep.max_residual_symmetry = worst_here;
            rep.worst_point = u;
        }
    }
    return rep;
}

} // namespace claw

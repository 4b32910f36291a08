#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "claw/grid.hpp"
#include "claw/rng.hpp"

namespace claw {

struct HolderEstimate {
    double alpha = 0.0;
    double seminorm = 0.0;
    std::int64_t pair_count = 0;
};

namespace detail {

/// Phase of octave k in series `series`, derived from the seed alone.
inline double weierstrass_phase(std::uint64_t seed, int series, int k) {
    return 2.0 * std::numbers::pi *
           uniform01(hash_combine(seed, static_cast<std::uint64_t>(series),
                                  static_cast<std::uint64_t>(k)));
}

/// Truncated Weierstrass series in one scalar variable s in [0,1):
/// sum_{k=0..kmax} base^{-alpha k} cos(2 pi base^k s + phi_k).
inline double weierstrass_series(double s, double alpha, int base, int kmax,
                                 std::uint64_t seed, int series) {
    double acc = 0.0;
    double amp = 1.0;
    double freq = 2.0 * std::numbers::pi;
    const double decay = std::pow(static_cast<double>(base), -alpha);
    for (int k = 0; k <= kmax; ++k) {
        acc += amp * std::cos(freq * s + weierstrass_phase(seed, series, k));
        amp *= decay;
        freq *= base;
    }
    return acc;
}

/// Largest k with base^k <= nyquist.
inline int weierstrass_octaves(int base, int nyquist) {
    int k = 0;
    std::int64_t f = base;
    while (f <= nyquist) {
        ++k;
        f *= base;
    }
    return k;
}

} // namespace detail

/// Synthetic field with exact Hölder exponent `alpha`: a lacunary cosine
/// series truncated at the grid Nyquist frequency, phases drawn
/// deterministically from the seed.  In 2D the field is the sum of an x
/// series, a y series and a diagonal series with independent phases.
inline Field make_weierstrass(const Grid& grid, double alpha, int base,
                              std::uint64_t seed, double amplitude) {
    if (grid.topology != Topology::periodic)
        throw std::invalid_argument("make_weierstrass: grid must be periodic");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("make_weierstrass: alpha must lie in (0,1)");
    if (base < 2)
        throw std::invalid_argument("make_weierstrass: base must be >= 2");

    const int nyq = grid.dim == 2 ? std::min(grid.n[0], grid.n[1]) / 2 : grid.n[0] / 2;
    const int kmax = detail::weierstrass_octaves(base, nyq);

    if (grid.dim == 1) {
        const double L = grid.length(0);
        return Field::from_function(grid, 1, [&](std::span<const double> x, std::span<double> out) {
            const double s = (x[0] - grid.lo[0]) / L;
            out[0] = amplitude * detail::weierstrass_series(s, alpha, base, kmax, seed, 0);
        });
    }
    const double L0 = grid.length(0), L1 = grid.length(1);
    return Field::from_function(grid, 1, [&](std::span<const double> x, std::span<double> out) {
        const double s0 = (x[0] - grid.lo[0]) / L0;
        const double s1 = (x[1] - grid.lo[1]) / L1;
        out[0] = amplitude * (detail::weierstrass_series(s0, alpha, base, kmax, seed, 0) +
                              detail::weierstrass_series(s1, alpha, base, kmax, seed, 1) +
                              detail::weierstrass_series(s0 + s1, alpha, base, kmax, seed, 2));
    });
}

/// Empirical Hölder seminorm: sup |f(x)-f(y)| / |x-y|^alpha over dyadic lags
/// {h, 2h, 4h, ...} up to half the domain, exhaustively in the base point.
/// In 2D lags run along each axis and the main diagonal.
inline HolderEstimate estimate_holder(const Field& f, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("estimate_holder: alpha must lie in (0,1]");
    const Grid& g = f.grid();
    const int c = f.components();
    const bool wrap = g.topology == Topology::periodic;

    HolderEstimate est;
    est.alpha = alpha;

    auto pair_gap = [&](std::int64_t p, std::int64_t q) {
        double d2 = 0.0;
        const auto a = f.sample(p), b = f.sample(q);
        for (int j = 0; j < c; ++j) {
            const double d = a[j] - b[j];
            d2 += d * d;
        }
        return d2;
    };

    // directions: (1,0), and in 2D (0,1) and (1,1)
    const int ndir = g.dim == 2 ? 3 : 1;
    for (int dir = 0; dir < ndir; ++dir) {
        const int d0 = dir == 1 ? 0 : 1;
        const int d1 = dir == 0 ? 0 : 1;
        const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
        const int max_lag0 = d0 ? n0 / 2 : 0;
        const int max_lag1 = d1 ? n1 / 2 : 0;
        for (int lag = 1;; lag *= 2) {
            if (d0 && lag > max_lag0) break;
            if (d1 && lag > max_lag1) break;
            const double dx0 = d0 ? lag * g.spacing(0) : 0.0;
            const double dx1 = d1 ? lag * g.spacing(1) : 0.0;
            const double dist = std::sqrt(dx0 * dx0 + dx1 * dx1);
            const double denom = std::pow(dist, alpha);
            double best2 = 0.0;
            for (int i0 = 0; i0 < n0; ++i0) {
                int j0 = i0 + d0 * lag;
                if (j0 >= n0) {
                    if (!wrap) continue;
                    j0 -= n0;
                }
                for (int i1 = 0; i1 < n1; ++i1) {
                    int j1 = i1 + d1 * lag;
                    if (j1 >= n1) {
                        if (!wrap) continue;
                        j1 -= n1;
                    }
                    best2 = std::max(best2, pair_gap(f.index(i0, i1), f.index(j0, j1)));
                    ++est.pair_count;
                }
            }
            est.seminorm = std::max(est.seminorm, std::sqrt(best2) / denom);
        }
    }
    return est;
}

} // namespace claw

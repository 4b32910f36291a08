#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "claw/grid.hpp"
#include "claw/system.hpp"

namespace claw {

/// Apply a smooth map to every sample: out(x) = F(f(x)).
inline Field pointwise_map(const SmoothMap& F, const Field& f) {
    if (f.components() != F.in_dim)
        throw std::invalid_argument("pointwise_map: component count does not match map input");
    Field out(f.grid(), F.out_dim);
    const std::int64_t n = f.points();
    for (std::int64_t p = 0; p < n; ++p) F.value(f.sample(p), out.sample(p));
    return out;
}

/// Componentwise min/max of the samples.
inline void component_range(const Field& f, std::vector<double>& mn, std::vector<double>& mx) {
    const int c = f.components();
    mn.assign(static_cast<std::size_t>(c), std::numeric_limits<double>::infinity());
    mx.assign(static_cast<std::size_t>(c), -std::numeric_limits<double>::infinity());
    for (std::int64_t p = 0; p < f.points(); ++p) {
        const auto s = f.sample(p);
        for (int j = 0; j < c; ++j) {
            mn[static_cast<std::size_t>(j)] = std::min(mn[static_cast<std::size_t>(j)], s[j]);
            mx[static_cast<std::size_t>(j)] = std::max(mx[static_cast<std::size_t>(j)], s[j]);
        }
    }
}

/// True when every sample lies inside the box (componentwise).
inline bool field_in_domain(const Field& f, const StateDomain& dom) {
    std::vector<double> mn, mx;
    component_range(f, mn, mx);
    for (std::size_t j = 0; j < mn.size(); ++j)
        if (!(mn[j] > dom.lo[j] && mx[j] < dom.hi[j])) return false;
    return true;
}

/// Second-order centered difference along `axis` on a periodic grid.
inline Field centered_diff(const Field& f, int axis) {
    const Grid& g = f.grid();
    if (g.topology != Topology::periodic)
        throw std::invalid_argument("centered_diff: periodic grids only");
    Field out(g, f.components());
    const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
    const double inv2h = 1.0 / (2.0 * g.spacing(axis));
    const int c = f.components();
    for (int i0 = 0; i0 < n0; ++i0) {
        for (int i1 = 0; i1 < n1; ++i1) {
            int p0 = i0, m0 = i0, p1 = i1, m1 = i1;
            if (axis == 0) {
                p0 = i0 + 1 == n0 ? 0 : i0 + 1;
                m0 = i0 == 0 ? n0 - 1 : i0 - 1;
            } else {
                p1 = i1 + 1 == n1 ? 0 : i1 + 1;
                m1 = i1 == 0 ? n1 - 1 : i1 - 1;
            }
            const std::int64_t o = f.index(i0, i1);
            const std::int64_t ip = f.index(p0, p1);
            const std::int64_t im = f.index(m0, m1);
            for (int j = 0; j < c; ++j) out.at(o, j) = (f.at(ip, j) - f.at(im, j)) * inv2h;
        }
    }
    return out;
}

/// Quadrature of a scalar field (trapezoid; plain Riemann sum when periodic).
inline double integrate(const Field& f, int comp = 0) {
    const Grid& g = f.grid();
    const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
    double acc = 0.0;
    for (int i0 = 0; i0 < n0; ++i0) {
        const double w0 = g.quad_weight(0, i0);
        double row = 0.0;
        for (int i1 = 0; i1 < n1; ++i1) {
            const double w1 = g.dim == 2 ? g.quad_weight(1, i1) : 1.0;
            row += w1 * f.at(f.index(i0, i1), comp);
        }
        acc += w0 * row;
    }
    return acc;
}

} // namespace claw

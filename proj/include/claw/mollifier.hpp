#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "claw/fft.hpp"
#include "claw/grid.hpp"
#include "claw/parallel.hpp"

namespace claw {

/// C-infinity bump primitive: exp(-1/(1-s^2)) on |s| < 1, zero outside.
inline double bump_profile(double s) {
    const double s2 = s * s;
    return s2 < 1.0 ? std::exp(-1.0 / (1.0 - s2)) : 0.0;
}

namespace detail {
inline double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
inline double psi_prime(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }
} // namespace detail

/// Smooth monotone step: 0 for t <= 0, 1 for t >= 1, C-infinity throughout.
inline double smoothstep01(double t) {
    const double a = detail::psi(t);
    const double b = detail::psi(1.0 - t);
    return a / (a + b);
}

inline double smoothstep01_derivative(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double a = detail::psi(t), b = detail::psi(1.0 - t);
    const double ap = detail::psi_prime(t), bp = detail::psi_prime(1.0 - t);
    const double s = a + b;
    // d/dt [a/(a+b)] with b' = -psi'(1-t)
    return (ap * b + a * bp) / (s * s);
}

enum class CutoffKind { interior_localizer, boundary_layer };

/// Smooth transition profile with values in [0,1]: exactly 0 below
/// breakpoints[0], exactly 1 above breakpoints[1].
struct CutoffProfile {
    CutoffKind kind = CutoffKind::boundary_layer;
    std::array<double, 2> breakpoints{0.25, 0.5};

    double value(double s) const {
        return smoothstep01((s - breakpoints[0]) / (breakpoints[1] - breakpoints[0]));
    }
    double derivative(double s) const {
        const double w = breakpoints[1] - breakpoints[0];
        return smoothstep01_derivative((s - breakpoints[0]) / w) / w;
    }
};

/// Boundary-layer cutoff: 0 on [0, 1/4], 1 on [1/2, inf).
inline double chi_profile(double s) {
    if (s < 0.0) throw std::invalid_argument("chi_profile: s must be >= 0");
    return CutoffProfile{CutoffKind::boundary_layer, {0.25, 0.5}}.value(s);
}

inline double chi_derivative(double s) {
    if (s < 0.0) throw std::invalid_argument("chi_derivative: s must be >= 0");
    return CutoffProfile{CutoffKind::boundary_layer, {0.25, 0.5}}.derivative(s);
}

/// Discretized Friedrichs mollifier: nonnegative, radially symmetric,
/// supported in |x| < epsilon, normalized so the stencil weights (which
/// absorb the cell volume) sum to one.
struct MollifierKernel {
    double epsilon = 0.0;
    Grid grid;
    std::array<int, 2> radius{0, 0};
    std::vector<double> weights; // (2 r0 + 1) x (2 r1 + 1), row-major
    double mass = 0.0;
    std::int64_t taps = 0;

    double weight(int j0, int j1 = 0) const {
        const int w1 = 2 * radius[1] + 1;
        return weights[static_cast<std::size_t>((j0 + radius[0]) * w1 + (j1 + radius[1]))];
    }
};

inline MollifierKernel make_kernel(const Grid& grid, double epsilon) {
    const double hmax = grid.max_spacing();
    if (epsilon < 2.0 * hmax)
        throw std::invalid_argument("make_kernel: epsilon below 2h, kernel unresolvable");
    if (!(epsilon < grid.min_length() / 4.0))
        throw std::invalid_argument("make_kernel: epsilon too large for the domain");

    MollifierKernel k;
    k.epsilon = epsilon;
    k.grid = grid;
    for (int a = 0; a < grid.dim; ++a) {
        const double h = grid.spacing(a);
        int r = static_cast<int>(std::floor(epsilon / h));
        if (r * h >= epsilon) --r;
        k.radius[static_cast<std::size_t>(a)] = r;
    }

    const int r0 = k.radius[0], r1 = grid.dim == 2 ? k.radius[1] : 0;
    k.weights.assign(static_cast<std::size_t>(2 * r0 + 1) * (2 * r1 + 1), 0.0);
    const double h0 = grid.spacing(0);
    const double h1 = grid.dim == 2 ? grid.spacing(1) : 0.0;
    double total = 0.0;
    for (int j0 = -r0; j0 <= r0; ++j0) {
        for (int j1 = -r1; j1 <= r1; ++j1) {
            const double x0 = j0 * h0, x1 = j1 * h1;
            const double r = std::sqrt(x0 * x0 + x1 * x1);
            const double w = bump_profile(r / epsilon);
            k.weights[static_cast<std::size_t>((j0 + r0) * (2 * r1 + 1) + (j1 + r1))] = w;
            total += w;
            if (w > 0.0) ++k.taps;
        }
    }
    for (double& w : k.weights) w /= total;
    k.mass = 0.0;
    for (double w : k.weights) k.mass += w;
    return k;
}

namespace detail {

inline void convolve_component_direct(const Field& f, const MollifierKernel& k, int comp,
                                      Field& out) {
    const Grid& g = f.grid();
    const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
    const int r0 = k.radius[0], r1 = g.dim == 2 ? k.radius[1] : 0;
    parallel::parallel_for(0, n0, [&](std::int64_t i0) {
        for (int i1 = 0; i1 < n1; ++i1) {
            double acc = 0.0;
            for (int j0 = -r0; j0 <= r0; ++j0) {
                int p0 = static_cast<int>(i0) - j0;
                p0 -= n0 * static_cast<int>(std::floor(static_cast<double>(p0) / n0));
                for (int j1 = -r1; j1 <= r1; ++j1) {
                    int p1 = i1 - j1;
                    p1 -= n1 * static_cast<int>(std::floor(static_cast<double>(p1) / n1));
                    acc += k.weight(j0, j1) * f.at(f.index(p0, p1), comp);
                }
            }
            out.at(out.index(static_cast<int>(i0), i1), comp) = acc;
        }
    });
}

inline void convolve_component_fft(const Field& f, const MollifierKernel& k,
                                   const std::vector<double>& kernel_image, int comp,
                                   Field& out, std::vector<double>& scratch_in,
                                   std::vector<double>& scratch_out) {
    const std::int64_t n = f.points();
    for (std::int64_t p = 0; p < n; ++p) scratch_in[static_cast<std::size_t>(p)] = f.at(p, comp);
    const Grid& g = f.grid();
    circular_convolve_image(g.n[0], g.dim == 2 ? g.n[1] : 1, scratch_in, kernel_image,
                            scratch_out);
    for (std::int64_t p = 0; p < n; ++p) out.at(p, comp) = scratch_out[static_cast<std::size_t>(p)];
}

/// Kernel stencil wrapped onto the full periodic grid.
inline std::vector<double> kernel_image(const Grid& g, const MollifierKernel& k) {
    const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
    const int r0 = k.radius[0], r1 = g.dim == 2 ? k.radius[1] : 0;
    std::vector<double> img(static_cast<std::size_t>(n0) * n1, 0.0);
    for (int j0 = -r0; j0 <= r0; ++j0) {
        const int p0 = (j0 + n0) % n0;
        for (int j1 = -r1; j1 <= r1; ++j1) {
            const int p1 = (j1 + n1) % n1;
            img[static_cast<std::size_t>(p0) * n1 + p1] += k.weight(j0, j1);
        }
    }
    return img;
}

} // namespace detail

/// Direct-sum periodic convolution with the kernel stencil.
inline Field mollify_direct(const Field& f, const MollifierKernel& k) {
    if (!(f.grid() == k.grid))
        throw std::invalid_argument("mollify: field and kernel grids differ");
    if (f.grid().topology != Topology::periodic)
        throw std::invalid_argument("mollify: field must be periodic (localize and extend first)");
    Field out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c) detail::convolve_component_direct(f, k, c, out);
    return out;
}

/// FFT-based periodic convolution; equal to the direct sum up to rounding.
inline Field mollify_fft(const Field& f, const MollifierKernel& k) {
    if (!(f.grid() == k.grid))
        throw std::invalid_argument("mollify: field and kernel grids differ");
    if (f.grid().topology != Topology::periodic)
        throw std::invalid_argument("mollify: field must be periodic (localize and extend first)");
    Field out(f.grid(), f.components());
    const auto img = detail::kernel_image(f.grid(), k);
    std::vector<double> sin(static_cast<std::size_t>(f.points()));
    std::vector<double> sout(static_cast<std::size_t>(f.points()));
    for (int c = 0; c < f.components(); ++c)
        detail::convolve_component_fft(f, k, img, c, out, sin, sout);
    return out;
}

/// Mollify f with the kernel, picking the direct sum for small stencils and
/// the FFT path otherwise.
inline Field mollify(const Field& f, const MollifierKernel& k) {
    return k.taps <= 64 ? mollify_direct(f, k) : mollify_fft(f, k);
}

/// Multiply a bounded field by a smooth interior localizer: 1 at distance
/// >= outer_margin from the boundary, 0 at distance <= inner_margin.  The
/// result can be extended by zero to a periodic grid.
inline Field localize(const Field& f, double inner_margin, double outer_margin) {
    const Grid& g = f.grid();
    if (g.topology != Topology::bounded)
        throw std::invalid_argument("localize: field must live on a bounded grid");
    if (!(0.0 < inner_margin && inner_margin < outer_margin &&
          outer_margin < g.min_length() / 2.0))
        throw std::invalid_argument("localize: margins out of order");

    const CutoffProfile profile{CutoffKind::interior_localizer, {inner_margin, outer_margin}};
    Field out(g, f.components());
    const int n0 = g.n[0], n1 = g.dim == 2 ? g.n[1] : 1;
    for (int i0 = 0; i0 < n0; ++i0) {
        const double x0 = g.coord(0, i0);
        const double d0 = std::min(x0 - g.lo[0], g.hi[0] - x0);
        const double w0 = profile.value(d0);
        for (int i1 = 0; i1 < n1; ++i1) {
            double w = w0;
            if (g.dim == 2) {
                const double x1 = g.coord(1, i1);
                const double d1 = std::min(x1 - g.lo[1], g.hi[1] - x1);
                w *= profile.value(d1);
            }
            const std::int64_t p = f.index(i0, i1);
            for (int c = 0; c < f.components(); ++c) out.at(p, c) = w * f.at(p, c);
        }
    }
    return out;
}

} // namespace claw

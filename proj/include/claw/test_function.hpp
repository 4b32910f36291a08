#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include "claw/grid.hpp"

namespace claw {

/// Compactly supported C-infinity test function: a tensor product of bump
/// profiles, peak value 1 at the center, support box
/// [center - scale, center + scale] per axis.  Axis 0 is time for
/// space-time pairings.
struct TestFunction {
    int dim = 1;
    std::array<double, 2> center{0.0, 0.0};
    std::array<double, 2> scale{1.0, 1.0};

    /// exp(1 - 1/(1-s^2)) on |s| < 1, zero outside; equals 1 at s = 0.
    static double bump01(double s) {
        const double s2 = s * s;
        return s2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s2)) : 0.0;
    }
    static double bump01_derivative(double s) {
        const double s2 = s * s;
        if (s2 >= 1.0) return 0.0;
        const double d = 1.0 - s2;
        return bump01(s) * (-2.0 * s / (d * d));
    }

    double value(std::span<const double> x) const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) {
            const auto s = static_cast<std::size_t>(a);
            v *= bump01((x[s] - center[s]) / scale[s]);
            if (v == 0.0) return 0.0;
        }
        return v;
    }

    /// Exact partial derivative along `axis`.
    double derivative(int axis, std::span<const double> x) const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) {
            const auto s = static_cast<std::size_t>(a);
            const double t = (x[s] - center[s]) / scale[s];
            v *= a == axis ? bump01_derivative(t) / scale[s] : bump01(t);
        }
        return v;
    }

    std::array<double, 2> support_lo() const {
        return {center[0] - scale[0], center[1] - scale[1]};
    }
    std::array<double, 2> support_hi() const {
        return {center[0] + scale[0], center[1] + scale[1]};
    }

    /// Support strictly inside the grid domain, with an extra margin.
    bool supported_inside(const Grid& g, double margin = 0.0) const {
        for (int a = 0; a < dim; ++a) {
            const auto s = static_cast<std::size_t>(a);
            if (!(center[s] - scale[s] >= g.lo[s] + margin &&
                  center[s] + scale[s] <= g.hi[s] - margin))
                return false;
        }
        return true;
    }
};

} // namespace claw

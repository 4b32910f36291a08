#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace claw {

enum class Topology { periodic, bounded };

/// Uniform grid on an interval (dim 1) or a box (dim 2).
///
/// Periodic grids sample cell centers: x_j = lo + (j + 1/2) h with h = L/n.
/// Bounded grids sample nodes including both endpoints: x_j = lo + j h with
/// h = L/(n-1).  Axis 0 is time when the grid carries a space-time field.
struct Grid {
    int dim = 1;
    std::array<int, 2> n{1, 1};
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 1.0};
    Topology topology = Topology::periodic;

    static Grid periodic_1d(int n, double lo = 0.0, double hi = 1.0) {
        Grid g{1, {n, 1}, {lo, 0.0}, {hi, 1.0}, Topology::periodic};
        g.validate();
        return g;
    }
    static Grid bounded_1d(int n, double lo = 0.0, double hi = 1.0) {
        Grid g{1, {n, 1}, {lo, 0.0}, {hi, 1.0}, Topology::bounded};
        g.validate();
        return g;
    }
    static Grid periodic_2d(int n0, int n1, std::array<double, 2> lo = {0.0, 0.0},
                            std::array<double, 2> hi = {1.0, 1.0}) {
        Grid g{2, {n0, n1}, lo, hi, Topology::periodic};
        g.validate();
        return g;
    }
    static Grid bounded_2d(int n0, int n1, std::array<double, 2> lo = {0.0, 0.0},
                           std::array<double, 2> hi = {1.0, 1.0}) {
        Grid g{2, {n0, n1}, lo, hi, Topology::bounded};
        g.validate();
        return g;
    }

    void validate() const {
        if (dim < 1 || dim > 2)
            throw std::invalid_argument("Grid: dim must be 1 or 2");
        for (int a = 0; a < dim; ++a) {
            if (n[static_cast<std::size_t>(a)] < 8)
                throw std::invalid_argument("Grid: need at least 8 points per axis");
            if (!(hi[static_cast<std::size_t>(a)] > lo[static_cast<std::size_t>(a)]))
                throw std::invalid_argument("Grid: domain box is empty");
        }
    }

    double length(int axis) const {
        return hi[static_cast<std::size_t>(axis)] - lo[static_cast<std::size_t>(axis)];
    }

    double spacing(int axis) const {
        const double L = length(axis);
        const int m = n[static_cast<std::size_t>(axis)];
        return topology == Topology::periodic ? L / m : L / (m - 1);
    }

    /// Sample coordinate along `axis` at index i.
    double coord(int axis, int i) const {
        const double h = spacing(axis);
        const double base = lo[static_cast<std::size_t>(axis)];
        return topology == Topology::periodic ? base + (i + 0.5) * h : base + i * h;
    }

    std::int64_t points() const {
        std::int64_t p = n[0];
        if (dim == 2) p *= n[1];
        return p;
    }

    double cell_volume() const {
        double v = spacing(0);
        if (dim == 2) v *= spacing(1);
        return v;
    }

    double min_length() const {
        double L = length(0);
        for (int a = 1; a < dim; ++a) L = std::min(L, length(a));
        return L;
    }

    double max_spacing() const {
        double h = spacing(0);
        for (int a = 1; a < dim; ++a) h = std::max(h, spacing(a));
        return h;
    }

    /// Quadrature weight of sample i along `axis`: h everywhere on periodic
    /// grids, trapezoid end-point halving on bounded ones.
    double quad_weight(int axis, int i) const {
        const double h = spacing(axis);
        if (topology == Topology::bounded &&
            (i == 0 || i == n[static_cast<std::size_t>(axis)] - 1))
            return 0.5 * h;
        return h;
    }

    bool operator==(const Grid& o) const {
        if (dim != o.dim || topology != o.topology) return false;
        for (int a = 0; a < dim; ++a) {
            const auto s = static_cast<std::size_t>(a);
            if (n[s] != o.n[s] || lo[s] != o.lo[s] || hi[s] != o.hi[s]) return false;
        }
        return true;
    }
};

/// Sampled real-valued (possibly vector-valued) function on a Grid.
/// Storage is row-major over grid points with components interleaved:
/// data[point * components + c].  Fields are filled on construction and
/// treated as immutable afterwards; all operations below are pure.
class Field {
public:
    Field() = default;

    Field(Grid grid, int components = 1)
        : grid_(grid),
          components_(components),
          data_(static_cast<std::size_t>(grid.points()) * static_cast<std::size_t>(components), 0.0) {
        if (components < 1) throw std::invalid_argument("Field: components must be >= 1");
    }

    /// Fill from a function of the sample coordinates.  `fn(coords, out)`
    /// writes all components of one sample.
    static Field from_function(
        const Grid& grid, int components,
        const std::function<void(std::span<const double>, std::span<double>)>& fn) {
        Field f(grid, components);
        std::array<double, 2> xy{};
        std::span<const double> coords(xy.data(), static_cast<std::size_t>(grid.dim));
        const int n1 = grid.dim == 2 ? grid.n[1] : 1;
        for (int i0 = 0; i0 < grid.n[0]; ++i0) {
            xy[0] = grid.coord(0, i0);
            for (int i1 = 0; i1 < n1; ++i1) {
                if (grid.dim == 2) xy[1] = grid.coord(1, i1);
                const std::int64_t p = static_cast<std::int64_t>(i0) * n1 + i1;
                fn(coords, f.sample(p));
            }
        }
        return f;
    }

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }
    std::int64_t points() const { return grid_.points(); }

    double& at(std::int64_t point, int comp = 0) {
        return data_[static_cast<std::size_t>(point) * components_ + static_cast<std::size_t>(comp)];
    }
    double at(std::int64_t point, int comp = 0) const {
        return data_[static_cast<std::size_t>(point) * components_ + static_cast<std::size_t>(comp)];
    }

    /// All components of one sample.
    std::span<double> sample(std::int64_t point) {
        return {data_.data() + static_cast<std::size_t>(point) * components_,
                static_cast<std::size_t>(components_)};
    }
    std::span<const double> sample(std::int64_t point) const {
        return {data_.data() + static_cast<std::size_t>(point) * components_,
                static_cast<std::size_t>(components_)};
    }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    std::int64_t index(int i0, int i1 = 0) const {
        return static_cast<std::int64_t>(i0) * (grid_.dim == 2 ? grid_.n[1] : 1) + i1;
    }

private:
    Grid grid_{};
    int components_ = 1;
    std::vector<double> data_;
};

inline double sup_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.data()) m = std::max(m, std::abs(v));
    return m;
}

/// Quadrature-weighted L2 norm: sqrt(sum |f|^2 w) with trapezoid weights.
inline double l2_norm(const Field& f) {
    const Grid& g = f.grid();
    const int n1 = g.dim == 2 ? g.n[1] : 1;
    double acc = 0.0;
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
        const double w0 = g.quad_weight(0, i0);
        for (int i1 = 0; i1 < n1; ++i1) {
            const double w = g.dim == 2 ? w0 * g.quad_weight(1, i1) : w0;
            const auto s = f.sample(f.index(i0, i1));
            double q = 0.0;
            for (double v : s) q += v * v;
            acc += w * q;
        }
    }
    return std::sqrt(acc);
}

inline bool all_finite(const Field& f) {
    for (double v : f.data())
        if (!std::isfinite(v)) return false;
    return true;
}

inline void require_finite(const Field& f, const char* what) {
    if (!all_finite(f))
        throw std::invalid_argument(std::string(what) + ": field contains NaN or Inf");
}

/// Reinterpret periodic cell-center samples as nodes of a bounded grid with
/// the same spacing.  The bounded domain spans (n-1) h.
inline Field as_bounded(const Field& f) {
    const Grid& g = f.grid();
    if (g.topology != Topology::periodic)
        throw std::invalid_argument("as_bounded: field is already bounded");
    Grid b = g;
    b.topology = Topology::bounded;
    for (int a = 0; a < g.dim; ++a) {
        const auto s = static_cast<std::size_t>(a);
        const double h = g.spacing(a);
        b.lo[s] = 0.0;
        b.hi[s] = (g.n[s] - 1) * h;
    }
    Field out(b, f.components());
    std::copy(f.data().begin(), f.data().end(), out.data().begin());
    return out;
}

/// Wrap a bounded field onto a periodic grid with the same spacing and point
/// count.  Intended for fields that vanish near the boundary (after
/// localize), so the seam introduced by wrapping is identically zero.
inline Field extend_periodic(const Field& f) {
    const Grid& g = f.grid();
    if (g.topology != Topology::bounded)
        throw std::invalid_argument("extend_periodic: field is already periodic");
    Grid p = g;
    p.topology = Topology::periodic;
    for (int a = 0; a < g.dim; ++a) {
        const auto s = static_cast<std::size_t>(a);
        const double h = g.spacing(a);
        p.lo[s] = 0.0;
        p.hi[s] = g.n[s] * h;
    }
    Field out(p, f.components());
    std::copy(f.data().begin(), f.data().end(), out.data().begin());
    return out;
}

} // namespace claw

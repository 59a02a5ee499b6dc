#include "cfrechet/freespace.hpp"

#include <cstdint>
#include <stdexcept>

namespace cfrechet {

namespace {

// Free interval of horizontal edge (i, j) for i in 1..m, in absolute u coords.
Interval horiz_free(const ClosedCurve& x, const ClosedCurve& y, double eps,
                    std::size_t i, std::size_t j) {
    const std::size_t m = x.size(), n = y.size();
    return edge_free_interval(x.vertex((i - 1) % m), x.vertex(i % m), y.vertex(j % n), eps)
        .shifted(static_cast<double>(i - 1));
}

// Free interval of vertical edge (i, j) for i in 0..m, in absolute v coords.
Interval vert_free(const ClosedCurve& x, const ClosedCurve& y, double eps,
                   std::size_t i, std::size_t j) {
    const std::size_t m = x.size(), n = y.size();
    return edge_free_interval(y.vertex(j - 1), y.vertex(j % n), x.vertex(i % m), eps)
        .shifted(static_cast<double>(j - 1));
}

void check_inputs(const ClosedCurve& x, const ClosedCurve& y, double eps) {
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("build_boundary_grid: dimension mismatch");
    if (!(eps >= 0.0)) throw std::domain_error("build_boundary_grid: eps must be >= 0");
}

void mirror_columns(BoundaryGrid& g) {
    const std::size_t m = g.m(), n = g.n();
    const double shift = static_cast<double>(m);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            g.set_horiz(i + m, j, g.horiz(i, j).shifted(shift));
    for (std::size_t i = 1; i <= m; ++i)  // vertical coords are unchanged by the shift
        for (std::size_t j = 1; j <= n; ++j)
            g.set_vert(i + m, j, g.vert(i, j));
}

}  // namespace

BoundaryGrid build_boundary_grid_serial(const ClosedCurve& x, const ClosedCurve& y, double eps) {
    check_inputs(x, y, eps);
    const std::size_t m = x.size(), n = y.size();
    BoundaryGrid g(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            g.set_horiz(i, j, horiz_free(x, y, eps, i, j));
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            g.set_vert(i, j, vert_free(x, y, eps, i, j));
    mirror_columns(g);
    return g;
}

BoundaryGrid build_boundary_grid(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                 bool parallel) {
    if (!parallel) return build_boundary_grid_serial(x, y, eps);
    check_inputs(x, y, eps);
    const std::int64_t m = static_cast<std::int64_t>(x.size());
    const std::int64_t n = static_cast<std::int64_t>(y.size());
    BoundaryGrid g(x.size(), y.size());

#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            g.set_horiz(i, j, horiz_free(x, y, eps, i, j));

#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 1; j <= n; ++j)
            g.set_vert(i, j, vert_free(x, y, eps, i, j));

    mirror_columns(g);
    return g;
}

EdgeIntervalGrid propagate_reach_down(const BoundaryGrid& g) {
    const std::size_t w = g.width(), n = g.n();
    EdgeIntervalGrid r(g.m(), n);

    // Every free point of the bottom side reaches itself.
    for (std::size_t i = 1; i <= w; ++i) r.set_horiz(i, 0, g.horiz(i, 0));

    // Left side: the contiguous free run climbing from (0, 0).
    bool alive = true;
    for (std::size_t j = 1; j <= n; ++j) {
        const Interval e = g.vert(0, j);
        if (alive && !e.is_empty() && e.lo() == static_cast<double>(j - 1)) {
            r.set_vert(0, j, e);
            alive = e.hi() == static_cast<double>(j);
        } else {
            alive = false;
        }
    }

    // Interior, column by column so the sweep follows the storage order.
    // With a left entry every free point of the cell's top/right border is
    // reachable (the free part of a cell is convex); with only a bottom entry
    // at [a, b], points left of a are not.
    for (std::size_t i = 1; i <= w; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const Interval below = r.horiz(i, j - 1);
            const Interval left = r.vert(i - 1, j);
            if (!left.is_empty())
                r.set_horiz(i, j, g.horiz(i, j));
            else if (!below.is_empty())
                r.set_horiz(i, j, g.horiz(i, j).clip_low(below.lo()));
            if (!below.is_empty())
                r.set_vert(i, j, g.vert(i, j));
            else if (!left.is_empty())
                r.set_vert(i, j, g.vert(i, j).clip_low(left.lo()));
        }
    }
    return r;
}

EdgeIntervalGrid propagate_reach_up(const BoundaryGrid& g) {
    const std::size_t w = g.width(), n = g.n();
    EdgeIntervalGrid r(g.m(), n);

    for (std::size_t i = 1; i <= w; ++i) r.set_horiz(i, n, g.horiz(i, n));

    // Right side: the contiguous free run descending from (2m, n).
    bool alive = true;
    for (std::size_t j = n; j >= 1; --j) {
        const Interval e = g.vert(w, j);
        if (alive && !e.is_empty() && e.hi() == static_cast<double>(j)) {
            r.set_vert(w, j, e);
            alive = e.lo() == static_cast<double>(j - 1);
        } else {
            alive = false;
        }
    }

    // 180-degree mirror of the downward sweep.
    for (std::size_t i = w; i >= 1; --i) {
        for (std::size_t j = n; j >= 1; --j) {
            const Interval above = r.horiz(i, j);
            const Interval right = r.vert(i, j);
            if (!right.is_empty())
                r.set_horiz(i, j - 1, g.horiz(i, j - 1));
            else if (!above.is_empty())
                r.set_horiz(i, j - 1, g.horiz(i, j - 1).clip_high(above.hi()));
            if (!above.is_empty())
                r.set_vert(i - 1, j, g.vert(i - 1, j));
            else if (!right.is_empty())
                r.set_vert(i - 1, j, g.vert(i - 1, j).clip_high(right.hi()));
        }
    }
    return r;
}

}  // namespace cfrechet

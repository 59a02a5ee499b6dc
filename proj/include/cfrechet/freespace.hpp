#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "cfrechet/geometry.hpp"

namespace cfrechet {

// Interval per boundary edge of the diagram [0, 2m] x [0, n].
//
// Horizontal edges: (i, j) spans [i-1, i] x {j}, i in 1..2m, j in 0..n.
// Vertical edges:   (i, j) spans {i} x [j-1, j], i in 0..2m, j in 1..n.
// Intervals hold absolute u (horizontal) or v (vertical) coordinates.
class EdgeIntervalGrid {
public:
    EdgeIntervalGrid(std::size_t m, std::size_t n)
        : m_(m), n_(n), horiz_(2 * m * (n + 1)), vert_((2 * m + 1) * n) {
        assert(m >= 1 && n >= 1);
    }

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t width() const { return 2 * m_; }  // columns of the doubled diagram

    const Interval& horiz(std::size_t i, std::size_t j) const { return horiz_[hidx(i, j)]; }
    const Interval& vert(std::size_t i, std::size_t j) const { return vert_[vidx(i, j)]; }

    void set_horiz(std::size_t i, std::size_t j, Interval v) { horiz_[hidx(i, j)] = v; }
    void set_vert(std::size_t i, std::size_t j, Interval v) { vert_[vidx(i, j)] = v; }

    friend bool operator==(const EdgeIntervalGrid&, const EdgeIntervalGrid&) = default;

private:
    std::size_t hidx(std::size_t i, std::size_t j) const {
        assert(i >= 1 && i <= 2 * m_ && j <= n_);
        return (i - 1) * (n_ + 1) + j;
    }
    std::size_t vidx(std::size_t i, std::size_t j) const {
        assert(i <= 2 * m_ && j >= 1 && j <= n_);
        return i * n_ + (j - 1);
    }

    std::size_t m_, n_;
    std::vector<Interval> horiz_, vert_;
};

using BoundaryGrid = EdgeIntervalGrid;

// Free intervals of every boundary edge at tolerance eps. Columns i and i+m
// are computed once and mirrored, so the period invariant holds exactly.
// The parallel kernel and the serial reference produce identical grids.
BoundaryGrid build_boundary_grid(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                 bool parallel = true);
BoundaryGrid build_boundary_grid_serial(const ClosedCurve& x, const ClosedCurve& y, double eps);

// Reach sets per edge: points connected to the bottom side (down) or to the
// top side (up) by a monotone path through free space. Sequential sweeps.
EdgeIntervalGrid propagate_reach_down(const BoundaryGrid& g);
EdgeIntervalGrid propagate_reach_up(const BoundaryGrid& g);

}  // namespace cfrechet

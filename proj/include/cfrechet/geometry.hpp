#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace cfrechet {

using Point = std::vector<double>;

// Closed interval of the real line, or the empty set. Empty is canonical
// (+inf, -inf) so that default equality works and clipping stays empty.
class Interval {
public:
    Interval() = default;

    static Interval closed(double lo, double hi) {
        Interval r;
        if (lo <= hi) {
            r.lo_ = lo;
            r.hi_ = hi;
        }
        return r;
    }

    static Interval empty() { return Interval{}; }

    bool is_empty() const { return !(lo_ <= hi_); }

    double lo() const {
        assert(!is_empty());
        return lo_;
    }
    double hi() const {
        assert(!is_empty());
        return hi_;
    }

    double length() const { return is_empty() ? 0.0 : hi_ - lo_; }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }

    // Intersection with [x, +inf).
    Interval clip_low(double x) const { return closed(lo_ < x ? x : lo_, hi_); }

    // Intersection with (-inf, x].
    Interval clip_high(double x) const { return closed(lo_, x < hi_ ? x : hi_); }

    Interval shifted(double d) const {
        return is_empty() ? empty() : closed(lo_ + d, hi_ + d);
    }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = std::numeric_limits<double>::infinity();
    double hi_ = -std::numeric_limits<double>::infinity();
};

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval::closed(a.lo() > b.lo() ? a.lo() : b.lo(),
                            a.hi() < b.hi() ? a.hi() : b.hi());
}

inline double sq_dist(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

// Closed polygonal curve: vertices v_0 .. v_{m-1}, edge i runs from v_i to
// v_{(i+1) mod m}. Coordinates are stored flat, dimension-major per vertex.
class ClosedCurve {
public:
    ClosedCurve(std::size_t dimension, std::vector<double> coords);

    static ClosedCurve from_points(const std::vector<Point>& pts);

    std::size_t size() const { return coords_.size() / dim_; }
    std::size_t dimension() const { return dim_; }

    std::span<const double> vertex(std::size_t i) const {
        assert(i < size());
        return {coords_.data() + i * dim_, dim_};
    }

    // Natural parametrization over [0, size()]: t = i + s is the point at
    // fraction s of edge i; t = size() wraps to vertex 0.
    Point point_at(double t) const;

private:
    std::size_t dim_;
    std::vector<double> coords_;
};

// Parameters t in [0, 1] of the segment a->b whose points lie within eps of c.
// Always a single (possibly empty, possibly degenerate) closed interval.
Interval edge_free_interval(std::span<const double> a, std::span<const double> b,
                            std::span<const double> c, double eps);

// Max pairwise vertex distance; an upper bound on the Frechet distance since
// segment-to-segment distance is maximized at endpoints.
double eps_upper_bound(const ClosedCurve& x, const ClosedCurve& y);

}  // namespace cfrechet

#include "cfrechet/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace cfrechet {

namespace {

void check_pair(const ClosedCurve& x, const ClosedCurve& y, double eps) {
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("oracle: curves must share one ambient dimension");
    if (!(eps >= 0.0)) throw std::domain_error("oracle: eps must be non-negative");
}

// Per-edge free intervals over the doubled diagram, built straight from the
// curves with modulo indexing; deliberately shares no code with the grid
// builder beyond the single-edge primitive.
struct NaiveFreeSpace {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Interval> horiz;  // i in 1..2m, j in 0..n
    std::vector<Interval> vert;   // i in 0..2m, j in 1..n

    NaiveFreeSpace(const ClosedCurve& x, const ClosedCurve& y, double eps)
        : m(x.size()), n(y.size()), horiz(2 * m * (n + 1)), vert((2 * m + 1) * n) {
        for (std::size_t i = 1; i <= 2 * m; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                horiz[(i - 1) * (n + 1) + j] =
                    edge_free_interval(x.vertex((i - 1) % m), x.vertex(i % m), y.vertex(j % n), eps)
                        .shifted(double(i - 1));
        for (std::size_t i = 0; i <= 2 * m; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                vert[i * n + (j - 1)] =
                    edge_free_interval(y.vertex(j - 1), y.vertex(j % n), x.vertex(i % m), eps)
                        .shifted(double(j - 1));
    }

    const Interval& H(std::size_t i, std::size_t j) const { return horiz[(i - 1) * (n + 1) + j]; }
    const Interval& V(std::size_t i, std::size_t j) const { return vert[i * n + (j - 1)]; }
};

// Single-start reachability: is there a monotone path through free space from
// (u0, 0) to (ut, n)?  Because every cell's free set is convex, the reachable
// portion of each cell edge is one interval, so a rolling row of intervals
// suffices.
bool reaches_from(const NaiveFreeSpace& fs, double u0, double ut) {
    const std::size_t w = 2 * fs.m;
    const std::size_t n = fs.n;

    // Reach on the bottom side: the free run rightward from (u0, 0).
    std::vector<Interval> row(w + 1, Interval::empty());
    std::size_t i0 = 0;
    if (u0 == std::floor(u0)) {
        const std::size_t k = std::size_t(u0);
        if (k >= 1 && !fs.H(k, 0).is_empty() && fs.H(k, 0).hi() == u0) {
            i0 = k;
            row[k] = Interval::closed(u0, u0);
        } else if (k < w && !fs.H(k + 1, 0).is_empty() && fs.H(k + 1, 0).lo() == u0) {
            i0 = k + 1;
            row[i0] = fs.H(i0, 0);
        }
    } else {
        const std::size_t k = std::size_t(std::floor(u0)) + 1;
        const Interval& f = fs.H(k, 0);
        if (!f.is_empty() && f.lo() <= u0 && u0 <= f.hi()) {
            i0 = k;
            row[k] = Interval::closed(u0, f.hi());
        }
    }
    if (i0 == 0) return false;  // (u0, 0) is not free
    for (std::size_t i = i0; i < w; ++i) {
        if (fs.H(i, 0).hi() == double(i) && !fs.H(i + 1, 0).is_empty() &&
            fs.H(i + 1, 0).lo() == double(i))
            row[i + 1] = fs.H(i + 1, 0);
        else
            break;
    }

    // Reach on the left side: the free run upward from (0, 0), which only a
    // start at u0 == 0 can use.
    std::vector<Interval> leftcol(n + 1, Interval::empty());
    if (u0 == 0.0) {
        for (std::size_t j = 1; j <= n; ++j) {
            const Interval& f = fs.V(0, j);
            if (f.is_empty() || f.lo() != double(j - 1)) break;
            leftcol[j] = f;
            if (f.hi() != double(j)) break;
        }
    }

    // Sweep rows upward.  Entering a cell from its left edge frees the whole
    // top interval; entering only from below keeps the floor of the entry
    // point as a lower bound (paths cannot move left).
    for (std::size_t j = 1; j <= n; ++j) {
        Interval left = leftcol[j];
        for (std::size_t i = 1; i <= w; ++i) {
            const Interval bottom = row[i];
            const Interval& fh = fs.H(i, j);
            const Interval& fv = fs.V(i, j);
            Interval top, right;
            if (!left.is_empty())
                top = fh;
            else if (!bottom.is_empty() && !fh.is_empty())
                top = fh.clip_low(bottom.lo());
            if (!bottom.is_empty())
                right = fv;
            else if (!left.is_empty() && !fv.is_empty())
                right = fv.clip_low(left.lo());
            row[i] = top;
            left = right;
        }
    }

    const auto hit = [&](std::size_t i) {
        return i >= 1 && i <= w && !row[i].is_empty() && row[i].lo() <= ut && ut <= row[i].hi();
    };
    if (ut == std::floor(ut)) {
        const std::size_t k = std::size_t(ut);
        return hit(k) || hit(k + 1);
    }
    return hit(std::size_t(std::floor(ut)) + 1);
}

}  // namespace

SampledCurve SampledCurve::sample(const ClosedCurve& c, std::size_t count) {
    if (count < c.size())
        throw std::invalid_argument("SampledCurve: need at least one sample per edge");
    SampledCurve s;
    s.dim = c.dimension();
    s.pts.resize(count * s.dim);
    const double md = double(c.size());
    for (std::size_t i = 0; i < count; ++i) {
        const Point p = c.point_at(md * double(i) / double(count));
        std::copy(p.begin(), p.end(), s.pts.begin() + std::ptrdiff_t(i * s.dim));
    }
    // Consecutive samples are at most one parameter step m/count apart, and a
    // unit of parameter never covers more than the longest edge.
    double lmax = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        lmax = std::max(lmax, sq_dist(c.vertex(i), c.vertex((i + 1) % c.size())));
    s.spacing_bound = md * std::sqrt(lmax) / double(count);
    return s;
}

double discrete_frechet_cyclic(const SampledCurve& p, const SampledCurve& q) {
    if (p.dim != q.dim)
        throw std::invalid_argument("discrete_frechet_cyclic: dimension mismatch");
    const std::size_t np = p.count();
    const std::size_t nq = q.count();
    if (np == 0 || nq == 0) throw std::invalid_argument("discrete_frechet_cyclic: empty sampling");

    std::vector<double> dmat(np * nq);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nq; ++j)
            dmat[i * nq + j] = std::sqrt(sq_dist(p.at(i), q.at(j)));

    // One coupling walks both closed sequences exactly once and returns to its
    // starting pair; minimise over the nq possible starting rotations of q.
    double best = std::numeric_limits<double>::infinity();
#ifdef _OPENMP
#pragma omp parallel for reduction(min : best) schedule(dynamic)
#endif
    for (long long rr = 0; rr < (long long)nq; ++rr) {
        const std::size_t r = std::size_t(rr);
        std::vector<double> prev(nq + 1), cur(nq + 1);
        prev[0] = dmat[r];
        for (std::size_t j = 1; j <= nq; ++j)
            prev[j] = std::max(prev[j - 1], dmat[(r + j) % nq]);
        for (std::size_t i = 1; i <= np; ++i) {
            const double* di = dmat.data() + (i % np) * nq;
            cur[0] = std::max(prev[0], di[r]);
            for (std::size_t j = 1; j <= nq; ++j)
                cur[j] = std::max(di[(r + j) % nq], std::min({prev[j], cur[j - 1], prev[j - 1]}));
            std::swap(prev, cur);
        }
        best = std::min(best, prev[nq]);
    }
    return best;
}

bool naive_closed_decide(const ClosedCurve& x, const ClosedCurve& y, double eps,
                         std::span<const double> candidates) {
    check_pair(x, y, eps);
    const double md = double(x.size());
    for (double u : candidates)
        if (!(u >= 0.0 && u <= md))
            throw std::invalid_argument("naive_closed_decide: candidate outside [0, m]");
    const NaiveFreeSpace fs(x, y, eps);
    std::atomic<bool> found{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long k = 0; k < (long long)candidates.size(); ++k) {
        if (found.load(std::memory_order_relaxed)) continue;
        const double u = candidates[std::size_t(k)];
        if (reaches_from(fs, u, u + md)) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

std::vector<double> decide_candidates(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                      std::size_t grid_points) {
    check_pair(x, y, eps);
    const std::size_t m = x.size();
    const double md = double(m);
    std::vector<double> cand;
    for (std::size_t i = 1; i <= m; ++i) {
        const Interval f =
            edge_free_interval(x.vertex(i - 1), x.vertex(i % m), y.vertex(0), eps)
                .shifted(double(i - 1));
        if (f.is_empty()) continue;
        cand.push_back(f.lo());
        cand.push_back(f.hi());
    }
    if (grid_points == 1) cand.push_back(0.0);
    for (std::size_t g = 0; grid_points >= 2 && g < grid_points; ++g)
        cand.push_back(md * double(g) / double(grid_points - 1));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

std::vector<double> exhaustive_decide_candidates(const ClosedCurve& x, const ClosedCurve& y,
                                                 double eps, std::size_t grid_points) {
    std::vector<double> cand = decide_candidates(x, y, eps, grid_points);
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    const double md = double(m);
    const auto keep = [&](double u) {
        if (u >= 0.0 && u <= md) cand.push_back(u);
    };
    for (std::size_t i = 1; i <= 2 * m; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            const Interval f =
                edge_free_interval(x.vertex((i - 1) % m), x.vertex(i % m), y.vertex(j % n), eps)
                    .shifted(double(i - 1));
            if (f.is_empty()) continue;
            keep(f.lo());
            keep(f.lo() - md);
            keep(f.hi());
            keep(f.hi() - md);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

std::optional<double> naive_top_origin(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                       double u) {
    check_pair(x, y, eps);
    const NaiveFreeSpace fs(x, y, eps);
    const std::size_t w = 2 * fs.m;
    if (!(u >= 0.0 && u <= double(w)))
        throw std::invalid_argument("naive_top_origin: u outside the doubled diagram");

    // A rightmost start reaching (u, n) is either u itself, a right endpoint
    // of some horizontal free interval, or 0 (entry along the left side), so
    // trying those from the right finds it.
    std::vector<double> cand{0.0, u};
    for (std::size_t i = 1; i <= w; ++i)
        for (std::size_t j = 0; j <= fs.n; ++j) {
            const Interval& f = fs.H(i, j);
            if (!f.is_empty() && f.hi() <= u) cand.push_back(f.hi());
        }
    std::sort(cand.begin(), cand.end(), std::greater<>());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (double s : cand)
        if (s >= 0.0 && s <= u && reaches_from(fs, s, u)) return s;
    return std::nullopt;
}

bool naive_mutually_reachable(const ClosedCurve& x, const ClosedCurve& y, double eps, double u) {
    check_pair(x, y, eps);
    const double md = double(x.size());
    if (!(u >= 0.0 && u <= md))
        throw std::invalid_argument("naive_mutually_reachable: u outside [0, m]");
    const NaiveFreeSpace fs(x, y, eps);
    return reaches_from(fs, u, u + md);
}

}  // namespace cfrechet

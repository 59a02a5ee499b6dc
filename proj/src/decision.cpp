#include "cfrechet/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfrechet {

DecisionReport decide(const ClosedCurve& x, const ClosedCurve& y, double eps,
                      const DecideOptions& opts) {
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("decide: curves must share one dimension");
    if (!(eps >= 0.0)) throw std::domain_error("decide: eps must be >= 0");

    const std::size_t m = x.size(), n = y.size(), w = 2 * m;
    DecisionReport rep;
    rep.eps = eps;
    rep.m = m;
    rep.n = n;

    const BoundaryGrid grid = build_boundary_grid(x, y, eps, opts.parallel_grid);

    bool bottom_free = false, top_free = false;
    for (std::size_t i = 1; i <= w; ++i) {
        bottom_free = bottom_free || !grid.horiz(i, 0).is_empty();
        top_free = top_free || !grid.horiz(i, n).is_empty();
    }
    if (!bottom_free || !top_free) return rep;  // no path can start or finish

    const EdgeIntervalGrid down = propagate_reach_down(grid);
    const EdgeIntervalGrid up = propagate_reach_up(grid);
    const ForwardPassResult fwd = forward_pass(down);
    const BackwardPassResult bwd = backward_pass(up);
    rep.forward = fwd.counters;
    rep.backward = bwd.counters;

    // A start u on [0, m] works iff (u, 0) reaches the top side, (u+m, n) is
    // reached from the bottom side, and the two origin pointers allow the
    // pair: u+m <= r_up(u, 0) and u <= r_down(u+m, n). Scan every bottom edge
    // against every origin piece of the matching top column.
    const double md = static_cast<double>(m);
    for (std::size_t i = 1; i <= m && !rep.answer; ++i) {
        const Interval start = up.horiz(i, 0);
        if (start.is_empty()) continue;
        assert(bwd.bottom[i].has_value());
        const double r_up = *bwd.bottom[i];
        for (const ReachTriple& t : fwd.top[i + m]) {
            const double lo = std::max(start.lo(), t.beg - md);
            const double hi = std::min(std::min(start.hi(), t.end - md),
                                       std::min(r_up - md, t.origin));
            if (lo <= hi) {
                rep.answer = true;
                rep.witness_u = lo;
                break;
            }
        }
    }
    return rep;
}

DistanceResult distance(const ClosedCurve& x, const ClosedCurve& y, double tol,
                        const DecideOptions& opts) {
    if (!(tol > 0.0)) throw std::domain_error("distance: tol must be > 0");
    double lo = 0.0, hi = eps_upper_bound(x, y);
    DistanceResult res;
    if (hi == 0.0) return res;
    if (hi > tol) res.iterations = static_cast<int>(std::ceil(std::log2(hi / tol)));
    if (res.iterations > 200) res.iterations = 200;
    for (int k = 0; k < res.iterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (decide(x, y, mid, opts).answer)
            hi = mid;
        else
            lo = mid;
    }
    res.value = 0.5 * (lo + hi);
    return res;
}

}  // namespace cfrechet

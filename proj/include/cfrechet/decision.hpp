#pragma once

#include <optional>

#include "cfrechet/reach_pass.hpp"

namespace cfrechet {

struct DecideOptions {
    bool parallel_grid = true;  // serial kernel when false (stable timings)
};

struct DecisionReport {
    bool answer = false;
    std::optional<double> witness_u;  // valid start parameter on [0, m] when true
    double eps = 0.0;
    std::size_t m = 0, n = 0;
    PassCounters forward, backward;

    std::uint64_t pushes() const { return forward.pushes + backward.pushes; }
    std::uint64_t pops() const { return forward.pops + backward.pops; }
};

// Whether the curves admit monotone cyclic reparametrizations keeping the
// pointwise distance within eps. O(mn) for m and n vertices.
DecisionReport decide(const ClosedCurve& x, const ClosedCurve& y, double eps,
                      const DecideOptions& opts = {});

struct DistanceResult {
    double value = 0.0;
    int iterations = 0;
};

// Bisection on decide over [0, eps_upper_bound] down to absolute tolerance.
DistanceResult distance(const ClosedCurve& x, const ClosedCurve& y, double tol,
                        const DecideOptions& opts = {});

}  // namespace cfrechet

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cfrechet/geometry.hpp"

namespace cfrechet {

// Brute-force baselines for desk-scale validation. Everything here rebuilds
// what it needs from the curves directly and shares no code with the grid
// propagation or the deque passes.

struct SampledCurve {
    std::size_t dim = 0;
    std::vector<double> pts;     // count * dim, flat
    double spacing_bound = 0.0;  // max distance between consecutive samples

    std::size_t count() const { return dim == 0 ? 0 : pts.size() / dim; }
    std::span<const double> at(std::size_t i) const { return {pts.data() + i * dim, dim}; }

    // count uniformly spaced parameters over [0, m); count >= m required.
    static SampledCurve sample(const ClosedCurve& c, std::size_t count);
};

// Cyclic discrete Frechet distance: min over rotations of q of the max-min
// coupling that walks both closed sequences once, ending where it started.
// O(count^3); within spacing_bound(p) + spacing_bound(q) of the true value.
double discrete_frechet_cyclic(const SampledCurve& p, const SampledCurve& q);

// Decision by trying explicit start parameters: true iff some candidate u has
// a monotone free path from (u, 0) to (u + m, n) in the doubled diagram.
// Exact when the candidate set contains a valid start; the default set below
// makes it exact up to grid resolution only.
bool naive_closed_decide(const ClosedCurve& x, const ClosedCurve& y, double eps,
                         std::span<const double> candidates);

// Free-interval endpoints on the bottom side within [0, m] plus a uniform grid.
std::vector<double> decide_candidates(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                      std::size_t grid_points = 128);

// Every horizontal free-interval endpoint anywhere in the diagram, also
// shifted down by m, clipped to [0, m]; with these the candidate set covers
// every possible endpoint of the valid-start region.
std::vector<double> exhaustive_decide_candidates(const ClosedCurve& x, const ClosedCurve& y,
                                                 double eps, std::size_t grid_points = 128);

// Rightmost bottom-side start reaching (u, n), or nullopt if unreachable.
std::optional<double> naive_top_origin(const ClosedCurve& x, const ClosedCurve& y, double eps,
                                       double u);

// Whether (u, 0) and (u + m, n) lie on one monotone free path.
bool naive_mutually_reachable(const ClosedCurve& x, const ClosedCurve& y, double eps, double u);

}  // namespace cfrechet

#include "cfrechet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cfrechet {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

ClosedCurve gen_polygon(std::size_t m, SplitMix64& rng) {
    std::vector<double> xs(m), ys(m);
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = rng.uniform01();
        ys[i] = rng.uniform01();
        cx += xs[i];
        cy += ys[i];
    }
    cx /= double(m);
    cy /= double(m);
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::atan2(ys[a] - cy, xs[a] - cx) < std::atan2(ys[b] - cy, xs[b] - cx);
    });
    std::vector<double> coords;
    coords.reserve(2 * m);
    for (std::size_t i : order) {
        coords.push_back(xs[i]);
        coords.push_back(ys[i]);
    }
    return ClosedCurve(2, std::move(coords));
}

ClosedCurve gen_star(std::size_t m, SplitMix64& rng) {
    std::vector<double> coords;
    coords.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const double a = kTau * double(i) / double(m);
        const double r = rng.uniform(0.5, 1.5);
        coords.push_back(r * std::cos(a));
        coords.push_back(r * std::sin(a));
    }
    return ClosedCurve(2, std::move(coords));
}

ClosedCurve gen_noisy_circle(std::size_t m, SplitMix64& rng) {
    std::vector<double> coords;
    coords.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const double a = kTau * double(i) / double(m);
        coords.push_back(std::cos(a) + rng.uniform(-0.05, 0.05));
        coords.push_back(std::sin(a) + rng.uniform(-0.05, 0.05));
    }
    return ClosedCurve(2, std::move(coords));
}

ClosedCurve synth_curve(const std::string& kind, std::size_t m, std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("synth_curve: m must be positive");
    SplitMix64 rng(seed);
    if (kind == "polygon") return gen_polygon(m, rng);
    if (kind == "star") return gen_star(m, rng);
    if (kind == "noisy-circle") return gen_noisy_circle(m, rng);
    throw std::invalid_argument("synth_curve: unknown kind \"" + kind + "\"");
}

}  // namespace cfrechet

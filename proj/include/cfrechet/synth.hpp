#pragma once

#include <cstdint>
#include <string>

#include "cfrechet/geometry.hpp"
#include "cfrechet/rng.hpp"

namespace cfrechet {

// Deterministic 2-d test-curve generators: the same (m, seed) always yields
// the same vertices.

// Random points in the unit square, ordered by angle around their centroid.
ClosedCurve gen_polygon(std::size_t m, SplitMix64& rng);

// Vertices at equal angles with radii drawn from [0.5, 1.5].
ClosedCurve gen_star(std::size_t m, SplitMix64& rng);

// Unit circle samples with coordinate noise from [-0.05, 0.05].
ClosedCurve gen_noisy_circle(std::size_t m, SplitMix64& rng);

// Dispatch by name: "polygon", "star" or "noisy-circle".  Throws
// std::invalid_argument for anything else or m == 0.
ClosedCurve synth_curve(const std::string& kind, std::size_t m, std::uint64_t seed);

}  // namespace cfrechet

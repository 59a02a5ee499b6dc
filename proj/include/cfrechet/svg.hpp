#pragma once

#include <iosfwd>

#include "cfrechet/geometry.hpp"

namespace cfrechet {

// Draws the doubled diagram [0, 2m] x [0, n] with u rightward and v upward:
// a light cell grid, the free interval of every cell-boundary edge as a bold
// stroke, and a dashed seam at u = m.  Refuses diagrams with more than
// 100000 cells (throws std::runtime_error) to keep output sizes sane.
void write_diagram_svg(std::ostream& out, const ClosedCurve& x, const ClosedCurve& y, double eps);

}  // namespace cfrechet

#pragma once

#include <iosfwd>
#include <string>

#include "cfrechet/geometry.hpp"

namespace cfrechet {

// Curves travel as JSON objects:
//   {"closed": true, "dimension": 2, "points": [[x, y], ...]}
// "closed" must be present and true; "points" holds at least one vertex, each
// an array of exactly "dimension" finite numbers.  Readers throw
// std::runtime_error with a message naming `what` on any violation.

ClosedCurve read_curve_json(std::istream& in, const std::string& what = "curve");
ClosedCurve read_curve_file(const std::string& path);

void write_curve_json(std::ostream& out, const ClosedCurve& c);
void write_curve_file(const std::string& path, const ClosedCurve& c);

}  // namespace cfrechet

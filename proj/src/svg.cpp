#include "cfrechet/svg.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cfrechet/decision.hpp"
#include "cfrechet/freespace.hpp"
#include "cfrechet/reach_pass.hpp"

namespace cfrechet {

namespace {

constexpr double kScale = 32.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

void write_diagram_svg(std::ostream& out, const ClosedCurve& x, const ClosedCurve& y, double eps) {
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (2 * m * n > 100000)
        throw std::runtime_error("diagram too large: 2*m*n must be at most 100000");

    const BoundaryGrid free = build_boundary_grid(x, y, eps);
    const EdgeIntervalGrid down = propagate_reach_down(free);
    const EdgeIntervalGrid up = propagate_reach_up(free);
    const ForwardPassResult fwd = forward_pass(down);
    const DecisionReport rep = decide(x, y, eps);

    const double w = 2.0 * double(m);
    const double h = double(n);
    const auto px = [](double u) { return kMargin + kScale * u; };
    const auto py = [h](double v) { return kMargin + kScale * (h - v); };
    const auto line = [&out](double x1, double y1, double x2, double y2) {
        out << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2) << "\"/>\n";
    };
    // Horizontal edges shifted by dy pixels, vertical ones by dx, so the
    // free, reach-from-bottom and reach-from-top layers sit side by side
    // instead of covering each other.
    const auto stroke_grid = [&](const EdgeIntervalGrid& g, double dx, double dy) {
        for (std::size_t i = 1; i <= g.width(); ++i)
            for (std::size_t j = 0; j <= g.n(); ++j) {
                const Interval& f = g.horiz(i, j);
                if (!f.is_empty())
                    line(px(f.lo()), py(double(j)) + dy, px(f.hi()), py(double(j)) + dy);
            }
        for (std::size_t i = 0; i <= g.width(); ++i)
            for (std::size_t j = 1; j <= g.n(); ++j) {
                const Interval& f = g.vert(i, j);
                if (!f.is_empty())
                    line(px(double(i)) + dx, py(f.lo()), px(double(i)) + dx, py(f.hi()));
            }
    };

    const double width = 2.0 * kMargin + kScale * w;
    const double height = 2.0 * kMargin + kScale * h;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Cell grid and the seam between the two copies of X.
    out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i <= 2 * m; ++i)
        line(px(double(i)), py(0.0), px(double(i)), py(h));
    for (std::size_t j = 0; j <= n; ++j) line(px(0.0), py(double(j)), px(w), py(double(j)));
    out << "  </g>\n";
    out << "  <line x1=\"" << fmt(px(double(m))) << "\" y1=\"" << fmt(py(0.0)) << "\" x2=\""
        << fmt(px(double(m))) << "\" y2=\"" << fmt(py(h))
        << "\" stroke=\"#d32f2f\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";

    out << "  <g stroke=\"#90caf9\" stroke-width=\"5\" stroke-linecap=\"round\">\n";
    stroke_grid(free, 0.0, 0.0);
    out << "  </g>\n";
    out << "  <g stroke=\"#ef6c00\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    stroke_grid(down, 3.0, 3.0);
    out << "  </g>\n";
    out << "  <g stroke=\"#2e7d32\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    stroke_grid(up, -3.0, -3.0);
    out << "  </g>\n";

    // Final top-side partitions: one tick pair and a value label per piece.
    out << "  <g stroke=\"#6a1b9a\" stroke-width=\"1\">\n";
    for (std::size_t i = 1; i <= 2 * m; ++i)
        for (const ReachTriple& t : fwd.top[i]) {
            line(px(t.beg), py(h) - 4.0, px(t.beg), py(h) - 10.0);
            line(px(t.end), py(h) - 4.0, px(t.end), py(h) - 10.0);
        }
    out << "  </g>\n";
    out << "  <g font-family=\"monospace\" font-size=\"9\" fill=\"#6a1b9a\" "
           "text-anchor=\"middle\">\n";
    for (std::size_t i = 1; i <= 2 * m; ++i)
        for (const ReachTriple& t : fwd.top[i]) {
            const std::string label = t.identity() ? "id" : num(t.origin);
            out << "    <text x=\"" << fmt(px(0.5 * (t.beg + t.end))) << "\" y=\""
                << fmt(py(h) - 13.0) << "\">" << label << "</text>\n";
        }
    out << "  </g>\n";

    // Witness endpoints (u, 0) and (u + m, n) when the decision holds.
    if (rep.answer && rep.witness_u) {
        const double u = *rep.witness_u;
        out << "  <circle cx=\"" << fmt(px(u)) << "\" cy=\"" << fmt(py(0.0))
            << "\" r=\"5\" fill=\"#d32f2f\"/>\n";
        out << "  <circle cx=\"" << fmt(px(u + double(m))) << "\" cy=\"" << fmt(py(h))
            << "\" r=\"5\" fill=\"#d32f2f\"/>\n";
        out << "  <text x=\"" << fmt(px(u)) << "\" y=\"" << fmt(py(0.0) + 16.0)
            << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#d32f2f\" "
               "text-anchor=\"middle\">u = "
            << num(u) << "</text>\n";
    }

    out << "</svg>\n";
}

}  // namespace cfrechet

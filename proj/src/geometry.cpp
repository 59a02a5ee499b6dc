#include "cfrechet/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfrechet {

ClosedCurve::ClosedCurve(std::size_t dimension, std::vector<double> coords)
    : dim_(dimension), coords_(std::move(coords)) {
    if (dim_ == 0) throw std::invalid_argument("curve dimension must be positive");
    if (coords_.empty() || coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate count must be a positive multiple of the dimension");
    for (double c : coords_)
        if (!std::isfinite(c)) throw std::invalid_argument("curve coordinates must be finite");
}

ClosedCurve ClosedCurve::from_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("curve needs at least one vertex");
    const std::size_t dim = pts.front().size();
    std::vector<double> flat;
    flat.reserve(pts.size() * dim);
    for (const Point& p : pts) {
        if (p.size() != dim) throw std::invalid_argument("all vertices must share one dimension");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return ClosedCurve(dim, std::move(flat));
}

Point ClosedCurve::point_at(double t) const {
    const std::size_t m = size();
    if (!(t >= 0.0 && t <= static_cast<double>(m)))
        throw std::domain_error("curve parameter out of range [0, m]");
    std::size_t i = static_cast<std::size_t>(t);
    if (i >= m) i = m - 1;  // t == m belongs to the last edge with s == 1
    const double s = t - static_cast<double>(i);
    const auto a = vertex(i);
    const auto b = vertex((i + 1) % m);
    Point p(dim_);
    for (std::size_t k = 0; k < dim_; ++k) p[k] = a[k] + s * (b[k] - a[k]);
    return p;
}

Interval edge_free_interval(std::span<const double> a, std::span<const double> b,
                            std::span<const double> c, double eps) {
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("edge_free_interval: dimension mismatch");
    if (!(eps >= 0.0)) throw std::domain_error("edge_free_interval: eps must be >= 0");

    // |a + t(b-a) - c|^2 <= eps^2 as a quadratic qa*t^2 + 2*qb*t + qc <= 0.
    double qa = 0.0, qb = 0.0, qc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double u = b[k] - a[k];
        const double w = a[k] - c[k];
        qa += u * u;
        qb += u * w;
        qc += w * w;
    }
    qc -= eps * eps;

    if (qa == 0.0)  // degenerate edge: distance to c is constant
        return qc <= 0.0 ? Interval::closed(0.0, 1.0) : Interval::empty();

    double disc = qb * qb - qa * qc;
    // Grazing contact rounds the discriminant slightly negative; clamp within
    // a relative band so tangencies yield a single point instead of nothing.
    const double tol = 1e-12 * (qb * qb + qa * std::fabs(qc));
    if (disc < 0.0 && disc >= -tol) disc = 0.0;
    if (disc < 0.0) return Interval::empty();

    const double root = std::sqrt(disc);
    const double t1 = (-qb - root) / qa;
    const double t2 = (-qb + root) / qa;
    if (t2 < 0.0 || t1 > 1.0) return Interval::empty();
    return Interval::closed(t1 < 0.0 ? 0.0 : t1, t2 > 1.0 ? 1.0 : t2);
}

double eps_upper_bound(const ClosedCurve& x, const ClosedCurve& y) {
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("eps_upper_bound: dimension mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double d = sq_dist(x.vertex(i), y.vertex(j));
            if (d > best) best = d;
        }
    return std::sqrt(best);
}

}  // namespace cfrechet

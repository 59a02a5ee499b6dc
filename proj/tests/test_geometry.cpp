#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cfrechet/geometry.hpp"
#include "test_util.hpp"

using cfrechet::ClosedCurve;
using cfrechet::Interval;
using cfrechet::edge_free_interval;
using cfrechet::eps_upper_bound;
using cfrechet::intersect;
using testutil::make_curve;

namespace {
cfrechet::Point pt(double x, double y) { return {x, y}; }
}  // namespace

TEST_CASE("interval construction and canonical empty") {
    CHECK(Interval().is_empty());
    CHECK(Interval::empty().is_empty());
    CHECK(Interval::closed(2.0, 1.0).is_empty());
    CHECK(Interval::closed(2.0, 1.0) == Interval::empty());  // canonical form

    const Interval a = Interval::closed(0.25, 0.75);
    CHECK(!a.is_empty());
    CHECK(a.lo() == 0.25);
    CHECK(a.hi() == 0.75);
    CHECK(a.length() == 0.5);
    CHECK(a.contains(0.25));
    CHECK(a.contains(0.75));
    CHECK(!a.contains(0.76));
    CHECK(!Interval::empty().contains(0.0));

    const Interval p = Interval::closed(0.5, 0.5);
    CHECK(!p.is_empty());
    CHECK(p.length() == 0.0);
}

TEST_CASE("interval clipping and intersection") {
    const Interval a = Interval::closed(1.0, 3.0);
    CHECK(a.clip_low(2.0) == Interval::closed(2.0, 3.0));
    CHECK(a.clip_low(0.0) == a);
    CHECK(a.clip_low(4.0).is_empty());
    CHECK(a.clip_high(2.0) == Interval::closed(1.0, 2.0));
    CHECK(a.clip_high(4.0) == a);
    CHECK(a.clip_high(0.5).is_empty());
    CHECK(Interval::empty().clip_low(0.0).is_empty());
    CHECK(Interval::empty().clip_high(0.0).is_empty());

    CHECK(intersect(a, Interval::closed(2.0, 5.0)) == Interval::closed(2.0, 3.0));
    CHECK(intersect(a, Interval::closed(3.0, 5.0)) == Interval::closed(3.0, 3.0));
    CHECK(intersect(a, Interval::closed(3.5, 5.0)).is_empty());
    CHECK(intersect(a, Interval::empty()).is_empty());

    CHECK(a.shifted(2.0) == Interval::closed(3.0, 5.0));
    CHECK(Interval::empty().shifted(2.0).is_empty());
}

TEST_CASE("curve construction validates input") {
    CHECK_THROWS_AS(ClosedCurve(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(ClosedCurve(2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(ClosedCurve(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(ClosedCurve(2, {0.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(ClosedCurve(1, {std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);

    const ClosedCurve c(2, {0.0, 0.0, 1.0, 0.0});
    CHECK(c.size() == 2);
    CHECK(c.dimension() == 2);
    CHECK(c.vertex(1)[0] == 1.0);
}

TEST_CASE("point evaluation on the unit square") {
    const ClosedCurve sq = testutil::unit_square();

    CHECK(sq.point_at(0.5) == pt(0.5, 0.0));
    CHECK(sq.point_at(0.0) == pt(0.0, 0.0));
    CHECK(sq.point_at(4.0) == pt(0.0, 0.0));  // wraps to the first vertex
    CHECK(sq.point_at(2.5) == pt(0.5, 1.0));
    CHECK(sq.point_at(3.5) == pt(0.0, 0.5));

    CHECK_THROWS_AS(sq.point_at(-0.1), std::domain_error);
    CHECK_THROWS_AS(sq.point_at(4.1), std::domain_error);
}

TEST_CASE("point evaluation is Lipschitz in the parameter") {
    cfrechet::SplitMix64 rng(11);
    const ClosedCurve c = testutil::random_curve(7, rng);
    double lmax = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        lmax = std::max(lmax, std::sqrt(cfrechet::sq_dist(c.vertex(i),
                                                          c.vertex((i + 1) % c.size()))));
    for (int k = 0; k < 200; ++k) {
        const double t1 = rng.uniform(0.0, 7.0);
        const double t2 = rng.uniform(0.0, 7.0);
        const auto p1 = c.point_at(t1);
        const auto p2 = c.point_at(t2);
        const double d = std::sqrt(cfrechet::sq_dist(p1, p2));
        CHECK(d <= lmax * std::fabs(t1 - t2) + 1e-12);
    }
}

TEST_CASE("free interval of an edge against a point") {
    // |(t, 0) - (0.5, 0.3)| <= 0.5  <=>  (t - 0.5)^2 <= 0.16  <=>  t in [0.1, 0.9]
    const Interval f = edge_free_interval(pt(0, 0), pt(1, 0), pt(0.5, 0.3), 0.5);
    REQUIRE(!f.is_empty());
    CHECK(f.lo() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(f.hi() == doctest::Approx(0.9).epsilon(1e-12));

    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(0.5, 0.3), 0.2).is_empty());
    CHECK(edge_free_interval(pt(0, 0), pt(0, 0), pt(0, 0), 0.0) == Interval::closed(0.0, 1.0));
}

TEST_CASE("free interval edge cases") {
    // Degenerate edge away from the point.
    CHECK(edge_free_interval(pt(2, 2), pt(2, 2), pt(0, 0), 1.0).is_empty());
    CHECK(edge_free_interval(pt(2, 0), pt(2, 0), pt(0, 0), 2.0) == Interval::closed(0.0, 1.0));

    // Solutions strictly outside [0, 1] are rejected.
    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(3, 0), 0.5).is_empty());
    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(-2, 0), 0.5).is_empty());

    // Solutions overlapping [0, 1] are clamped.
    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(0.0, 0.0), 0.25) ==
          Interval::closed(0.0, 0.25));
    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(0.5, 0.0), 2.0) ==
          Interval::closed(0.0, 1.0));

    CHECK_THROWS_AS(edge_free_interval(pt(0, 0), pt(1, 0), pt(0, 0), -0.1), std::domain_error);
    const cfrechet::Point three{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(edge_free_interval(pt(0, 0), pt(1, 0), three, 1.0), std::invalid_argument);
}

TEST_CASE("grazing contact yields a point interval, not empty") {
    // Closest approach of the segment to (0.5, 0.3) is exactly 0.3.
    // The discriminant clamp admits a residue of order 1e-12, so the surviving
    // interval may have width up to about 1e-6.
    const Interval f = edge_free_interval(pt(0, 0), pt(1, 0), pt(0.5, 0.3), 0.3);
    REQUIRE(!f.is_empty());
    CHECK(std::fabs(f.lo() - 0.5) <= 1e-6);
    CHECK(std::fabs(f.hi() - 0.5) <= 1e-6);
    CHECK(edge_free_interval(pt(0, 0), pt(1, 0), pt(0.5, 0.3), 0.29).is_empty());
}

TEST_CASE("free interval is monotone in eps") {
    cfrechet::SplitMix64 rng(23);
    for (int k = 0; k < 500; ++k) {
        const auto a = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto b = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto c = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const double e1 = rng.uniform(0, 2);
        const double e2 = e1 + rng.uniform(0, 2);
        const Interval f1 = edge_free_interval(a, b, c, e1);
        const Interval f2 = edge_free_interval(a, b, c, e2);
        if (f1.is_empty()) continue;
        REQUIRE(!f2.is_empty());
        CHECK(f2.lo() <= f1.lo());
        CHECK(f1.hi() <= f2.hi());
    }
}

TEST_CASE("free interval is invariant under rigid motions") {
    cfrechet::SplitMix64 rng(37);
    for (int k = 0; k < 200; ++k) {
        const auto a = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto b = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto c = pt(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const double eps = rng.uniform(0, 2);
        const double ang = rng.uniform(0, 6.283185307179586);
        const double tx = rng.uniform(-5, 5), ty = rng.uniform(-5, 5);
        const auto rot = [&](const cfrechet::Point& p) {
            return pt(std::cos(ang) * p[0] - std::sin(ang) * p[1] + tx,
                      std::sin(ang) * p[0] + std::cos(ang) * p[1] + ty);
        };
        const Interval f = edge_free_interval(a, b, c, eps);
        const Interval g = edge_free_interval(rot(a), rot(b), rot(c), eps);
        CHECK(f.is_empty() == g.is_empty());
        if (!f.is_empty()) {
            CHECK(std::fabs(f.lo() - g.lo()) <= 1e-9);
            CHECK(std::fabs(f.hi() - g.hi()) <= 1e-9);
        }
    }
}

TEST_CASE("pairwise vertex bound") {
    const ClosedCurve sq = testutil::unit_square();
    CHECK(eps_upper_bound(sq, sq) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(eps_upper_bound(testutil::point_curve(1), testutil::square_corners()) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(eps_upper_bound(testutil::point_curve(1), testutil::point_curve(1)) == 0.0);
    const ClosedCurve line3 = ClosedCurve(3, {0.0, 0.0, 0.0});
    CHECK_THROWS_AS(eps_upper_bound(sq, line3), std::invalid_argument);
}

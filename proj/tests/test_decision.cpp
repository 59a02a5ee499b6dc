#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cfrechet/decision.hpp"
#include "cfrechet/oracle.hpp"
#include "cfrechet/rng.hpp"
#include "test_util.hpp"

using cfrechet::ClosedCurve;
using cfrechet::DecideOptions;
using cfrechet::DecisionReport;
using cfrechet::SplitMix64;
using cfrechet::decide;
using cfrechet::distance;
using cfrechet::eps_upper_bound;
using cfrechet::naive_mutually_reachable;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Witness check with a whisker of slack: the witness often sits exactly on an
// interval endpoint, where the independently computed grid may disagree by an
// ulp, so the oracle gets a relatively enlarged tolerance.
bool witness_ok(const ClosedCurve& x, const ClosedCurve& y, double eps,
                const DecisionReport& rep) {
    if (!rep.witness_u.has_value()) return false;
    const double u = *rep.witness_u;
    if (!(u >= 0.0 && u <= double(x.size()))) return false;
    return naive_mutually_reachable(x, y, eps * (1.0 + 1e-9), u);
}

}  // namespace

TEST_CASE("identical curves match at any tolerance") {
    const ClosedCurve sq = testutil::unit_square();
    const DecisionReport rep = decide(sq, sq, 1e-9);
    CHECK(rep.answer);
    REQUIRE(rep.witness_u.has_value());
    CHECK(std::fabs(*rep.witness_u) <= 1e-6);
    CHECK(witness_ok(sq, sq, 1e-9, rep));
    CHECK(rep.m == 4);
    CHECK(rep.n == 4);
    CHECK(rep.eps == 1e-9);
    CHECK(decide(sq, sq, 0.0).answer);
}

TEST_CASE("point against square corners flips at the corner distance") {
    const ClosedCurve p = testutil::point_curve(1);
    const ClosedCurve c = testutil::square_corners();
    CHECK(decide(p, c, 1.415).answer);
    CHECK(!decide(p, c, 1.414).answer);
    CHECK(witness_ok(p, c, 1.415, decide(p, c, 1.415)));
}

TEST_CASE("shifted squares flip at half the offset nowhere near the vertices") {
    const ClosedCurve a = testutil::unit_square();
    const ClosedCurve b = testutil::shifted_square(0.5, 0.0);
    CHECK(decide(a, b, 0.500001).answer);
    CHECK(!decide(a, b, 0.499999).answer);
}

TEST_CASE("blocked start or finish rows exit before any sweep") {
    const ClosedCurve p = testutil::point_curve(1);
    const ClosedCurve c = testutil::square_corners();
    const DecisionReport rep = decide(p, c, 0.9);  // whole diagram blocked
    CHECK(!rep.answer);
    CHECK(!rep.witness_u.has_value());
    CHECK(rep.forward.cells == 0);
    CHECK(rep.backward.cells == 0);
    CHECK(rep.pushes() == 0);
}

TEST_CASE("distances of the standing examples land within tolerance") {
    const ClosedCurve sq = testutil::unit_square();
    CHECK(std::fabs(distance(sq, sq, 1e-6).value) <= 1e-6);

    const auto pc = distance(testutil::point_curve(1), testutil::square_corners(), 1e-6);
    CHECK(std::fabs(pc.value - kSqrt2) <= 1e-6);
    CHECK(pc.iterations >= 18);
    CHECK(pc.iterations <= 200);

    const auto sh = distance(sq, testutil::shifted_square(0.5, 0.0), 1e-6);
    CHECK(std::fabs(sh.value - 0.5) <= 1e-6);

    // Fully degenerate input: both curves are a single repeated point.
    const auto zero = distance(testutil::point_curve(3), testutil::point_curve(2), 1e-6);
    CHECK(zero.value == 0.0);
    CHECK(zero.iterations == 0);

    // Against a point, the matching must visit the farthest curve point.
    const auto far = distance(sq, testutil::point_curve(1), 1e-6);
    CHECK(std::fabs(far.value - kSqrt2) <= 1e-6);
}

TEST_CASE("a yes at some tolerance stays a yes at any larger one") {
    SplitMix64 rng(1201);
    for (int inst = 0; inst < 60; ++inst) {
        const ClosedCurve x = testutil::random_curve(2 + inst % 6, rng);
        const ClosedCurve y = testutil::random_curve(2 + (inst * 3) % 7, rng);
        const double eps = 1.0009 * testutil::median_cross_distance(x, y);
        if (decide(x, y, eps).answer) {
            CHECK(decide(x, y, 1.1 * eps).answer);
            CHECK(decide(x, y, 2.0 * eps).answer);
            CHECK(decide(x, y, 10.0 * eps).answer);
        } else {
            CHECK(!decide(x, y, 0.9 * eps).answer);
        }
    }
}

TEST_CASE("the decision does not care which curve comes first") {
    SplitMix64 rng(1303);
    for (int inst = 0; inst < 40; ++inst) {
        const ClosedCurve x = testutil::random_curve(2 + inst % 5, rng);
        const ClosedCurve y = testutil::random_curve(2 + (inst * 5) % 6, rng);
        const double eps = 1.0009 * testutil::median_cross_distance(x, y);
        CHECK(decide(x, y, eps).answer == decide(y, x, eps).answer);
    }
}

TEST_CASE("relabeling the start vertex moves the distance by at most the tolerance") {
    SplitMix64 rng(1409);
    for (int inst = 0; inst < 8; ++inst) {
        const ClosedCurve x = testutil::random_curve(3 + inst % 4, rng);
        const ClosedCurve y = testutil::random_curve(3 + (inst * 3) % 5, rng);
        const double base = distance(x, y, 1e-6).value;
        for (std::size_t r = 1; r < x.size(); ++r)
            CHECK(std::fabs(distance(testutil::relabel(x, r), y, 1e-6).value - base) <= 2e-6);
        for (std::size_t r = 1; r < y.size(); ++r)
            CHECK(std::fabs(distance(x, testutil::relabel(y, r), 1e-6).value - base) <= 2e-6);
    }
}

TEST_CASE("moving both curves rigidly leaves the decision boundary in place") {
    SplitMix64 rng(1511);
    for (int inst = 0; inst < 10; ++inst) {
        const ClosedCurve x = testutil::random_curve(3 + inst % 4, rng);
        const ClosedCurve y = testutil::random_curve(3 + (inst * 7) % 4, rng);
        const double d = distance(x, y, 1e-6).value;
        if (d < 1e-3) continue;  // no room for a two-sided margin
        const double ang = rng.uniform(0, 6.28), tx = rng.uniform(-5, 5), ty = rng.uniform(-5, 5);
        const ClosedCurve xm = testutil::rigid_motion(x, ang, tx, ty);
        const ClosedCurve ym = testutil::rigid_motion(y, ang, tx, ty);
        CHECK(decide(xm, ym, 1.05 * d).answer);
        CHECK(!decide(xm, ym, 0.95 * d).answer);
    }
}

TEST_CASE("witnesses reported on random instances are honest") {
    SplitMix64 rng(1613);
    int positives = 0;
    for (int inst = 0; inst < 40; ++inst) {
        const ClosedCurve x = testutil::random_curve(2 + inst % 6, rng);
        const ClosedCurve y = testutil::random_curve(2 + (inst * 3) % 6, rng);
        const double d = distance(x, y, 1e-6).value;
        const double eps = 1.02 * d + 1e-5;
        const DecisionReport rep = decide(x, y, eps);
        REQUIRE(rep.answer);
        CHECK(witness_ok(x, y, eps, rep));
        ++positives;
    }
    CHECK(positives == 40);
}

TEST_CASE("distance stays between the vertex lower bound and the pairwise upper bound") {
    SplitMix64 rng(1709);
    for (int inst = 0; inst < 25; ++inst) {
        const ClosedCurve x = testutil::random_curve(3 + inst % 5, rng);
        const ClosedCurve y = testutil::random_curve(3 + (inst * 5) % 5, rng);
        const double d = distance(x, y, 1e-6).value;
        CHECK(d <= eps_upper_bound(x, y));

        // Every vertex of one curve is matched within d of the other curve,
        // and a curve point is within half an edge of some vertex.
        double half_edge_y = 0.0, bound = 0.0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double len = std::sqrt(cfrechet::sq_dist(
                y.vertex(j), y.vertex((j + 1) % y.size())));
            half_edge_y = std::max(half_edge_y, 0.5 * len);
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < y.size(); ++j)
                nearest = std::min(nearest,
                                   std::sqrt(cfrechet::sq_dist(x.vertex(i), y.vertex(j))));
            bound = std::max(bound, nearest - half_edge_y);
        }
        CHECK(d >= bound - 1e-6);
    }
}

TEST_CASE("serial and parallel kernels give one and the same report") {
    SplitMix64 rng(1811);
    for (int inst = 0; inst < 10; ++inst) {
        const std::size_t m = 5 + 7 * std::size_t(inst), n = 4 + 5 * std::size_t(inst);
        const ClosedCurve x = testutil::random_curve(m, rng);
        const ClosedCurve y = testutil::random_curve(n, rng);
        const double eps = 1.0009 * testutil::median_cross_distance(x, y);
        const DecisionReport par = decide(x, y, eps, DecideOptions{true});
        const DecisionReport ser = decide(x, y, eps, DecideOptions{false});
        CHECK(par.answer == ser.answer);
        CHECK(par.witness_u == ser.witness_u);
        CHECK(par.pushes() == ser.pushes());
        CHECK(par.pops() == ser.pops());
        if (par.forward.cells != 0) {
            CHECK(par.forward.cells == 2 * m * n);
            CHECK(par.backward.cells == 2 * m * n);
        }
    }
}

TEST_CASE("bad inputs are rejected up front") {
    const ClosedCurve sq = testutil::unit_square();
    const ClosedCurve line3(3, {0.0, 0.0, 0.0});
    CHECK_THROWS_AS(decide(sq, line3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(decide(sq, sq, -0.5), std::domain_error);
    CHECK_THROWS_AS(distance(sq, sq, 0.0), std::domain_error);
    CHECK_THROWS_AS(distance(sq, sq, -1.0), std::domain_error);
}

#include "cfrechet/reach_pass.hpp"

#include <stdexcept>

namespace cfrechet {

void ReachDeque::push_low(ReachTriple t) {
    assert(t.beg <= t.end);
    assert(q_.empty() || t.end <= q_.front().beg);
    q_.push_front(t);
    ++pushes_;
    note_size();
}

void ReachDeque::push_high(ReachTriple t) {
    assert(t.beg <= t.end);
    assert(q_.empty() || q_.back().end <= t.beg);
    q_.push_back(t);
    ++pushes_;
    note_size();
}

void ReachDeque::cut_low(double x) {
    while (!q_.empty()) {
        const ReachTriple& f = q_.front();
        const bool below = f.end < x;
        // A triple ending exactly at x is owned by its successor in forward
        // mode whenever the successor starts there; drop the empty leftover.
        const bool shadowed = kind_ == Kind::forward && f.end == x && q_.size() > 1 &&
                              q_[1].beg <= x;
        if (!below && !shadowed) break;
        q_.pop_front();
        ++pops_;
    }
    if (!q_.empty() && q_.front().beg < x) {
        ReachTriple& f = q_.front();
        f.beg = x;  // identity/constant origin survives a low-side trim
        ++pushes_;
    }
}

void ReachDeque::cut_high(double x) {
    while (!q_.empty()) {
        const ReachTriple& b = q_.back();
        const bool above = b.beg > x;
        const bool shadowed = kind_ == Kind::backward && b.beg == x && q_.size() > 1 &&
                              q_[q_.size() - 2].end >= x;
        if (!above && !shadowed) break;
        q_.pop_back();
        ++pops_;
    }
    if (!q_.empty() && q_.back().end > x) {
        ReachTriple& b = q_.back();
        if (kind_ == Kind::forward && b.identity()) b.origin = x;
        b.end = x;
        ++pushes_;
    }
}

double ReachDeque::read_high_origin() {
    assert(!q_.empty());
    ++pops_;
    ++pushes_;
    return q_.back().origin;  // for an identity triple origin == end == span hi
}

double ReachDeque::read_low_origin() {
    assert(!q_.empty());
    ++pops_;
    ++pushes_;
    return q_.front().origin;
}

void ReachDeque::validate() const {
    const auto fail = [](const char* what) { throw std::logic_error(what); };
    for (std::size_t t = 0; t < q_.size(); ++t) {
        if (!(q_[t].beg <= q_[t].end)) fail("reach deque: inverted triple");
        if (t + 1 < q_.size()) {
            if (!(q_[t].end <= q_[t + 1].beg)) fail("reach deque: triples out of order");
            if (kind_ == Kind::forward) {
                // Effective value at the right end of t vs the left end of t+1.
                const double lhs = q_[t].identity() ? q_[t].end : q_[t].origin;
                const double rhs = q_[t + 1].identity() ? q_[t + 1].beg : q_[t + 1].origin;
                if (!(lhs <= rhs)) fail("reach deque: origins not monotone");
            } else if (!(q_[t].origin >= q_[t + 1].origin)) {
                fail("reach deque: origins not monotone");
            }
        }
        if (kind_ == Kind::forward && !q_[t].identity() && !(q_[t].origin <= q_[t].beg))
            fail("reach deque: constant origin exceeds its interval");
    }
}

ForwardPassResult forward_pass(const EdgeIntervalGrid& down) {
    const std::size_t w = down.width(), n = down.n();
    std::vector<ReachDeque> q(w + 1, ReachDeque(ReachDeque::Kind::forward));
    ForwardPassResult out;
    out.top.resize(w + 1);

    // The bottom side maps to itself: one identity triple per free interval.
    for (std::size_t i = 1; i <= w; ++i) {
        const Interval b = down.horiz(i, 0);
        if (!b.is_empty()) q[i].seed({b.lo(), b.hi(), b.hi()});
    }

    for (std::size_t j = 1; j <= n; ++j) {
        // Origin value on the vertical border left of the current cell;
        // engaged exactly when that border's reach interval is non-empty.
        std::optional<double> rstar;
        if (!down.vert(0, j).is_empty()) rstar = 0.0;

        for (std::size_t i = 1; i <= w; ++i) {
            ++out.counters.cells;
            const Interval below = down.horiz(i, j - 1);
            const Interval top = down.horiz(i, j);
            const bool from_left = !down.vert(i - 1, j).is_empty();
            assert(from_left == rstar.has_value());
            ReachDeque& dq = q[i];

            std::optional<double> carried;  // origin on the cell's right border
            if (below.is_empty()) {
                assert(dq.empty());
                if (from_left) {
                    // Entry only from the left: constant origin over the top.
                    if (!top.is_empty()) dq.push_high({top.lo(), top.hi(), *rstar});
                    carried = rstar;
                } else {
                    assert(top.is_empty());
                }
            } else {
                assert(!dq.empty());
                assert(dq.low().beg == below.lo() && dq.high().end == below.hi());
                // Read before the low-side ops: a cut may drop this triple.
                const double rb = dq.read_high_origin();
                if (top.is_empty()) {
                    dq.clear();
                } else {
                    const double c = top.lo(), d = top.hi();
                    if (from_left && c < below.lo())
                        dq.push_low({c, below.lo(), *rstar});
                    else
                        dq.cut_low(c);
                    if (dq.empty())  // the old span ended left of c
                        dq.push_high({c, d, rb});
                    else if (below.hi() < d)
                        dq.push_high({below.hi(), d, rb});
                    else
                        dq.cut_high(d);
                    assert(dq.low().beg == c && dq.high().end == d);
                    assert(dq.size() <= 2 * j + 1);
                }
                carried = rb;
            }

            if (!down.vert(i, j).is_empty()) {
                assert(carried.has_value());
                rstar = carried;
            } else {
                rstar = std::nullopt;
            }
        }
    }

    for (std::size_t i = 1; i <= w; ++i) {
        out.top[i].assign(q[i].begin(), q[i].end());
        out.counters.pushes += q[i].pushes();
        out.counters.pops += q[i].pops();
        if (q[i].max_size() > out.counters.max_deque) out.counters.max_deque = q[i].max_size();
    }
    return out;
}

BackwardPassResult backward_pass(const EdgeIntervalGrid& up) {
    const std::size_t w = up.width(), n = up.n();
    std::vector<ReachDeque> q(n + 1, ReachDeque(ReachDeque::Kind::backward));
    BackwardPassResult out;
    out.bottom.resize(w + 1);

    // Right side: constant origin 2m over each seeded reach interval.
    for (std::size_t j = 1; j <= n; ++j) {
        const Interval e = up.vert(w, j);
        if (!e.is_empty()) q[j].seed({e.lo(), e.hi(), static_cast<double>(w)});
    }

    // Top side: the origin of u is the right endpoint of the contiguous free
    // run containing it (horizontal travel along the top line only).
    std::vector<double> top_run(w + 2, 0.0);
    std::vector<char> top_has(w + 2, 0);
    for (std::size_t i = w; i >= 1; --i) {
        const Interval e = up.horiz(i, n);
        if (e.is_empty()) continue;
        const bool joins_right = e.hi() == static_cast<double>(i) && i < w && top_has[i + 1] &&
                                 up.horiz(i + 1, n).lo() == static_cast<double>(i);
        top_run[i] = joins_right ? top_run[i + 1] : e.hi();
        top_has[i] = 1;
    }

    for (std::size_t i = w; i >= 1; --i) {
        std::optional<double> rstar;  // origin on the horizontal border above
        if (top_has[i]) rstar = top_run[i];

        for (std::size_t j = n; j >= 1; --j) {
            ++out.counters.cells;
            const Interval right = up.vert(i, j);
            const Interval left = up.vert(i - 1, j);
            const bool from_top = !up.horiz(i, j).is_empty();
            assert(from_top == rstar.has_value());
            ReachDeque& dq = q[j];

            std::optional<double> carried;
            if (right.is_empty()) {
                assert(dq.empty());
                if (from_top) {
                    if (!left.is_empty()) dq.push_low({left.lo(), left.hi(), *rstar});
                    carried = rstar;
                } else {
                    assert(left.is_empty());
                }
            } else {
                assert(!dq.empty());
                assert(dq.low().beg == right.lo() && dq.high().end == right.hi());
                const double ra = dq.read_low_origin();
                if (left.is_empty()) {
                    dq.clear();
                } else {
                    const double c = left.lo(), d = left.hi();
                    if (from_top && right.hi() < d)
                        dq.push_high({right.hi(), d, *rstar});
                    else
                        dq.cut_high(d);
                    if (dq.empty())  // the old span ended above d
                        dq.push_low({c, d, ra});
                    else if (c < right.lo())
                        dq.push_low({c, right.lo(), ra});
                    else
                        dq.cut_low(c);
                    assert(dq.low().beg == c && dq.high().end == d);
                    assert(dq.size() <= 2 * (w - i + 1) + 1);
                }
                carried = ra;
            }

            if (!up.horiz(i, j - 1).is_empty()) {
                assert(carried.has_value());
                rstar = carried;
            } else {
                rstar = std::nullopt;
            }
        }
        out.bottom[i] = rstar;
    }

    for (std::size_t j = 1; j <= n; ++j) {
        out.counters.pushes += q[j].pushes();
        out.counters.pops += q[j].pops();
        if (q[j].max_size() > out.counters.max_deque) out.counters.max_deque = q[j].max_size();
    }
    return out;
}

}  // namespace cfrechet

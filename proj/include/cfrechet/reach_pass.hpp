#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "cfrechet/freespace.hpp"

namespace cfrechet {

// One piece of a piecewise origin function over a border interval [beg, end].
// In the forward pass the function maps u on a horizontal border to the
// rightmost bottom-side start that reaches it; origin == end encodes the
// identity piece (every point is its own origin). In the backward pass beg and
// end are v coordinates and origin is always a constant u coordinate.
struct ReachTriple {
    double beg, end, origin;

    bool identity() const { return origin == end; }
    friend bool operator==(const ReachTriple&, const ReachTriple&) = default;
};

// Deque of sorted, contiguous triples spanning exactly one reach interval.
// Where two triples touch, the owner of the shared point is the high-side
// triple in forward mode and the low-side triple in backward mode; cuts drop
// or keep exact-boundary leftovers accordingly so the span stays exact even
// when a cut lands on a triple boundary or shrinks the span to one point.
class ReachDeque {
public:
    enum class Kind { forward, backward };

    explicit ReachDeque(Kind kind) : kind_(kind) {}

    bool empty() const { return q_.empty(); }
    std::size_t size() const { return q_.size(); }
    const ReachTriple& low() const { return q_.front(); }
    const ReachTriple& high() const { return q_.back(); }

    auto begin() const { return q_.begin(); }
    auto end() const { return q_.end(); }

    // Initial content; not a counted push (setup is outside the step budget).
    void seed(ReachTriple t) {
        assert(q_.empty());
        q_.push_back(t);
        note_size();
    }

    void push_low(ReachTriple t);
    void push_high(ReachTriple t);

    // Restrict the span to [x, +inf) / (-inf, x]. A truncated triple counts
    // as one push, mirroring the remove-and-reinsert accounting.
    void cut_low(double x);
    void cut_high(double x);

    // Value at the span's high (forward) or low (backward) endpoint. Counted
    // as one pop plus one push: the triple is read, removed and returned.
    double read_high_origin();
    double read_low_origin();

    void clear() {
        pops_ += q_.size();
        q_.clear();
    }

    std::uint64_t pushes() const { return pushes_; }
    std::uint64_t pops() const { return pops_; }
    std::size_t max_size() const { return max_size_; }

    // Full structural scan; meant for tests, O(size).
    void validate() const;

private:
    void note_size() {
        if (q_.size() > max_size_) max_size_ = q_.size();
    }

    std::deque<ReachTriple> q_;
    Kind kind_;
    std::uint64_t pushes_ = 0, pops_ = 0;
    std::size_t max_size_ = 0;
};

struct PassCounters {
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
    std::uint64_t cells = 0;
    std::size_t max_deque = 0;
};

// Forward pass output: for each column i in 1..2m, the partition of the top
// border reach interval into origin pieces, plus instrumentation.
struct ForwardPassResult {
    std::vector<std::vector<ReachTriple>> top;  // index i, [0] unused
    PassCounters counters;
};

// Backward pass output: for each column i in 1..2m whose bottom border has a
// non-empty up-reach interval, the constant top-side origin over it.
struct BackwardPassResult {
    std::vector<std::optional<double>> bottom;  // index i, [0] unused
    PassCounters counters;
};

ForwardPassResult forward_pass(const EdgeIntervalGrid& down);
BackwardPassResult backward_pass(const EdgeIntervalGrid& up);

}  // namespace cfrechet

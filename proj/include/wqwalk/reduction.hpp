// reduction.hpp — k identically-evolving unit loops vs one loop of weight k
//
// The dense-arc graph type stores at most one edge per vertex pair, so the
// unreduced walk gets its own arc space here: each vertex block carries k
// extra unit-weight loop slots.  Slots sit exactly where the (v,v) loop arc
// sorts in the reduced graph, so for k = 1 both walks run the same arithmetic
// in the same order and the deviation is exactly zero.
#pragma once

#include "wqwalk/graph.hpp"
#include "wqwalk/types.hpp"
#include "wqwalk/walk.hpp"

namespace wqwalk {

/// Coined walk on an unweighted, loopless base graph with k parallel
/// unit-weight self-loop slots per vertex (k = 0 leaves the base untouched).
class ParallelLoopWalk {
public:
    /// multiplicity must be a non-negative integer value; the base must be
    /// loopless with all weights exactly 1.
    ParallelLoopWalk(WeightedGraph base, double multiplicity);

    const WeightedGraph& base() const noexcept { return base_; }
    int multiplicity() const noexcept { return k_; }
    std::size_t arc_count() const noexcept {
        return base_.arc_count() + static_cast<std::size_t>(k_) * base_.vertex_count();
    }

    std::size_t block_begin(Vertex v) const;
    std::size_t block_end(Vertex v) const;
    /// First of the k loop-slot indices inside the block of v.
    std::size_t slot_begin(Vertex v) const;

    /// Unweighted Grover coin: inversion about the plain block mean.
    ArcState apply_coin(const ArcState& state) const;
    /// Slots are loop arcs: fixed under both shifts.
    ArcState apply_shift(const ArcState& state, ShiftKind kind) const;
    /// Negates the whole block of the marked vertex, slots included.
    ArcState apply_oracle(const ArcState& state, Vertex marked) const;

    /// Base graph plus one weight-k loop per vertex (the base itself if k=0);
    /// line bases stay line graphs.
    WeightedGraph reduced_graph() const;

    /// Collapses each slot group to one loop amplitude mean * sqrt(k).
    /// Requires the group amplitudes equal to within 1e-10.
    ArcState project(const ArcState& full) const;

    /// Spreads each loop amplitude back over k slots as amp / sqrt(k).
    ArcState lift(const ArcState& reduced) const;

private:
    std::size_t expanded_index(std::size_t base_arc) const;
    std::size_t reduced_index(Vertex v, std::size_t block_pos) const;

    WeightedGraph base_;
    int k_ = 0;
    std::vector<std::size_t> offsets_;  // expanded block starts, size n+1
    std::vector<std::size_t> split_;    // per vertex: #targets below v (slot insertion point)
};

ParallelLoopWalk build_unreduced_lackadaisical(const WeightedGraph& base, double multiplicity);

enum class ReductionDrive {
    LineMoving,      // coin then moving shift; needs a line base
    CompleteSearch,  // oracle, coin, flip-flop shift
    PlainFlipFlop,   // coin then flip-flop shift
};

struct ReductionReport {
    int multiplicity = 0;
    int steps = 0;
    double tol = 0.0;
    double max_dev = 0.0;
    bool pass = false;
};

/// Runs the unreduced (k slot) and reduced (weight-k loop) walks side by side
/// from matching initial states and reports the worst per-step distance of
/// project(full) from reduced.  LineMoving starts from the usual localized
/// left/right superposition at the center; the other drives start uniform.
ReductionReport verify_reduction(const WeightedGraph& base, double multiplicity, int steps,
                                 double tol, ReductionDrive drive, Vertex marked = 0);

}  // namespace wqwalk

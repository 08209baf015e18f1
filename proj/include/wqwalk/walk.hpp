// walk.hpp — one step of the coined walk: Grover diffusion coin, shifts
#pragma once

#include <cstdint>
#include <vector>

#include "wqwalk/graph.hpp"
#include "wqwalk/types.hpp"

namespace wqwalk {

enum class ShiftKind {
    FlipFlop,  // (v,u) -> (u,v): hop and turn around
    Moving,    // line only: hop and keep pointing the same way
};

/// |s_v>: entry for arc (v,u) is sqrt(w_vu / vertex_weight_sum(v)).
/// Returned in block order (targets ascending); always a unit vector.
std::vector<double> local_superposition(const WeightedGraph& g, Vertex v);

/// The per-vertex inversion center m_v = sum(sqrt(w_vu) a_vu) / sum(w_vu);
/// reduces to the arithmetic mean of the block when all weights are 1.
std::vector<Complex> vertex_means(const WeightedGraph& g, const ArcState& state);

/// Per-vertex reflection 2|s_v><s_v| - I applied in O(arcs): every amplitude
/// a_vu becomes 2*m_v*sqrt(w_vu) - a_vu.  No coin matrix is ever materialized.
ArcState apply_coin(const WeightedGraph& g, const ArcState& state);

ArcState apply_shift(const WeightedGraph& g, const ArcState& state, ShiftKind kind);

/// Permutation p with out[p[i]] = in[i] describing the shift.  Loop arcs are
/// fixed points under both kinds.  The moving shift exists only on lines; at
/// the two ends it turns around, which stays unitary and is never reached by
/// simulations that obey the half_width >= steps + 1 rule.
std::vector<std::uint32_t> shift_permutation(const WeightedGraph& g, ShiftKind kind);

/// One step U = S*C.
ArcState step(const WeightedGraph& g, const ArcState& state, ShiftKind kind);

/// (S*C)^steps.  On line graphs, throws BoundaryContamination as soon as any
/// amplitude at either end vertex exceeds 1e-15, so truncation error is zero
/// rather than merely small.
ArcState evolve(const WeightedGraph& g, ArcState state, ShiftKind kind, int steps);

/// p(v) = sum of |a_vu|^2 over the block of v.
std::vector<double> vertex_probabilities(const WeightedGraph& g, const ArcState& state);

}  // namespace wqwalk

// szegedy.hpp — quantized Markov chain on the bipartite double cover
//
// The double cover is never materialized: its edge (x in X, y in Y) is
// identified with the arc (x, y) of the original graph, so EdgeState reuses
// the graph's arc indexing.
#pragma once

#include <cstdint>

#include "wqwalk/graph.hpp"
#include "wqwalk/types.hpp"
#include "wqwalk/walk.hpp"

namespace wqwalk {

/// Amplitudes over double-cover edges, indexed like the arcs of the graph.
using EdgeState = ArcState;

/// Row-stochastic transition matrix P_vu = w_vu / vertex_weight_sum(v),
/// supported exactly on the adjacency (self-loops included).
class TransitionMatrix {
public:
    explicit TransitionMatrix(const WeightedGraph& g);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t entry_count() const noexcept { return prob_.size(); }

    /// Entry for the graph arc with this index.
    double prob(std::size_t arc) const { return prob_[arc]; }
    double sqrt_prob(std::size_t arc) const { return sqrt_prob_[arc]; }

    /// Dense accessor; zero off the adjacency.
    double at(Vertex v, Vertex u) const;

    double row_sum(Vertex v) const;

private:
    Vertex n_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> to_;
    std::vector<double> prob_;
    std::vector<double> sqrt_prob_;
};

TransitionMatrix transition_matrix(const WeightedGraph& g);

/// R1 = 2 sum_x |phi_x><phi_x| - I with phi_x supported on the block of x,
/// entries sqrt(P_xy).  Applied blockwise in O(arcs).
EdgeState apply_R1(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state);

/// R2 = 2 sum_y |psi_y><psi_y| - I with psi_y over arcs (x, y), entries
/// sqrt(P_yx); the y-blocks are reached through reverse arcs.
EdgeState apply_R2(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state);

/// W = R2 * R1.
EdgeState apply_W(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state);

EdgeState apply_R1(const WeightedGraph& g, const EdgeState& state);
EdgeState apply_R2(const WeightedGraph& g, const EdgeState& state);
EdgeState apply_W(const WeightedGraph& g, const EdgeState& state);

struct EquivalenceReport {
    int trials = 0;
    double tol = 0.0;
    double max_dev_c_r1 = 0.0;
    double max_dev_scs_r2 = 0.0;
    double max_dev_u2_w = 0.0;
    bool pass = false;
};

/// Checks C = R1, SCS = R2 and U^2 = W (flip-flop shift) on seeded random
/// states under the arc/edge identification; reports worst deviations.
EquivalenceReport verify_equivalence(const WeightedGraph& g, int trials, double tol,
                                     std::uint64_t seed);

/// max |U^2 state - W state| for the given shift; with the moving shift this
/// witnesses that the walk is a genuinely different one.
double u2_vs_w_deviation(const WeightedGraph& g, const EdgeState& state, ShiftKind kind);

}  // namespace wqwalk

#include "wqwalk/szegedy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace wqwalk {

namespace {

void require_dims(const WeightedGraph& g, const EdgeState& state) {
    if (state.size() != g.arc_count())
        throw DimensionMismatch("edge state has " + std::to_string(state.size()) +
                                " amplitudes, expected " + std::to_string(g.arc_count()));
}

void require_walkable(const WeightedGraph& g) {
    if (g.has_isolated_vertex())
        throw IsolatedVertex("transition probabilities need positive weight sum everywhere");
}

}  // namespace

TransitionMatrix::TransitionMatrix(const WeightedGraph& g) : n_(g.vertex_count()) {
    require_walkable(g);
    offsets_.resize(n_ + 1);
    to_.resize(g.arc_count());
    prob_.resize(g.arc_count());
    sqrt_prob_.resize(g.arc_count());
    for (Vertex v = 0; v <= n_; ++v)
        offsets_[v] = (v < n_) ? g.block_begin(v) : g.arc_count();
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
        to_[a] = g.arc_to(a);
        prob_[a] = g.arc_weight(a) / g.vertex_weight_sum(g.arc_from(a));
        sqrt_prob_[a] = std::sqrt(prob_[a]);
    }
}

double TransitionMatrix::at(Vertex v, Vertex u) const {
    if (v >= n_ || u >= n_)
        throw VertexOutOfRange("transition matrix index out of range");
    const auto first = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    const auto it = std::lower_bound(first, last, u);
    if (it == last || *it != u) return 0.0;
    return prob_[static_cast<std::size_t>(it - to_.begin())];
}

double TransitionMatrix::row_sum(Vertex v) const {
    if (v >= n_) throw VertexOutOfRange("transition matrix row out of range");
    double acc = 0.0;
    for (std::size_t a = offsets_[v]; a < offsets_[v + 1]; ++a) acc += prob_[a];
    return acc;
}

TransitionMatrix transition_matrix(const WeightedGraph& g) { return TransitionMatrix(g); }

EdgeState apply_R1(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state) {
    require_dims(g, state);
    EdgeState out(state.size());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const std::size_t lo = g.block_begin(x);
        const std::size_t hi = g.block_end(x);
        Complex overlap{0.0, 0.0};
        for (std::size_t a = lo; a < hi; ++a) overlap += p.sqrt_prob(a) * state[a];
        for (std::size_t a = lo; a < hi; ++a)
            out[a] = 2.0 * p.sqrt_prob(a) * overlap - state[a];
    }
    return out;
}

EdgeState apply_R2(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state) {
    require_dims(g, state);
    EdgeState out(state.size());
    // psi_y lives on arcs (x, y); arc (y, x) is its reverse, so the block of y
    // enumerates exactly the support of psi_y.
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
        const std::size_t lo = g.block_begin(y);
        const std::size_t hi = g.block_end(y);
        Complex overlap{0.0, 0.0};
        for (std::size_t a = lo; a < hi; ++a)
            overlap += p.sqrt_prob(a) * state[g.reverse_arc(a)];
        for (std::size_t a = lo; a < hi; ++a) {
            const std::size_t xy = g.reverse_arc(a);
            out[xy] = 2.0 * p.sqrt_prob(a) * overlap - state[xy];
        }
    }
    return out;
}

EdgeState apply_W(const WeightedGraph& g, const TransitionMatrix& p, const EdgeState& state) {
    return apply_R2(g, p, apply_R1(g, p, state));
}

EdgeState apply_R1(const WeightedGraph& g, const EdgeState& state) {
    return apply_R1(g, TransitionMatrix(g), state);
}
EdgeState apply_R2(const WeightedGraph& g, const EdgeState& state) {
    return apply_R2(g, TransitionMatrix(g), state);
}
EdgeState apply_W(const WeightedGraph& g, const EdgeState& state) {
    return apply_W(g, TransitionMatrix(g), state);
}

EquivalenceReport verify_equivalence(const WeightedGraph& g, int trials, double tol,
                                     std::uint64_t seed) {
    require_walkable(g);
    if (trials < 1) throw Error("verify_equivalence needs at least one trial");
    const TransitionMatrix p(g);
    std::mt19937_64 rng(seed);
    EquivalenceReport rep;
    rep.trials = trials;
    rep.tol = tol;
    for (int trial = 0; trial < trials; ++trial) {
        const ArcState s = random_state(g.arc_count(), rng);
        rep.max_dev_c_r1 =
            std::max(rep.max_dev_c_r1, max_abs_diff(apply_coin(g, s), apply_R1(g, p, s)));
        const ArcState scs = apply_shift(
            g, apply_coin(g, apply_shift(g, s, ShiftKind::FlipFlop)), ShiftKind::FlipFlop);
        rep.max_dev_scs_r2 = std::max(rep.max_dev_scs_r2, max_abs_diff(scs, apply_R2(g, p, s)));
        const ArcState u2 = step(g, step(g, s, ShiftKind::FlipFlop), ShiftKind::FlipFlop);
        rep.max_dev_u2_w = std::max(rep.max_dev_u2_w, max_abs_diff(u2, apply_W(g, p, s)));
    }
    rep.pass = rep.max_dev_c_r1 < tol && rep.max_dev_scs_r2 < tol && rep.max_dev_u2_w < tol;
    return rep;
}

double u2_vs_w_deviation(const WeightedGraph& g, const EdgeState& state, ShiftKind kind) {
    require_dims(g, state);
    const ArcState u2 = step(g, step(g, state, kind), kind);
    return max_abs_diff(u2, apply_W(g, state));
}

}  // namespace wqwalk

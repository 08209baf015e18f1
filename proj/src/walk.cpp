#include "wqwalk/walk.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace wqwalk {

namespace {

constexpr double kBoundaryTol = 1e-15;

void require_dims(const WeightedGraph& g, const ArcState& state) {
    if (state.size() != g.arc_count())
        throw DimensionMismatch("state has " + std::to_string(state.size()) + " amplitudes, graph has " +
                                std::to_string(g.arc_count()) + " arcs");
}

void require_walkable(const WeightedGraph& g) {
    if (g.has_isolated_vertex())
        throw IsolatedVertex("walk operators need positive weight sum at every vertex");
}

void coin_in_place(const WeightedGraph& g, ArcState& state) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t lo = g.block_begin(v);
        const std::size_t hi = g.block_end(v);
        Complex acc{0.0, 0.0};
        for (std::size_t a = lo; a < hi; ++a) acc += g.arc_sqrt_weight(a) * state[a];
        const Complex twice_mean = 2.0 * acc / g.vertex_weight_sum(v);
        for (std::size_t a = lo; a < hi; ++a)
            state[a] = twice_mean * g.arc_sqrt_weight(a) - state[a];
    }
}

// max |amplitude| over the arcs of the two end vertices of a line
double line_end_amplitude(const WeightedGraph& g, const ArcState& state) {
    double peak = 0.0;
    const Vertex ends[2] = {0, static_cast<Vertex>(g.vertex_count() - 1)};
    for (Vertex v : ends)
        for (std::size_t a = g.block_begin(v); a < g.block_end(v); ++a)
            peak = std::max(peak, std::abs(state[a]));
    return peak;
}

}  // namespace

std::vector<double> local_superposition(const WeightedGraph& g, Vertex v) {
    const std::size_t lo = g.block_begin(v);
    const std::size_t hi = g.block_end(v);
    if (lo == hi) throw IsolatedVertex("vertex " + std::to_string(v) + " has no incident edges");
    const double inv_root = 1.0 / std::sqrt(g.vertex_weight_sum(v));
    std::vector<double> s(hi - lo);
    for (std::size_t a = lo; a < hi; ++a) s[a - lo] = g.arc_sqrt_weight(a) * inv_root;
    return s;
}

std::vector<Complex> vertex_means(const WeightedGraph& g, const ArcState& state) {
    require_dims(g, state);
    require_walkable(g);
    std::vector<Complex> means(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Complex acc{0.0, 0.0};
        for (std::size_t a = g.block_begin(v); a < g.block_end(v); ++a)
            acc += g.arc_sqrt_weight(a) * state[a];
        means[v] = acc / g.vertex_weight_sum(v);
    }
    return means;
}

ArcState apply_coin(const WeightedGraph& g, const ArcState& state) {
    require_dims(g, state);
    require_walkable(g);
    ArcState out = state;
    coin_in_place(g, out);
    return out;
}

std::vector<std::uint32_t> shift_permutation(const WeightedGraph& g, ShiftKind kind) {
    require_walkable(g);
    std::vector<std::uint32_t> perm(g.arc_count());
    if (kind == ShiftKind::FlipFlop) {
        for (std::size_t a = 0; a < g.arc_count(); ++a)
            perm[a] = static_cast<std::uint32_t>(g.reverse_arc(a));
        return perm;
    }
    if (!g.is_line())
        throw MovingShiftUnsupported("the moving shift is defined only on line graphs");
    const Vertex last = g.vertex_count() - 1;
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
        const Vertex v = g.arc_from(a);
        const Vertex u = g.arc_to(a);
        std::size_t target;
        if (u == v) {
            target = a;
        } else if (u == v + 1) {
            target = (u == last) ? g.arc_index(u, v) : g.arc_index(u, u + 1);
        } else {  // u == v - 1
            target = (u == 0) ? g.arc_index(u, v) : g.arc_index(u, u - 1);
        }
        perm[a] = static_cast<std::uint32_t>(target);
    }
    return perm;
}

ArcState apply_shift(const WeightedGraph& g, const ArcState& state, ShiftKind kind) {
    require_dims(g, state);
    const auto perm = shift_permutation(g, kind);
    ArcState out(state.size());
    for (std::size_t a = 0; a < state.size(); ++a) out[perm[a]] = state[a];
    return out;
}

ArcState step(const WeightedGraph& g, const ArcState& state, ShiftKind kind) {
    return apply_shift(g, apply_coin(g, state), kind);
}

ArcState evolve(const WeightedGraph& g, ArcState state, ShiftKind kind, int steps) {
    require_dims(g, state);
    require_walkable(g);
    if (steps < 0) throw Error("negative step count");
    const auto perm = shift_permutation(g, kind);
    const bool guard = g.is_line();
    if (guard && line_end_amplitude(g, state) > kBoundaryTol)
        throw BoundaryContamination("initial state already touches a line end vertex");
    ArcState scratch(state.size());
    for (int t = 0; t < steps; ++t) {
        coin_in_place(g, state);
        for (std::size_t a = 0; a < state.size(); ++a) scratch[perm[a]] = state[a];
        state.swap(scratch);
        if (guard && line_end_amplitude(g, state) > kBoundaryTol)
            throw BoundaryContamination("amplitude reached a line end vertex at step " +
                                        std::to_string(t + 1) + "; enlarge half_width");
    }
    return state;
}

std::vector<double> vertex_probabilities(const WeightedGraph& g, const ArcState& state) {
    require_dims(g, state);
    std::vector<double> p(g.vertex_count(), 0.0);
    for (std::size_t a = 0; a < state.size(); ++a) p[g.arc_from(a)] += std::norm(state[a]);
    return p;
}

}  // namespace wqwalk

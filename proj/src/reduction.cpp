#include "wqwalk/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wqwalk/search.hpp"

namespace wqwalk {

namespace {

constexpr double kGroupUniformTol = 1e-10;

void require_dims(std::size_t have, std::size_t want, const char* what) {
    if (have != want)
        throw DimensionMismatch(std::string(what) + ": got " + std::to_string(have) +
                                " amplitudes, expected " + std::to_string(want));
}

}  // namespace

ParallelLoopWalk::ParallelLoopWalk(WeightedGraph base, double multiplicity)
    : base_(std::move(base)) {
    if (!(multiplicity >= 0.0) || multiplicity != std::floor(multiplicity) || multiplicity > 1e9)
        throw NonIntegerMultiplicity("loop multiplicity must be a small non-negative integer");
    k_ = static_cast<int>(multiplicity);
    for (std::size_t a = 0; a < base_.arc_count(); ++a) {
        if (base_.arc_from(a) == base_.arc_to(a))
            throw Error("expanded walk needs a loopless base graph");
        if (base_.arc_weight(a) != 1.0)
            throw Error("expanded walk needs a unit-weight base graph");
    }
    const Vertex n = base_.vertex_count();
    offsets_.resize(n + 1);
    split_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        offsets_[v] = base_.block_begin(v) + static_cast<std::size_t>(k_) * v;
        std::size_t below = 0;
        for (std::size_t a = base_.block_begin(v); a < base_.block_end(v); ++a)
            if (base_.arc_to(a) < v) ++below;
        split_[v] = below;
    }
    offsets_[n] = base_.arc_count() + static_cast<std::size_t>(k_) * n;
}

std::size_t ParallelLoopWalk::block_begin(Vertex v) const {
    if (v >= base_.vertex_count()) throw VertexOutOfRange("block_begin: bad vertex");
    return offsets_[v];
}

std::size_t ParallelLoopWalk::block_end(Vertex v) const {
    if (v >= base_.vertex_count()) throw VertexOutOfRange("block_end: bad vertex");
    return offsets_[v + 1];
}

std::size_t ParallelLoopWalk::slot_begin(Vertex v) const { return block_begin(v) + split_[v]; }

std::size_t ParallelLoopWalk::expanded_index(std::size_t base_arc) const {
    const Vertex v = base_.arc_from(base_arc);
    const std::size_t pos = base_arc - base_.block_begin(v);
    return offsets_[v] + (pos < split_[v] ? pos : pos + static_cast<std::size_t>(k_));
}

std::size_t ParallelLoopWalk::reduced_index(Vertex v, std::size_t block_pos) const {
    // the reduced block keeps the same target order, with the k slots fused
    // into the single loop entry at position split_[v]
    const std::size_t k = static_cast<std::size_t>(k_);
    const std::size_t loop = (k_ > 0) ? 1 : 0;
    const std::size_t reduced_begin = base_.block_begin(v) + loop * v;
    if (block_pos < split_[v]) return reduced_begin + block_pos;
    if (block_pos < split_[v] + k) return reduced_begin + split_[v];
    return reduced_begin + block_pos - k + loop;
}

ArcState ParallelLoopWalk::apply_coin(const ArcState& state) const {
    require_dims(state.size(), arc_count(), "expanded coin");
    ArcState out(state.size());
    for (Vertex v = 0; v < base_.vertex_count(); ++v) {
        const std::size_t lo = offsets_[v];
        const std::size_t hi = offsets_[v + 1];
        Complex acc{0.0, 0.0};
        for (std::size_t a = lo; a < hi; ++a) acc += state[a];
        const Complex twice_mean = 2.0 * acc / static_cast<double>(hi - lo);
        for (std::size_t a = lo; a < hi; ++a) out[a] = twice_mean - state[a];
    }
    return out;
}

ArcState ParallelLoopWalk::apply_shift(const ArcState& state, ShiftKind kind) const {
    require_dims(state.size(), arc_count(), "expanded shift");
    const auto base_perm = shift_permutation(base_, kind);
    ArcState out = state;  // slots stay in place
    for (std::size_t a = 0; a < base_.arc_count(); ++a)
        out[expanded_index(base_perm[a])] = state[expanded_index(a)];
    return out;
}

ArcState ParallelLoopWalk::apply_oracle(const ArcState& state, Vertex marked) const {
    require_dims(state.size(), arc_count(), "expanded oracle");
    if (marked >= base_.vertex_count()) throw VertexOutOfRange("oracle: bad marked vertex");
    ArcState out = state;
    for (std::size_t a = offsets_[marked]; a < offsets_[marked + 1]; ++a) out[a] = -out[a];
    return out;
}

WeightedGraph ParallelLoopWalk::reduced_graph() const {
    if (k_ == 0) return base_;
    if (base_.is_line()) return line_graph(base_.line_half_width(), static_cast<double>(k_));
    std::vector<Edge> edges;
    edges.reserve(base_.arc_count() / 2 + base_.vertex_count());
    for (std::size_t a = 0; a < base_.arc_count(); ++a)
        if (base_.arc_from(a) < base_.arc_to(a))
            edges.push_back({base_.arc_from(a), base_.arc_to(a), base_.arc_weight(a)});
    for (Vertex v = 0; v < base_.vertex_count(); ++v)
        edges.push_back({v, v, static_cast<double>(k_)});
    return WeightedGraph(base_.vertex_count(), edges);
}

ArcState ParallelLoopWalk::project(const ArcState& full) const {
    require_dims(full.size(), arc_count(), "project");
    const std::size_t k = static_cast<std::size_t>(k_);
    const std::size_t loop = (k_ > 0) ? 1 : 0;
    ArcState reduced(base_.arc_count() + loop * base_.vertex_count());
    const double root_k = std::sqrt(static_cast<double>(k_));
    for (Vertex v = 0; v < base_.vertex_count(); ++v) {
        const std::size_t lo = offsets_[v];
        const std::size_t size = offsets_[v + 1] - lo;
        for (std::size_t pos = 0; pos < size; ++pos) {
            if (pos >= split_[v] && pos < split_[v] + k) continue;
            reduced[reduced_index(v, pos)] = full[lo + pos];
        }
        if (k_ == 0) continue;
        const std::size_t slot0 = lo + split_[v];
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(full[slot0 + j] - full[slot0]) > kGroupUniformTol)
                throw NonUniformGroup("loop slots at vertex " + std::to_string(v) +
                                      " do not hold identical amplitudes");
            acc += full[slot0 + j];
        }
        reduced[reduced_index(v, split_[v])] = acc / static_cast<double>(k_) * root_k;
    }
    return reduced;
}

ArcState ParallelLoopWalk::lift(const ArcState& reduced) const {
    const std::size_t k = static_cast<std::size_t>(k_);
    const std::size_t loop = (k_ > 0) ? 1 : 0;
    require_dims(reduced.size(), base_.arc_count() + loop * base_.vertex_count(), "lift");
    ArcState full(arc_count());
    const double inv_root_k = (k_ > 0) ? 1.0 / std::sqrt(static_cast<double>(k_)) : 0.0;
    for (Vertex v = 0; v < base_.vertex_count(); ++v) {
        const std::size_t lo = offsets_[v];
        const std::size_t size = offsets_[v + 1] - lo;
        for (std::size_t pos = 0; pos < size; ++pos) {
            if (pos >= split_[v] && pos < split_[v] + k) continue;
            full[lo + pos] = reduced[reduced_index(v, pos)];
        }
        if (k_ == 0) continue;
        const Complex slot = reduced[reduced_index(v, split_[v])] * inv_root_k;
        for (std::size_t j = 0; j < k; ++j) full[lo + split_[v] + j] = slot;
    }
    return full;
}

ParallelLoopWalk build_unreduced_lackadaisical(const WeightedGraph& base, double multiplicity) {
    return ParallelLoopWalk(base, multiplicity);
}

ReductionReport verify_reduction(const WeightedGraph& base, double multiplicity, int steps,
                                 double tol, ReductionDrive drive, Vertex marked) {
    if (steps < 0) throw Error("negative step count");
    const ParallelLoopWalk walk(base, multiplicity);
    const WeightedGraph reduced_g = walk.reduced_graph();

    ArcState full, reduced;
    if (drive == ReductionDrive::LineMoving) {
        if (!base.is_line()) throw MovingShiftUnsupported("the line drive needs a line base");
        const Vertex center = base.line_half_width();
        reduced.assign(reduced_g.arc_count(), Complex{0.0, 0.0});
        reduced[reduced_g.arc_index(center, center - 1)] = Complex{1.0 / std::sqrt(2.0), 0.0};
        reduced[reduced_g.arc_index(center, center + 1)] = Complex{0.0, 1.0 / std::sqrt(2.0)};
        full = walk.lift(reduced);
    } else {
        full.assign(walk.arc_count(),
                    Complex{1.0 / std::sqrt(static_cast<double>(walk.arc_count())), 0.0});
        reduced = walk.project(full);
    }

    const ShiftKind kind =
        (drive == ReductionDrive::LineMoving) ? ShiftKind::Moving : ShiftKind::FlipFlop;
    ReductionReport rep{walk.multiplicity(), steps, tol, 0.0, false};
    for (int t = 0; t < steps; ++t) {
        if (drive == ReductionDrive::CompleteSearch) {
            full = walk.apply_oracle(full, marked);
            reduced = oracle(reduced_g, reduced, marked);
        }
        full = walk.apply_shift(walk.apply_coin(full), kind);
        reduced = apply_shift(reduced_g, apply_coin(reduced_g, reduced), kind);
        rep.max_dev = std::max(rep.max_dev, max_abs_diff(walk.project(full), reduced));
    }
    rep.pass = rep.max_dev < tol;
    return rep;
}

}  // namespace wqwalk

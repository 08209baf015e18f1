// graph.hpp — immutable weighted graphs with dense arc indexing
//
// An arc is an ordered pair (from, to) for each incident (vertex, edge) pair;
// a self-loop contributes a single arc (v, v).  Arcs are numbered in (from, to)
// order, so every vertex owns one contiguous block of arc indices.
#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "wqwalk/types.hpp"

namespace wqwalk {

/// Undirected edge with a positive weight; v == u is a self-loop.
struct Edge {
    Vertex v = 0;
    Vertex u = 0;
    double w = 1.0;
};

class WeightedGraph {
public:
    /// Validates and builds.  Rejects non-positive weights, ids >= vertex_count
    /// and repeated unordered vertex pairs (parallel edges are modeled as one
    /// edge of summed weight by the caller, never stored).
    WeightedGraph(Vertex vertex_count, const std::vector<Edge>& edges);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return to_.size(); }

    std::size_t block_begin(Vertex v) const { require_vertex(v); return offsets_[v]; }
    std::size_t block_end(Vertex v) const { require_vertex(v); return offsets_[v + 1]; }
    std::size_t degree(Vertex v) const { require_vertex(v); return offsets_[v + 1] - offsets_[v]; }

    Vertex arc_from(std::size_t a) const { return from_[a]; }
    Vertex arc_to(std::size_t a) const { return to_[a]; }
    double arc_weight(std::size_t a) const { return weight_[a]; }
    double arc_sqrt_weight(std::size_t a) const { return sqrt_weight_[a]; }

    /// Index of the opposite arc (to, from); a loop arc maps to itself.
    std::size_t reverse_arc(std::size_t a) const { return reverse_[a]; }

    bool has_arc(Vertex v, Vertex u) const;
    std::size_t arc_index(Vertex v, Vertex u) const;

    /// Sum of incident edge weights; a self-loop counts once with its weight.
    double vertex_weight_sum(Vertex v) const { require_vertex(v); return strength_[v]; }

    bool has_isolated_vertex() const noexcept { return isolated_; }

    /// True only for graphs produced by line_graph (segments keep the flag).
    bool is_line() const noexcept { return half_width_ != kNotLine; }
    Vertex line_half_width() const;

    /// Edge-list text format: one `v u w` triple per line, `#` starts a
    /// comment.  Vertex count is the largest id plus one.
    static WeightedGraph from_edge_list(std::istream& in);
    static WeightedGraph load_edge_list(const std::string& path);

private:
    void require_vertex(Vertex v) const {
        if (v >= n_) throw VertexOutOfRange("vertex id " + std::to_string(v) + " out of range");
    }

    static constexpr Vertex kNotLine = std::numeric_limits<Vertex>::max();

    Vertex n_ = 0;
    std::vector<std::size_t> offsets_;   // size n_+1
    std::vector<Vertex> from_;
    std::vector<Vertex> to_;
    std::vector<double> weight_;
    std::vector<double> sqrt_weight_;
    std::vector<double> strength_;
    std::vector<std::size_t> reverse_;
    bool isolated_ = false;
    Vertex half_width_ = kNotLine;

    friend WeightedGraph line_graph(Vertex, double);
};

/// K_N with unit edge weights plus, when loop_weight > 0, one self-loop of
/// that weight per vertex.  Requires N >= 2.
WeightedGraph complete_graph(Vertex n, double loop_weight = 0.0);

/// Path on vertices 0..2*half_width (position x maps to vertex x+half_width)
/// with unit edge weights and an optional self-loop per vertex.
WeightedGraph line_graph(Vertex half_width, double loop_weight = 0.0);

}  // namespace wqwalk

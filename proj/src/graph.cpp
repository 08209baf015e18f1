#include "wqwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace wqwalk {

WeightedGraph::WeightedGraph(Vertex vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count) {
    if (n_ == 0) throw VertexOutOfRange("a graph needs at least one vertex");

    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::vector<std::pair<Vertex, double>>> adj(n_);
    for (const Edge& e : edges) {
        if (e.v >= n_ || e.u >= n_)
            throw VertexOutOfRange("edge endpoint " + std::to_string(std::max(e.v, e.u)) +
                                   " >= vertex count " + std::to_string(n_));
        if (!std::isfinite(e.w) || !(e.w > 0.0))
            throw NonPositiveWeight("edge (" + std::to_string(e.v) + "," + std::to_string(e.u) +
                                    ") must have a positive finite weight");
        const auto key = std::minmax(e.v, e.u);
        if (!seen.insert(key).second)
            throw DuplicateEdge("repeated edge {" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + "}");
        adj[e.v].emplace_back(e.u, e.w);
        if (e.u != e.v) adj[e.u].emplace_back(e.v, e.w);
    }

    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        offsets_[v + 1] = offsets_[v] + adj[v].size();
        if (adj[v].empty()) isolated_ = true;
    }

    const std::size_t arcs = offsets_[n_];
    from_.reserve(arcs);
    to_.reserve(arcs);
    weight_.reserve(arcs);
    sqrt_weight_.reserve(arcs);
    strength_.assign(n_, 0.0);
    for (Vertex v = 0; v < n_; ++v) {
        double acc = 0.0;
        for (const auto& [u, w] : adj[v]) {
            from_.push_back(v);
            to_.push_back(u);
            weight_.push_back(w);
            sqrt_weight_.push_back(std::sqrt(w));
            acc += w;
        }
        strength_[v] = acc;
    }

    reverse_.resize(arcs);
    for (std::size_t a = 0; a < arcs; ++a) reverse_[a] = arc_index(to_[a], from_[a]);
}

bool WeightedGraph::has_arc(Vertex v, Vertex u) const {
    if (v >= n_ || u >= n_) return false;
    const auto first = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    return std::binary_search(first, last, u);
}

std::size_t WeightedGraph::arc_index(Vertex v, Vertex u) const {
    require_vertex(v);
    require_vertex(u);
    const auto first = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = to_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    const auto it = std::lower_bound(first, last, u);
    if (it == last || *it != u)
        throw Error("no arc (" + std::to_string(v) + "," + std::to_string(u) + ")");
    return static_cast<std::size_t>(it - to_.begin());
}

Vertex WeightedGraph::line_half_width() const {
    if (!is_line()) throw Error("graph was not built by line_graph");
    return half_width_;
}

WeightedGraph WeightedGraph::from_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    Vertex max_id = 0;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream fields(raw);
        long long v = 0, u = 0;
        double w = 0.0;
        if (!(fields >> v >> u >> w))
            throw ParseError("line " + std::to_string(lineno) + ": expected `v u w`");
        std::string trailing;
        if (fields >> trailing)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (v < 0 || u < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
        constexpr long long kMaxId = 100'000'000;
        if (v > kMaxId || u > kMaxId)
            throw ParseError("line " + std::to_string(lineno) + ": vertex id too large");
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u), w});
        max_id = std::max({max_id, static_cast<Vertex>(v), static_cast<Vertex>(u)});
    }
    if (edges.empty()) throw ParseError("edge list holds no edges");
    return WeightedGraph(max_id + 1, edges);
}

WeightedGraph WeightedGraph::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list: " + path);
    return from_edge_list(in);
}

WeightedGraph complete_graph(Vertex n, double loop_weight) {
    if (n < 2) throw VertexOutOfRange("complete_graph needs at least two vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = v + 1; u < n; ++u) edges.push_back({v, u, 1.0});
    if (loop_weight != 0.0)
        for (Vertex v = 0; v < n; ++v) edges.push_back({v, v, loop_weight});
    return WeightedGraph(n, edges);
}

WeightedGraph line_graph(Vertex half_width, double loop_weight) {
    if (half_width < 1) throw VertexOutOfRange("line_graph needs half_width >= 1");
    const Vertex n = 2 * half_width + 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * 2);
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
    if (loop_weight != 0.0)
        for (Vertex v = 0; v < n; ++v) edges.push_back({v, v, loop_weight});
    WeightedGraph g(n, edges);
    g.half_width_ = half_width;
    return g;
}

}  // namespace wqwalk

// helpers.hpp — shared test utilities: seeded random graphs and dense
// operator oracles built column by column from the O(arcs) routines
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "wqwalk/graph.hpp"
#include "wqwalk/types.hpp"

namespace wqwalk::testing {

/// Connected weighted graph on 2..max_vertices vertices: a random spanning
/// tree plus extra edges and optional self-loops, weights uniform in (0, 5].
inline WeightedGraph random_graph(std::mt19937_64& rng, Vertex max_vertices = 8,
                                  bool with_loops = true) {
    std::uniform_real_distribution<double> weight(1e-3, 5.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const Vertex n = std::uniform_int_distribution<Vertex>(2, max_vertices)(rng);

    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> used;
    for (Vertex i = 1; i < n; ++i) {
        const auto [a, b] = std::minmax(order[i - 1], order[i]);
        edges.push_back({a, b, weight(rng)});
        used.insert({a, b});
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a; b < n; ++b) {
            if (used.count({a, b})) continue;
            const double p = (a == b) ? (with_loops ? 0.25 : 0.0) : 0.3;
            if (coin(rng) < p) edges.push_back({a, b, weight(rng)});
        }
    return WeightedGraph(n, edges);
}

using DenseOp = std::vector<std::vector<Complex>>;  // column-major: op[j] = image of e_j

/// Materialize a linear operator by applying it to every basis vector.
inline DenseOp dense_operator(std::size_t dim, const std::function<ArcState(const ArcState&)>& op) {
    DenseOp cols(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        ArcState e(dim, Complex{0.0, 0.0});
        e[j] = Complex{1.0, 0.0};
        cols[j] = op(e);
    }
    return cols;
}

/// max |(A^dagger A - I)_{ij}|
inline double unitarity_defect(const DenseOp& cols) {
    const std::size_t dim = cols.size();
    double dev = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t r = 0; r < dim; ++r) acc += std::conj(cols[i][r]) * cols[j][r];
            dev = std::max(dev, std::abs(acc - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})));
        }
    return dev;
}

inline double dense_max_diff(const DenseOp& a, const DenseOp& b) {
    double dev = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t r = 0; r < a[j].size(); ++r) dev = std::max(dev, std::abs(a[j][r] - b[j][r]));
    return dev;
}

inline ArcState dense_apply(const DenseOp& cols, const ArcState& s) {
    ArcState out(s.size(), Complex{0.0, 0.0});
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t r = 0; r < s.size(); ++r) out[r] += cols[j][r] * s[j];
    return out;
}

}  // namespace wqwalk::testing

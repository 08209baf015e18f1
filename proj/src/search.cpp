#include "wqwalk/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wqwalk {

namespace {

void require_params(const SearchParams& p) {
    if (p.vertex_count < 2) throw VertexOutOfRange("search needs at least two vertices");
    if (!(p.loop_weight >= 0.0)) throw NegativeLoopWeight("loop weight must be >= 0");
    if (p.marked >= static_cast<Vertex>(p.vertex_count))
        throw VertexOutOfRange("marked vertex out of range");
}

// centered 3-point mean; kills the (-1)^t eigencomponent of p(t)
std::vector<double> smooth3(const std::vector<double>& p) {
    std::vector<double> q = p;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) q[i] = (p[i - 1] + p[i] + p[i + 1]) / 3.0;
    return q;
}

struct Hump {
    int t;
    double height;
};

// local maxima with hysteresis: a candidate commits once the curve has
// dropped delta below it, and a new search arms once it has risen delta
// above the running minimum
std::vector<Hump> humps_with_hysteresis(const std::vector<double>& q, double delta) {
    std::vector<Hump> humps;
    bool armed = true;
    double cur_max = -1.0, run_min = q.empty() ? 0.0 : q[0];
    int cur_arg = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double v = q[i];
        if (armed) {
            if (v > cur_max) {
                cur_max = v;
                cur_arg = static_cast<int>(i);
            }
            if (cur_max - v > delta) {
                humps.push_back({cur_arg, cur_max});
                armed = false;
                run_min = v;
            }
        } else {
            run_min = std::min(run_min, v);
            if (v - run_min > delta) {
                armed = true;
                cur_max = v;
                cur_arg = static_cast<int>(i);
            }
        }
    }
    if (armed && cur_max > run_min + delta) humps.push_back({cur_arg, cur_max});
    return humps;
}

}  // namespace

SearchAngles search_angles(const SearchParams& p) {
    require_params(p);
    const double n = static_cast<double>(p.vertex_count);
    const double l = p.loop_weight;
    const double denom = n + l - 1.0;
    SearchAngles a{};
    a.cos_theta = (n - l - 1.0) / denom;
    a.sin_theta = 2.0 * std::sqrt(l * (n - 1.0)) / denom;
    a.cos_phi = (n + l - 3.0) / denom;
    a.sin_phi = 2.0 * std::sqrt(n + l - 2.0) / denom;
    a.cos_alpha = (n - 2.0) / denom;
    a.sin_alpha = std::sqrt((2.0 * n + l - 3.0) * (l + 1.0)) / denom;
    a.alpha = std::acos(a.cos_alpha);
    return a;
}

double period_steps(const SearchParams& p) {
    return 2.0 * std::numbers::pi / search_angles(p).alpha;
}

double norm4(const SubspaceState4& s) {
    return std::sqrt(std::norm(s[0]) + std::norm(s[1]) + std::norm(s[2]) + std::norm(s[3]));
}

SubspaceState4 subspace_initial(const SearchParams& p) {
    require_params(p);
    const double n = static_cast<double>(p.vertex_count);
    const double l = p.loop_weight;
    const double scale = 1.0 / std::sqrt(n * (n + l - 1.0));
    return {Complex{std::sqrt(l) * scale, 0.0},
            Complex{std::sqrt(n - 1.0) * scale, 0.0},
            Complex{std::sqrt(n - 1.0) * scale, 0.0},
            Complex{std::sqrt((n - 1.0) * (n + l - 2.0)) * scale, 0.0}};
}

SubspaceState4 subspace_step(const SearchAngles& a, const SubspaceState4& s) {
    return {a.cos_theta * s[0] - a.sin_theta * s[1],
            -a.cos_phi * s[2] + a.sin_phi * s[3],
            -a.sin_theta * s[0] - a.cos_theta * s[1],
            a.sin_phi * s[2] + a.cos_phi * s[3]};
}

std::array<std::array<double, 4>, 4> subspace_matrix(const SearchAngles& a) {
    return {{{a.cos_theta, -a.sin_theta, 0.0, 0.0},
             {0.0, 0.0, -a.cos_phi, a.sin_phi},
             {-a.sin_theta, -a.cos_theta, 0.0, 0.0},
             {0.0, 0.0, a.sin_phi, a.cos_phi}}};
}

SubspaceState4 evolve_subspace(const SearchParams& p, int steps) {
    if (steps < 0) throw Error("negative step count");
    const SearchAngles a = search_angles(p);
    SubspaceState4 s = subspace_initial(p);
    for (int t = 0; t < steps; ++t) s = subspace_step(a, s);
    return s;
}

double success_probability(const SearchParams& p, int steps) {
    const SubspaceState4 s = evolve_subspace(p, steps);
    return std::norm(s[0]) + std::norm(s[1]);
}

std::vector<double> success_curve(const SearchParams& p, int steps) {
    if (steps < 0) throw Error("negative step count");
    const SearchAngles a = search_angles(p);
    SubspaceState4 s = subspace_initial(p);
    std::vector<double> curve(static_cast<std::size_t>(steps) + 1);
    for (int t = 0; t <= steps; ++t) {
        curve[static_cast<std::size_t>(t)] = std::norm(s[0]) + std::norm(s[1]);
        s = subspace_step(a, s);
    }
    return curve;
}

SubspaceState4 asymptotic_state(const SearchParams& p, double t) {
    const SearchAngles an = search_angles(p);
    const double n = static_cast<double>(p.vertex_count);
    const double l = p.loop_weight;
    const double c = std::cos(an.alpha * t);
    const double s = std::sin(an.alpha * t);
    const double root = std::sqrt(n + l - 2.0);
    const double cross = std::sqrt((2.0 * n + l - 3.0) * (l + 1.0));
    const double aa = (1.0 - c) * std::sqrt(l * (n - 1.0)) / ((l + 1.0) * root);
    const double ab = (2.0 * l + (l - 1.0) * c + cross * s) / (2.0 * (l + 1.0) * root);
    const double ba = (2.0 * l + (l - 1.0) * c - cross * s) / (2.0 * (l + 1.0) * root);
    // (l + cos)/(l + 1): the closed form that keeps the vector normalized;
    // see the bb-component note in the README
    const double bb = (l + c) / (l + 1.0);
    return {Complex{aa, 0.0}, Complex{ab, 0.0}, Complex{ba, 0.0}, Complex{bb, 0.0}};
}

double asymptotic_success(const SearchParams& p, double t) {
    const SubspaceState4 s = asymptotic_state(p, t);
    return std::norm(s[0]) + std::norm(s[1]);
}

ArcState oracle(const WeightedGraph& g, const ArcState& state, Vertex marked) {
    if (state.size() != g.arc_count()) throw DimensionMismatch("oracle: state/graph mismatch");
    if (marked >= g.vertex_count()) throw VertexOutOfRange("oracle: bad marked vertex");
    ArcState out = state;
    for (std::size_t a = g.block_begin(marked); a < g.block_end(marked); ++a) out[a] = -out[a];
    return out;
}

ArcState search_step_full(const WeightedGraph& g, const ArcState& state, Vertex marked) {
    return apply_shift(g, apply_coin(g, oracle(g, state, marked)), ShiftKind::FlipFlop);
}

ArcState search_initial_full(const WeightedGraph& g) {
    if (g.has_isolated_vertex()) throw IsolatedVertex("initial state needs no isolated vertices");
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(g.vertex_count()));
    ArcState s(g.arc_count());
    for (std::size_t a = 0; a < g.arc_count(); ++a)
        s[a] = Complex{g.arc_sqrt_weight(a) / std::sqrt(g.vertex_weight_sum(g.arc_from(a))) *
                           inv_root_n,
                       0.0};
    return s;
}

SubspaceState4 project_to_subspace(const WeightedGraph& g, const ArcState& state, Vertex marked) {
    if (state.size() != g.arc_count()) throw DimensionMismatch("projection: state/graph mismatch");
    if (marked >= g.vertex_count()) throw VertexOutOfRange("projection: bad marked vertex");
    const double n = static_cast<double>(g.vertex_count());
    const bool loops = g.has_arc(marked, marked);
    const double l = loops ? g.arc_weight(g.arc_index(marked, marked)) : 0.0;
    SubspaceState4 out{};
    Complex bb{0.0, 0.0};
    const double root_l = std::sqrt(l);
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
        const Vertex v = g.arc_from(a);
        const Vertex u = g.arc_to(a);
        if (v == marked && u == marked) out[0] += state[a];
        else if (v == marked) out[1] += state[a];
        else if (u == marked) out[2] += state[a];
        else bb += (u == v ? root_l : 1.0) * state[a];
    }
    out[1] /= std::sqrt(n - 1.0);
    out[2] /= std::sqrt(n - 1.0);
    out[3] = bb / std::sqrt((n - 1.0) * (n + l - 2.0));
    return out;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Sub: return "sub";
        case Regime::Mid: return "mid";
        case Regime::Linear: return "linear";
        case Regime::Super: return "super";
    }
    return "?";
}

PiecewisePrediction predict(const SearchParams& p) {
    require_params(p);
    const double n = static_cast<double>(p.vertex_count);
    const double l = p.loop_weight;
    if (p.linear_c) {
        const double c = *p.linear_c;
        if (!(c > 0.0)) throw AmbiguousRegime("linear regime needs c > 0");
        const double t = std::numbers::pi / std::asin(std::sqrt(c * (c + 2.0)) / (c + 1.0));
        return {Regime::Linear, t, (16.0 + 9.0 * c) / (4.0 * c * (c + 1.0)) / n};
    }
    if (l >= 100.0 * n) return {Regime::Super, 2.0, 9.0 / (4.0 * l)};
    if (l >= 0.01 * n)
        throw AmbiguousRegime("loop weight of order N: pass the scale c explicitly");
    if (l < 1.0 / 3.0) {
        const double t =
            std::acos(2.0 * l / (l - 1.0)) / std::sqrt(2.0 * (l + 1.0)) * std::sqrt(n);
        return {Regime::Sub, t, 1.0 / (2.0 * (1.0 - l))};
    }
    const double t = std::numbers::pi * std::sqrt(n / (2.0 * (l + 1.0)));
    return {Regime::Mid, t, 4.0 * l / ((l + 1.0) * (l + 1.0))};
}

PeakInfo find_peak(const SearchParams& p, int horizon) {
    const double period = period_steps(p);
    if (static_cast<double>(horizon) < period)
        throw std::invalid_argument("find_peak horizon must cover one full period (" +
                                    std::to_string(period) + " steps)");
    const std::vector<double> q = smooth3(success_curve(p, horizon));
    const double q_max = *std::max_element(q.begin(), q.end());
    const auto humps = humps_with_hysteresis(q, 0.05 * q_max);

    PeakInfo info;
    info.p_peak = q_max;
    info.t_peak = static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
    for (const Hump& h : humps) {
        if (h.height >= 0.995 * q_max) {
            info.t_peak = h.t;
            break;
        }
    }
    const int first_period = static_cast<int>(std::ceil(period));
    for (const Hump& h : humps)
        if (h.t <= first_period && h.height >= q_max / 2.0) ++info.hump_count;
    return info;
}

std::vector<std::pair<double, double>> threshold_scan(int vertex_count,
                                                      const std::vector<double>& loop_weights) {
    std::vector<std::pair<double, double>> table;
    table.reserve(loop_weights.size());
    for (double l : loop_weights) {
        SearchParams p;
        p.vertex_count = vertex_count;
        p.loop_weight = l;
        const int horizon = static_cast<int>(std::ceil(period_steps(p))) + 1;
        table.emplace_back(l, find_peak(p, horizon).p_peak);
    }
    return table;
}

double locate_half_crossing(int vertex_count, double lo, double hi) {
    const auto peak_at = [vertex_count](double l) {
        SearchParams p;
        p.vertex_count = vertex_count;
        p.loop_weight = l;
        const int horizon = static_cast<int>(std::ceil(period_steps(p))) + 1;
        return find_peak(p, horizon).p_peak;
    };
    if (!(lo < hi) || peak_at(lo) <= 0.5 || peak_at(hi) >= 0.5)
        throw std::invalid_argument("bracket must satisfy p_peak(lo) > 1/2 > p_peak(hi)");
    while (hi - lo > 0.05) {
        const double mid = 0.5 * (lo + hi);
        (peak_at(mid) > 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace wqwalk

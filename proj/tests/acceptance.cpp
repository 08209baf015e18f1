// acceptance.cpp — end-to-end checks of the library's headline behaviors,
// one printed pass/fail line per criterion.  Exits nonzero if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "wqwalk/graph.hpp"
#include "wqwalk/line_walk.hpp"
#include "wqwalk/reduction.hpp"
#include "wqwalk/search.hpp"
#include "wqwalk/szegedy.hpp"
#include "wqwalk/walk.hpp"

using namespace wqwalk;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw CheckFailure(msg);
}

int g_failures = 0;

void criterion(int id, const std::string& label, double time_limit_s,
               const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && time_limit_s > 0.0 && secs > time_limit_s) {
        ok = false;
        detail += " [exceeded " + std::to_string(time_limit_s) + " s budget]";
    }
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ArcState centered_line_state(const WeightedGraph& g) {
    const Vertex c = g.line_half_width();
    ArcState s(g.arc_count(), Complex{0.0, 0.0});
    s[g.arc_index(c, c - 1)] = Complex{1.0 / std::sqrt(2.0), 0.0};
    s[g.arc_index(c, c + 1)] = Complex{0.0, 1.0 / std::sqrt(2.0)};
    return s;
}

PeakInfo one_period_peak(int n, double l) {
    SearchParams p;
    p.vertex_count = n;
    p.loop_weight = l;
    return find_peak(p, static_cast<int>(std::ceil(period_steps(p))));
}

}  // namespace

int main() {
    criterion(1, "two-reflection equivalence on random weighted graphs", 10.0, [] {
        std::mt19937_64 rng(20240601);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const WeightedGraph g = testing::random_graph(rng, 8);
            const EquivalenceReport rep = verify_equivalence(g, 2, 1e-12, rng());
            require(rep.pass, "deviation above 1e-12 on trial " + std::to_string(i));
            worst = std::max({worst, rep.max_dev_c_r1, rep.max_dev_scs_r2, rep.max_dev_u2_w});
        }
        return "100 graphs, worst deviation " + fmt(worst);
    });

    criterion(2, "moving shift breaks the two-reflection identity", 1.0, [] {
        const WeightedGraph g = line_graph(20, 1.0);
        const double dev = u2_vs_w_deviation(g, centered_line_state(g), ShiftKind::Moving);
        require(dev > 0.01, "deviation only " + fmt(dev));
        return "U^2 vs W deviation " + fmt(dev) + " > 0.01";
    });

    criterion(3, "k parallel loops evolve like one loop of weight k", 30.0, [] {
        const auto line = verify_reduction(line_graph(101, 0.0), 10, 100, 1e-10,
                                           ReductionDrive::LineMoving);
        require(line.pass, "line drive deviation " + fmt(line.max_dev));
        const auto search = verify_reduction(complete_graph(16, 0.0), 3, 60, 1e-10,
                                             ReductionDrive::CompleteSearch);
        require(search.pass, "search drive deviation " + fmt(search.max_dev));
        return "line dev " + fmt(line.max_dev) + ", search dev " + fmt(search.max_dev);
    });

    criterion(4, "loop coin equals the deformed coin and the 3-state diffusion coin", 0.0, [] {
        std::mt19937_64 rng(321321);
        std::uniform_real_distribution<double> u(0.0, 100.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double l = u(rng);
            const LineCoin3 a = lack_coin(l);
            const LineCoin3 b = stefanak_coin(rho_from_loop_weight(l));
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
        }
        require(worst < 1e-14, "entrywise deviation " + fmt(worst));

        const LineCoin3 g = lack_coin(1.0);
        const double third = 1.0 / 3.0, two_thirds = 2.0 / 3.0;
        const double printed[3][3] = {{-third, two_thirds, two_thirds},
                                      {two_thirds, -third, two_thirds},
                                      {two_thirds, two_thirds, -third}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                require(g.at(r, c) == printed[r][c], "weight-1 coin entry differs");
        return "50 weights, worst entry deviation " + fmt(worst) + "; weight-1 coin exact";
    });

    criterion(5, "lattice peak speeds match sqrt(l/(l+2))", 20.0, [] {
        struct Case {
            double l;
            int steps;
            double tol;
        };
        std::string detail;
        for (const Case c : {Case{10.0, 100, 0.03}, Case{1.0, 100, 0.03}, Case{0.5, 200, 0.02}}) {
            LineSimConfig cfg;
            cfg.loop_weight = c.l;
            cfg.steps = c.steps;
            const PeakSpeeds v = peak_velocity(simulate_line(cfg), c.steps);
            const double target = std::sqrt(c.l / (c.l + 2.0));
            require(std::abs(v.right - target) < c.tol && std::abs(-v.left - target) < c.tol,
                    "speed " + fmt(v.right) + " vs " + fmt(target) + " at weight " + fmt(c.l));
            detail += (detail.empty() ? "" : ", ") + fmt(v.right) + "~" + fmt(target);
        }
        return detail;
    });

    criterion(6, "loopless search peaks near 1/2 at the expected step", 0.0, [] {
        const PeakInfo info = one_period_peak(1024, 0.0);
        require(info.p_peak >= 0.48 && info.p_peak <= 0.52, "peak " + fmt(info.p_peak));
        const double t_star = std::numbers::pi * 32.0 / (2.0 * std::sqrt(2.0));
        require(std::abs(info.t_peak - std::round(t_star)) <= 1.0,
                "peak step " + std::to_string(info.t_peak) + " vs " + fmt(t_star));
        return "p_peak " + fmt(info.p_peak) + ", t_peak " + std::to_string(info.t_peak) +
               " (predicted " + fmt(t_star) + ")";
    });

    criterion(7, "unit loop weight reaches certainty", 0.0, [] {
        const PeakInfo info = one_period_peak(1024, 1.0);
        require(info.p_peak >= 0.99, "peak " + fmt(info.p_peak));
        const double t_star = std::numbers::pi * 16.0;
        require(std::abs(info.t_peak - t_star) <= 1.0,
                "peak step " + std::to_string(info.t_peak) + " vs " + fmt(t_star));
        return "p_peak " + fmt(info.p_peak) + ", t_peak " + std::to_string(info.t_peak) +
               " (predicted " + fmt(t_star) + ")";
    });

    criterion(8, "full arc-space search equals the 4D model", 0.0, [] {
        double worst = 0.0;
        for (int n : {8, 16, 32}) {
            for (double l : {0.0, 0.3, 1.0, 5.0}) {
                const WeightedGraph g = complete_graph(static_cast<Vertex>(n), l);
                SearchParams params;
                params.vertex_count = n;
                params.loop_weight = l;
                const SearchAngles angles = search_angles(params);
                ArcState full = search_initial_full(g);
                SubspaceState4 sub = subspace_initial(params);
                for (int t = 0; t <= 200; ++t) {
                    const SubspaceState4 proj = project_to_subspace(g, full, 0);
                    for (int i = 0; i < 4; ++i)
                        worst = std::max(worst, std::abs(proj[static_cast<std::size_t>(i)] -
                                                         sub[static_cast<std::size_t>(i)]));
                    if (t < 200) {
                        full = search_step_full(g, full, 0);
                        sub = subspace_step(angles, sub);
                    }
                }
            }
        }
        require(worst < 1e-12, "worst amplitude deviation " + fmt(worst));
        return "12 parameter sets, 200 steps each, worst deviation " + fmt(worst);
    });

    criterion(9, "peak splits into two humps only below 1/3", 0.0, [] {
        for (double l : {0.1, 0.2}) {
            const int humps = one_period_peak(1024, l).hump_count;
            require(humps == 2, "weight " + fmt(l) + " gave " + std::to_string(humps) + " humps");
        }
        for (double l : {0.4, 1.0, 5.0}) {
            const int humps = one_period_peak(1024, l).hump_count;
            require(humps == 1, "weight " + fmt(l) + " gave " + std::to_string(humps) + " humps");
        }
        return "2 humps at weights 0.1, 0.2; 1 hump at 0.4, 1, 5";
    });

    criterion(10, "below-1/3 closed forms: runtime and the 1/(2(1-l)) probability", 0.0, [] {
        const int n = 8192;
        const double l = 0.2;
        const PeakInfo info = one_period_peak(n, l);
        const double p_continuous = 1.0 / (2.0 * (1.0 - l));      // 0.625
        const double p_alternative = 1.0 / (2.0 * (l + 1.0));     // 0.41667
        require(std::abs(info.p_peak - p_continuous) < 0.05,
                "peak " + fmt(info.p_peak) + " not within 0.05 of " + fmt(p_continuous));
        require(std::abs(info.p_peak - p_alternative) >= 0.05,
                "peak " + fmt(info.p_peak) + " also matches the discarded form");
        const double t_star = std::acos(2.0 * l / (l - 1.0)) / std::sqrt(2.0 * (l + 1.0)) *
                              std::sqrt(static_cast<double>(n));
        require(std::abs(info.t_peak - t_star) <= 3.0,
                "peak step " + std::to_string(info.t_peak) + " vs " + fmt(t_star));
        return "p_peak " + fmt(info.p_peak) + " ~ " + fmt(p_continuous) + " (not " +
               fmt(p_alternative) + "), t_peak " + std::to_string(info.t_peak) + " ~ " +
               fmt(t_star);
    });

    criterion(11, "gain over the loopless walk ends near weight 5.83", 60.0, [] {
        const double crossing = locate_half_crossing(4096, 1.0, 10.0);
        require(crossing >= 5.6 && crossing <= 6.1, "crossing at " + fmt(crossing));
        return "p_peak = 1/2 crossing at weight " + fmt(crossing);
    });

    criterion(12, "property fuzz: unitarity, involutions, branch handoffs", 0.0, [] {
        std::mt19937_64 rng(777000);
        int cases = 0;
        // walk operators on random weighted graphs
        for (int i = 0; i < 300; ++i) {
            const WeightedGraph g = testing::random_graph(rng, 8);
            const ArcState s = random_state(g.arc_count(), rng);
            const ArcState cs = apply_coin(g, s);
            require(std::abs(l2_norm(cs) - 1.0) < 1e-12, "coin changed the norm");
            require(max_abs_diff(apply_coin(g, cs), s) < 1e-12, "coin is not an involution");
            const ArcState ff =
                apply_shift(g, apply_shift(g, s, ShiftKind::FlipFlop), ShiftKind::FlipFlop);
            require(max_abs_diff(ff, s) == 0.0, "flip-flop twice moved something");
            ++cases;
        }
        // two-reflection walk on random weighted graphs
        for (int i = 0; i < 250; ++i) {
            const WeightedGraph g = testing::random_graph(rng, 8);
            const TransitionMatrix p(g);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                require(std::abs(p.row_sum(v) - 1.0) < 1e-14, "row sum off");
            const ArcState s = random_state(g.arc_count(), rng);
            require(max_abs_diff(apply_R1(g, p, apply_R1(g, p, s)), s) < 1e-12, "R1^2 != I");
            require(max_abs_diff(apply_R2(g, p, apply_R2(g, p, s)), s) < 1e-12, "R2^2 != I");
            const ArcState u2 = step(g, step(g, s, ShiftKind::FlipFlop), ShiftKind::FlipFlop);
            require(max_abs_diff(u2, apply_W(g, p, s)) < 1e-12, "U^2 != W");
            ++cases;
        }
        // long-run norm drift
        for (int i = 0; i < 2; ++i) {
            const WeightedGraph g = testing::random_graph(rng, 6);
            const ArcState s = random_state(g.arc_count(), rng);
            require(std::abs(l2_norm(evolve(g, s, ShiftKind::FlipFlop, 1000)) - 1.0) < 1e-9,
                    "norm drifted over 1000 steps");
            ++cases;
        }
        // prediction branch handoffs (closed forms only)
        {
            const double eps = 1e-9;
            const auto below = predict({.vertex_count = 1 << 20, .loop_weight = 1.0 / 3.0 - eps});
            const auto above = predict({.vertex_count = 1 << 20, .loop_weight = 1.0 / 3.0 + eps});
            require(std::abs(below.p_star - 0.75) < 1e-6 && std::abs(above.p_star - 0.75) < 1e-6,
                    "probability branches do not meet at 3/4");
            require(std::abs(below.t_star / above.t_star - 1.0) < 1e-3,
                    "runtime branches do not meet");
            for (double c : {1e-4, 1e-6}) {
                const auto lin =
                    predict({.vertex_count = 1024, .loop_weight = 1024.0 * c, .linear_c = c});
                require(std::abs(lin.t_star * std::sqrt(2.0 * c) / std::numbers::pi - 1.0) < 0.01,
                        "linear branch does not limit to the mid branch");
            }
            for (double c : {1e4, 1e6}) {
                const auto lin = predict(
                    {.vertex_count = 1024, .loop_weight = c * 1024.0, .linear_c = c});
                require(std::abs(lin.p_star * (4.0 * c * 1024.0) / 9.0 - 1.0) < 0.01,
                        "linear branch does not limit to the super branch");
            }
            double prev = 1e18;
            for (double l = 1.0 / 3.0; l < 8.0; l += 0.125) {
                const double t = predict({.vertex_count = 4096, .loop_weight = l}).t_star;
                require(t < prev, "mid runtime is not monotone");
                prev = t;
            }
            cases += 6;
        }
        return std::to_string(cases) + " seeded cases, all within tolerance";
    });

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

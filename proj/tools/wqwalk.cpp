// wqwalk — experiment runner for coined walks on weighted graphs
//
// Subcommands: verify (two-reflection equivalence), reduce-verify (parallel
// loops vs one weighted loop), line (lattice dispersion), search (complete
// graph with a lazy loop), figures (the full CSV curve set).
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wqwalk/graph.hpp"
#include "wqwalk/line_walk.hpp"
#include "wqwalk/reduction.hpp"
#include "wqwalk/search.hpp"
#include "wqwalk/szegedy.hpp"
#include "wqwalk/walk.hpp"

namespace {

using nlohmann::json;
using namespace wqwalk;

constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 24;  // fail fast before allocating

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    return out;
}

void emit_json(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) open_out(out_path) << text << "\n";
}

unsigned worker_cap() {
    if (const char* env = std::getenv("WQWALK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void run_parallel(const std::vector<std::function<void()>>& tasks) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_cap(), tasks.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                try {
                    tasks[i]();
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed.exchange(true)) first_error = e.what();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    if (failed) throw Error(first_error);
}

// ---- line ----

struct LineArgs {
    double loop_weight = 1.0;
    double rho = -1.0;  // <0: not set
    int steps = 100;
    std::string shift = "moving";
    std::string loopless = "hadamard";
    std::string out;
};

LineSimConfig line_config(const LineArgs& a) {
    LineSimConfig cfg;
    if (a.rho >= 0.0) {
        cfg.use_rho = true;
        cfg.rho = a.rho;
    } else {
        cfg.loop_weight = a.loop_weight;
    }
    cfg.steps = a.steps;
    cfg.shift = (a.shift == "flipflop") ? ShiftKind::FlipFlop : ShiftKind::Moving;
    cfg.loopless_coin = (a.loopless == "grover2") ? LooplessCoin::Grover2 : LooplessCoin::Hadamard;
    return cfg;
}

void write_line_csv(const PositionDistribution& d, std::ostream& out) {
    out << "position,probability\n";
    for (int x = -d.half_width(); x <= d.half_width(); ++x)
        out << x << "," << fmt17(d.at(x)) << "\n";
}

int run_line(const LineArgs& a) {
    if (a.steps < 1 ||
        6ull * (2ull * (static_cast<unsigned long long>(a.steps) + 1) + 1) > kMaxAmplitudes)
        throw Error("step count out of range");
    const PositionDistribution d = simulate_line(line_config(a));
    if (a.out.empty()) {
        write_line_csv(d, std::cout);
    } else {
        auto out = open_out(a.out);
        write_line_csv(d, out);
    }
    return 0;
}

// ---- search ----

struct SearchArgs {
    int n = 1024;
    double loop_weight = 0.0;
    double linear_c = -1.0;  // <0: not set
    int steps = 0;           // 0: one period
    std::string mode = "subspace";
    bool with_asym = false;
    std::string scan;  // "a:b:step"
    std::string out;
};

std::vector<double> parse_scan(const std::string& range) {
    double a = 0.0, b = 0.0, step = 0.0;
    if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0.0 || b < a)
        throw Error("--scan-l expects \"start:stop:step\" with step > 0");
    std::vector<double> grid;
    for (double l = a; l <= b + 1e-12; l += step) grid.push_back(l);
    return grid;
}

json summary_json(const SearchParams& params, const PeakInfo& peak) {
    json j;
    j["N"] = params.vertex_count;
    j["l"] = params.loop_weight;
    try {
        const PiecewisePrediction pred = predict(params);
        j["regime"] = std::string(regime_name(pred.regime));
        j["t_star_pred"] = pred.t_star;
        j["p_star_pred"] = pred.p_star;
    } catch (const AmbiguousRegime&) {
        j["regime"] = "ambiguous";
        j["t_star_pred"] = nullptr;
        j["p_star_pred"] = nullptr;
    }
    j["t_peak"] = peak.t_peak;
    j["p_peak"] = peak.p_peak;
    j["hump_count"] = peak.hump_count;
    return j;
}

int run_search(const SearchArgs& a) {
    SearchParams params;
    params.vertex_count = a.n;
    params.loop_weight = a.loop_weight;
    if (a.linear_c > 0.0) params.linear_c = a.linear_c;
    if (a.steps < 0 || a.steps > 10'000'000) throw Error("--steps out of range");

    if (!a.scan.empty()) {
        const std::vector<double> grid = parse_scan(a.scan);
        std::string csv = "l,t_peak,p_peak,hump_count\n";
        double best_l = grid.front(), best_p = -1.0;
        for (double l : grid) {
            SearchParams p = params;
            p.loop_weight = l;
            const int horizon = static_cast<int>(std::ceil(period_steps(p))) + 1;
            const PeakInfo info = find_peak(p, horizon);
            csv += fmt17(l) + "," + std::to_string(info.t_peak) + "," + fmt17(info.p_peak) + "," +
                   std::to_string(info.hump_count) + "\n";
            if (info.p_peak > best_p) {
                best_p = info.p_peak;
                best_l = l;
            }
        }
        if (a.out.empty()) std::cout << csv;
        else open_out(a.out) << csv;
        json j;
        j["N"] = a.n;
        j["mode"] = "scan";
        j["best_l"] = best_l;
        j["best_p_peak"] = best_p;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    const double period_f = period_steps(params);
    if (period_f > 10'000'000.0)
        throw Error("one period needs " + std::to_string(period_f) + " steps; pass --steps");
    const int period = static_cast<int>(std::ceil(period_f));
    const int steps = (a.steps > 0) ? a.steps : period;

    std::vector<double> curve;
    if (a.mode == "full") {
        const std::size_t arcs = static_cast<std::size_t>(a.n) * (a.n - 1) +
                                 (a.loop_weight > 0.0 ? static_cast<std::size_t>(a.n) : 0);
        if (arcs > kMaxAmplitudes)
            throw Error("full mode needs " + std::to_string(arcs) + " amplitudes; cap is " +
                        std::to_string(kMaxAmplitudes));
        const WeightedGraph g = complete_graph(static_cast<Vertex>(a.n), a.loop_weight);
        ArcState state = search_initial_full(g);
        curve.reserve(static_cast<std::size_t>(steps) + 1);
        for (int t = 0; t <= steps; ++t) {
            double p = 0.0;
            for (std::size_t arc = g.block_begin(params.marked); arc < g.block_end(params.marked);
                 ++arc)
                p += std::norm(state[arc]);
            curve.push_back(p);
            if (t < steps) state = search_step_full(g, state, params.marked);
        }
    } else if (a.mode == "asymptotic") {
        curve.reserve(static_cast<std::size_t>(steps) + 1);
        for (int t = 0; t <= steps; ++t) curve.push_back(asymptotic_success(params, t));
    } else {
        curve = success_curve(params, steps);
    }

    std::string csv = a.with_asym ? "t,p,p_asym\n" : "t,p\n";
    for (int t = 0; t <= steps; ++t) {
        csv += std::to_string(t) + "," + fmt17(curve[static_cast<std::size_t>(t)]);
        if (a.with_asym) csv += "," + fmt17(asymptotic_success(params, t));
        csv += "\n";
    }
    if (a.out.empty()) std::cout << csv;
    else open_out(a.out) << csv;

    const PeakInfo peak = find_peak(params, std::max(steps, period));
    std::cout << summary_json(params, peak).dump(2) << "\n";
    return 0;
}

// ---- verify / reduce-verify ----

int run_verify(const std::string& target, const std::string& graph_path, int trials, double tol,
               std::uint64_t seed, const std::string& out_path) {
    if (target != "szegedy") throw Error("unknown verify target: " + target);
    const WeightedGraph g = WeightedGraph::load_edge_list(graph_path);
    const EquivalenceReport rep = verify_equivalence(g, trials, tol, seed);
    json j;
    j["graph"] = graph_path;
    j["trials"] = rep.trials;
    j["max_dev_C_R1"] = rep.max_dev_c_r1;
    j["max_dev_SCS_R2"] = rep.max_dev_scs_r2;
    j["max_dev_U2_W"] = rep.max_dev_u2_w;
    j["pass"] = rep.pass;
    emit_json(j, out_path);
    return rep.pass ? 0 : 1;
}

int run_reduce_verify(const std::string& base_kind, int half_width, int n, double k, int steps,
                      double tol, const std::string& out_path) {
    ReductionReport rep;
    if (base_kind == "line") {
        if (half_width < steps + 1)
            throw Error("line base needs --half-width >= steps + 1 so nothing hits the ends");
        rep = verify_reduction(line_graph(static_cast<Vertex>(half_width), 0.0), k, steps, tol,
                               ReductionDrive::LineMoving);
    } else if (base_kind == "complete") {
        const std::size_t arcs = static_cast<std::size_t>(n) * (n - 1) +
                                 static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
        if (arcs > kMaxAmplitudes) throw Error("expanded walk too large");
        rep = verify_reduction(complete_graph(static_cast<Vertex>(n), 0.0), k, steps, tol,
                               ReductionDrive::CompleteSearch);
    } else {
        throw Error("--base must be line or complete");
    }
    json j;
    j["base"] = base_kind;
    j["k"] = rep.multiplicity;
    j["steps"] = rep.steps;
    j["max_dev"] = rep.max_dev;
    j["pass"] = rep.pass;
    emit_json(j, out_path);
    return rep.pass ? 0 : 1;
}

// ---- figures ----

void write_line_curve(const std::filesystem::path& path, double l, ShiftKind shift, int steps) {
    LineSimConfig cfg;
    cfg.loop_weight = l;
    cfg.steps = steps;
    cfg.shift = shift;
    const PositionDistribution d = simulate_line(cfg);
    auto out = open_out(path.string());
    write_line_csv(d, out);
}

void write_search_curve(const std::filesystem::path& path, int n, double l, int steps) {
    SearchParams params;
    params.vertex_count = n;
    params.loop_weight = l;
    const std::vector<double> curve = success_curve(params, steps);
    auto out = open_out(path.string());
    out << "t,p\n";
    for (int t = 0; t <= steps; ++t)
        out << t << "," << fmt17(curve[static_cast<std::size_t>(t)]) << "\n";
}

std::string trimmed(double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

int run_figures(const std::string& outdir) {
    const std::filesystem::path dir(outdir);
    std::filesystem::create_directories(dir);
    std::vector<std::function<void()>> tasks;
    tasks.emplace_back(
        [=] { write_line_curve(dir / "fig3_loopless.csv", 0.0, ShiftKind::Moving, 100); });
    tasks.emplace_back(
        [=] { write_line_curve(dir / "fig3_l10_moving.csv", 10.0, ShiftKind::Moving, 100); });
    tasks.emplace_back(
        [=] { write_line_curve(dir / "fig3_l10_flipflop.csv", 10.0, ShiftKind::FlipFlop, 100); });
    for (double l : {0.0, 0.1, 0.2, 0.4, 0.8})
        tasks.emplace_back(
            [=] { write_search_curve(dir / ("fig4a_l" + trimmed(l) + ".csv"), 1024, l, 200); });
    for (double l : {1.0, 2.5, 5.0, 7.5, 10.0})
        tasks.emplace_back(
            [=] { write_search_curve(dir / ("fig4b_l" + trimmed(l) + ".csv"), 1024, l, 200); });
    run_parallel(tasks);
    std::cout << "wrote " << tasks.size() << " curves to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined quantum walks on weighted graphs"};
    app.require_subcommand(1);

    // verify
    std::string verify_target, verify_graph, verify_out;
    int verify_trials = 100;
    double verify_tol = 1e-12;
    std::uint64_t verify_seed = 1;
    CLI::App* verify = app.add_subcommand("verify", "check the two-reflection equivalences");
    verify->add_option("target", verify_target, "what to verify (szegedy)")->required();
    verify->add_option("--graph", verify_graph, "edge-list file")->required();
    verify->add_option("--trials", verify_trials, "random states to try");
    verify->add_option("--tol", verify_tol, "pass threshold");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--out", verify_out, "also write the JSON report here");

    // reduce-verify
    std::string rv_base = "line", rv_out;
    int rv_half_width = 101, rv_n = 16, rv_steps = 100;
    double rv_k = 10.0, rv_tol = 1e-10;
    CLI::App* rv =
        app.add_subcommand("reduce-verify", "run k parallel loops against one loop of weight k");
    rv->add_option("--base", rv_base, "base graph: line or complete");
    rv->add_option("--half-width", rv_half_width, "line half width (line base)");
    rv->add_option("--n", rv_n, "vertex count (complete base)");
    rv->add_option("--k", rv_k, "loop multiplicity");
    rv->add_option("--steps", rv_steps, "steps to run");
    rv->add_option("--tol", rv_tol, "pass threshold");
    rv->add_option("--out", rv_out, "also write the JSON report here");

    // line
    LineArgs la;
    CLI::App* line = app.add_subcommand("line", "dispersion on the lattice");
    CLI::Option* opt_l = line->add_option("--l", la.loop_weight, "loop weight (0 = loopless)");
    CLI::Option* opt_rho = line->add_option("--rho", la.rho, "deformation parameter in [0,1]");
    opt_l->excludes(opt_rho);
    line->add_option("--steps", la.steps, "steps to run");
    line->add_option("--shift", la.shift, "moving or flipflop")
        ->check(CLI::IsMember({"moving", "flipflop"}));
    line->add_option("--loopless-coin", la.loopless, "hadamard or grover2")
        ->check(CLI::IsMember({"hadamard", "grover2"}));
    line->add_option("--out", la.out, "CSV path (stdout when omitted)");

    // search
    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search", "search the lazy complete graph");
    search->add_option("--n", sa.n, "vertex count");
    search->add_option("--l", sa.loop_weight, "loop weight");
    search->add_option("--c", sa.linear_c, "declare l = c*N for the predictor");
    search->add_option("--steps", sa.steps, "steps to tabulate (0 = one period)");
    search->add_option("--mode", sa.mode, "subspace, full, or asymptotic")
        ->check(CLI::IsMember({"subspace", "full", "asymptotic"}));
    search->add_flag("--asym", sa.with_asym, "append the closed-form column");
    search->add_option("--scan-l", sa.scan, "sweep loop weights start:stop:step");
    search->add_option("--out", sa.out, "CSV path (stdout when omitted)");

    // figures
    std::string fig_dir = "figures";
    CLI::App* figures = app.add_subcommand("figures", "emit the full curve set as CSV");
    figures->add_option("--outdir", fig_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_target, verify_graph, verify_trials, verify_tol, verify_seed,
                              verify_out);
        if (rv->parsed())
            return run_reduce_verify(rv_base, rv_half_width, rv_n, rv_k, rv_steps, rv_tol, rv_out);
        if (line->parsed()) return run_line(la);
        if (search->parsed()) return run_search(sa);
        if (figures->parsed()) return run_figures(fig_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

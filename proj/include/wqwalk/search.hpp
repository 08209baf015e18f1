// search.hpp — walk search on the complete graph with one weighted loop per
// vertex: oracle + walk step, its exact 4D invariant subspace, the large-N
// closed form, and the piecewise runtime / success-probability predictor.
#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "wqwalk/graph.hpp"
#include "wqwalk/types.hpp"
#include "wqwalk/walk.hpp"

namespace wqwalk {

struct SearchParams {
    int vertex_count = 2;      // N >= 2
    double loop_weight = 0.0;  // l >= 0
    Vertex marked = 0;
    /// Set when the loop weight is meant to scale as c * N; selects the
    /// linear branch of the predictor.
    std::optional<double> linear_c;
};

/// Rotation angles of the one-step operator restricted to the 4D subspace.
struct SearchAngles {
    double cos_theta, sin_theta;
    double cos_phi, sin_phi;
    double cos_alpha, sin_alpha;
    double alpha;  // acos(cos_alpha), the slow rotation frequency
};

SearchAngles search_angles(const SearchParams& p);

/// Number of steps in one full period of the slow rotation, 2*pi/alpha.
double period_steps(const SearchParams& p);

/// Components over the invariant basis: (aa, ab, ba, bb) = marked loop,
/// marked->rest, rest->marked, rest->rest.
using SubspaceState4 = std::array<Complex, 4>;

double norm4(const SubspaceState4& s);

/// Uniform weighted superposition over all arcs, written in the 4D basis.
SubspaceState4 subspace_initial(const SearchParams& p);

SubspaceState4 subspace_step(const SearchAngles& a, const SubspaceState4& s);

/// The printed 4x4 one-step operator, for matrix-level tests.
std::array<std::array<double, 4>, 4> subspace_matrix(const SearchAngles& a);

SubspaceState4 evolve_subspace(const SearchParams& p, int steps);

/// p(t) = |aa|^2 + |ab|^2 after t oracle+walk steps (exact 4D evolution).
double success_probability(const SearchParams& p, int steps);

/// p(0), p(1), ..., p(steps).
std::vector<double> success_curve(const SearchParams& p, int steps);

/// Large-N closed form of the state after t steps (t may be fractional).
/// Component magnitudes track the exact evolution; componentwise signs are
/// convention-bound and not meaningful.
SubspaceState4 asymptotic_state(const SearchParams& p, double t);

double asymptotic_success(const SearchParams& p, double t);

// ---- full arc space (the brute-force route) ----

/// Flips the sign of every amplitude whose source is the marked vertex.
ArcState oracle(const WeightedGraph& g, const ArcState& state, Vertex marked);

/// One search step: oracle, coin, flip-flop shift.
ArcState search_step_full(const WeightedGraph& g, const ArcState& state, Vertex marked);

/// (1/sqrt(N)) sum_v |v> (x) |s_v>.
ArcState search_initial_full(const WeightedGraph& g);

/// Components of an arc-space state over the 4D basis (g must be a complete
/// graph with a uniform loop weight, as built by complete_graph).
SubspaceState4 project_to_subspace(const WeightedGraph& g, const ArcState& state, Vertex marked);

// ---- predictions ----

enum class Regime { Sub, Mid, Linear, Super };
std::string_view regime_name(Regime r);

struct PiecewisePrediction {
    Regime regime;
    double t_star;  // predicted runtime, real-valued steps
    double p_star;  // predicted peak success probability
};

/// Piecewise closed forms.  Branch choice: linear when linear_c is supplied,
/// super when l >= 100*N, sub/mid split at l = 1/3 when l < 0.01*N; anything
/// in between is refused as AmbiguousRegime.  The sub branch uses
/// p* = 1 / (2(1-l)), the only form continuous with the mid branch at 1/3.
PiecewisePrediction predict(const SearchParams& p);

struct PeakInfo {
    int t_peak = 0;
    double p_peak = 0.0;
    int hump_count = 0;
};

/// Scans the exact p(t) for t in [0, horizon] (horizon must cover one full
/// period).  The alternating-eigenvalue jitter of p(t) is removed with a
/// 3-point mean before peaks are read off.  t_peak is the earliest peak
/// whose height is within 0.5% of the best seen, i.e. the first time the
/// algorithm is worth stopping; hump_count counts peaks at least half the
/// maximum within the first period.
PeakInfo find_peak(const SearchParams& p, int horizon);

/// p_peak as a function of loop weight.
std::vector<std::pair<double, double>> threshold_scan(int vertex_count,
                                                      const std::vector<double>& loop_weights);

/// Bisects [lo, hi] for the loop weight where p_peak crosses 1/2, to a
/// bracket width of 0.05; needs p_peak(lo) > 1/2 > p_peak(hi).
double locate_half_crossing(int vertex_count, double lo, double hi);

}  // namespace wqwalk

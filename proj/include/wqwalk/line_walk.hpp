// line_walk.hpp — lazy walk on the 1D lattice: the 3x3 loop coin, its
// deformed-coin twin, dispersion simulation and peak-speed readout
#pragma once

#include <array>
#include <numbers>
#include <vector>

#include "wqwalk/types.hpp"
#include "wqwalk/walk.hpp"

namespace wqwalk {

/// Real symmetric orthogonal 3x3 coin over the basis (left, stay, right).
struct LineCoin3 {
    std::array<std::array<double, 3>, 3> m;

    double at(int row, int col) const { return m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
};

/// 2|s><s| - I for s = (1, sqrt(l), 1)/sqrt(l+2):
///   (1/(l+2)) [ -l       2 sqrt(l)  2        ]
///             [ 2 sqrt(l)  l-2      2 sqrt(l) ]
///             [ 2        2 sqrt(l)  -l       ]
/// l = 1 is the standard three-state Grover coin.
LineCoin3 lack_coin(double loop_weight);

/// Eigenvector-deformed Grover coin with parameter rho in [0, 1]; equals
/// lack_coin(2 rho^2 / (1 - rho^2)), i.e. rho = sqrt(l/(l+2)).
LineCoin3 stefanak_coin(double rho);

double rho_from_loop_weight(double loop_weight);
double loop_weight_from_rho(double rho);

/// Coin for the loopless two-state reference walk.
enum class LooplessCoin { Hadamard, Grover2 };

struct LineSimConfig {
    double loop_weight = 1.0;  // ignored when use_rho is set
    bool use_rho = false;
    double rho = 0.0;
    int steps = 100;
    ShiftKind shift = ShiftKind::Moving;
    LooplessCoin loopless_coin = LooplessCoin::Hadamard;
    /// Amplitudes (left, stay, right) at the origin; the stay component is
    /// dropped for the two-state loopless walk.
    std::array<Complex, 3> initial = {Complex{1.0 / std::numbers::sqrt2, 0.0},
                                      Complex{0.0, 0.0},
                                      Complex{0.0, 1.0 / std::numbers::sqrt2}};
};

/// Probabilities over lattice positions -half_width .. half_width.
class PositionDistribution {
public:
    PositionDistribution(int half_width, std::vector<double> prob);

    int half_width() const noexcept { return half_width_; }
    double at(int position) const;
    double total() const;
    const std::vector<double>& raw() const noexcept { return prob_; }

private:
    int half_width_;
    std::vector<double> prob_;  // index position + half_width
};

/// Runs `steps` coin+shift rounds on a lattice wide enough that no amplitude
/// can touch the ends (half_width = steps + 1) and returns the position
/// distribution trimmed to -steps .. steps.  A zero effective loop weight
/// selects the two-state loopless walk with the configured coin.
PositionDistribution simulate_line(const LineSimConfig& config);

struct PeakSpeeds {
    double left;   // negative
    double right;  // positive
};

/// Outermost local maxima (probability >= 1e-4) on each side, scanned inward
/// from +-steps, reported as position / steps.  Needs steps >= 20.
PeakSpeeds peak_velocity(const PositionDistribution& dist, int steps);

}  // namespace wqwalk

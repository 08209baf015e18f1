#include "wqwalk/line_walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace wqwalk {

namespace {

constexpr double kBoundaryTol = 1e-15;
constexpr double kPeakThreshold = 1e-4;

double effective_loop_weight(const LineSimConfig& c) {
    if (c.use_rho) return loop_weight_from_rho(c.rho);
    if (!(c.loop_weight >= 0.0)) throw NegativeLoopWeight("loop weight must be >= 0");
    return c.loop_weight;
}

void check_ends(const std::vector<Complex>* comps, std::size_t count, std::size_t n, int step) {
    double peak = 0.0;
    for (std::size_t c = 0; c < count; ++c)
        peak = std::max({peak, std::abs(comps[c][0]), std::abs(comps[c][n - 1])});
    if (peak > kBoundaryTol)
        throw BoundaryContamination("amplitude reached the lattice edge at step " +
                                    std::to_string(step));
}

// three-state walk, components (left, stay, right) per site
PositionDistribution run_three_state(const LineCoin3& coin, const LineSimConfig& c) {
    const int m = c.steps + 1;
    const std::size_t n = 2 * static_cast<std::size_t>(m) + 1;
    std::vector<Complex> comp[3];
    for (auto& v : comp) v.assign(n, Complex{0.0, 0.0});
    for (int d = 0; d < 3; ++d) comp[d][static_cast<std::size_t>(m)] = c.initial[static_cast<std::size_t>(d)];

    std::vector<Complex> next[3];
    for (auto& v : next) v.assign(n, Complex{0.0, 0.0});
    for (int t = 0; t < c.steps; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            const Complex l = comp[0][i], s = comp[1][i], r = comp[2][i];
            comp[0][i] = coin.m[0][0] * l + coin.m[0][1] * s + coin.m[0][2] * r;
            comp[1][i] = coin.m[1][0] * l + coin.m[1][1] * s + coin.m[1][2] * r;
            comp[2][i] = coin.m[2][0] * l + coin.m[2][1] * s + coin.m[2][2] * r;
        }
        std::fill(next[0].begin(), next[0].end(), Complex{0.0, 0.0});
        std::fill(next[2].begin(), next[2].end(), Complex{0.0, 0.0});
        if (c.shift == ShiftKind::Moving) {
            // left keeps moving left, right keeps moving right; the ends turn
            // around, and the two edge slots with no arc stay put
            for (std::size_t i = 0; i < n; ++i) {
                if (i >= 2) next[0][i - 1] += comp[0][i];
                else if (i == 1) next[2][0] += comp[0][i];
                else next[0][0] += comp[0][i];
                if (i + 2 < n) next[2][i + 1] += comp[2][i];
                else if (i + 2 == n) next[0][n - 1] += comp[2][i];
                else next[2][n - 1] += comp[2][i];
            }
        } else {
            // flip-flop: right at x becomes left at x+1 and vice versa
            for (std::size_t i = 0; i < n; ++i) {
                if (i >= 1) next[2][i - 1] += comp[0][i];
                else next[0][0] += comp[0][i];
                if (i + 1 < n) next[0][i + 1] += comp[2][i];
                else next[2][n - 1] += comp[2][i];
            }
        }
        comp[0].swap(next[0]);
        comp[2].swap(next[2]);
        check_ends(comp, 3, n, t + 1);
    }

    std::vector<double> p(2 * static_cast<std::size_t>(c.steps) + 1);
    for (int x = -c.steps; x <= c.steps; ++x) {
        const std::size_t i = static_cast<std::size_t>(x + m);
        p[static_cast<std::size_t>(x + c.steps)] =
            std::norm(comp[0][i]) + std::norm(comp[1][i]) + std::norm(comp[2][i]);
    }
    return PositionDistribution(c.steps, std::move(p));
}

// two-state loopless walk, components (left, right) per site
PositionDistribution run_two_state(const LineSimConfig& c) {
    const int m = c.steps + 1;
    const std::size_t n = 2 * static_cast<std::size_t>(m) + 1;
    std::vector<Complex> comp[2];
    for (auto& v : comp) v.assign(n, Complex{0.0, 0.0});
    comp[0][static_cast<std::size_t>(m)] = c.initial[0];
    comp[1][static_cast<std::size_t>(m)] = c.initial[2];

    const double inv_root2 = 1.0 / std::sqrt(2.0);
    std::vector<Complex> next[2];
    for (auto& v : next) v.assign(n, Complex{0.0, 0.0});
    for (int t = 0; t < c.steps; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            const Complex l = comp[0][i], r = comp[1][i];
            if (c.loopless_coin == LooplessCoin::Hadamard) {
                comp[0][i] = (l + r) * inv_root2;
                comp[1][i] = (l - r) * inv_root2;
            } else {  // degree-2 Grover coin is the swap
                comp[0][i] = r;
                comp[1][i] = l;
            }
        }
        for (auto& v : next) std::fill(v.begin(), v.end(), Complex{0.0, 0.0});
        if (c.shift == ShiftKind::Moving) {
            for (std::size_t i = 0; i < n; ++i) {
                if (i >= 2) next[0][i - 1] += comp[0][i];
                else if (i == 1) next[1][0] += comp[0][i];
                else next[0][0] += comp[0][i];
                if (i + 2 < n) next[1][i + 1] += comp[1][i];
                else if (i + 2 == n) next[0][n - 1] += comp[1][i];
                else next[1][n - 1] += comp[1][i];
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (i >= 1) next[1][i - 1] += comp[0][i];
                else next[0][0] += comp[0][i];
                if (i + 1 < n) next[0][i + 1] += comp[1][i];
                else next[1][n - 1] += comp[1][i];
            }
        }
        for (int d = 0; d < 2; ++d) comp[d].swap(next[d]);
        check_ends(comp, 2, n, t + 1);
    }

    std::vector<double> p(2 * static_cast<std::size_t>(c.steps) + 1);
    for (int x = -c.steps; x <= c.steps; ++x) {
        const std::size_t i = static_cast<std::size_t>(x + m);
        p[static_cast<std::size_t>(x + c.steps)] = std::norm(comp[0][i]) + std::norm(comp[1][i]);
    }
    return PositionDistribution(c.steps, std::move(p));
}

}  // namespace

LineCoin3 lack_coin(double loop_weight) {
    if (!(loop_weight >= 0.0)) throw NegativeLoopWeight("loop weight must be >= 0");
    const double l = loop_weight;
    const double d = l + 2.0;
    const double off = 2.0 * std::sqrt(l) / d;
    return LineCoin3{{{{-l / d, off, 2.0 / d},
                       {off, (l - 2.0) / d, off},
                       {2.0 / d, off, -l / d}}}};
}

LineCoin3 stefanak_coin(double rho) {
    if (!(rho >= 0.0) || rho > 1.0) throw RhoOutOfRange("rho must lie in [0, 1]");
    const double rho2 = rho * rho;
    const double cross = rho * std::sqrt(2.0 * (1.0 - rho2));
    return LineCoin3{{{{-rho2, cross, 1.0 - rho2},
                       {cross, 2.0 * rho2 - 1.0, cross},
                       {1.0 - rho2, cross, -rho2}}}};
}

double rho_from_loop_weight(double loop_weight) {
    if (!(loop_weight >= 0.0)) throw NegativeLoopWeight("loop weight must be >= 0");
    return std::sqrt(loop_weight / (loop_weight + 2.0));
}

double loop_weight_from_rho(double rho) {
    if (!(rho >= 0.0) || rho > 1.0) throw RhoOutOfRange("rho must lie in [0, 1]");
    if (rho == 1.0) throw RhoOutOfRange("rho = 1 has no finite loop weight");
    return 2.0 * rho * rho / (1.0 - rho * rho);
}

PositionDistribution::PositionDistribution(int half_width, std::vector<double> prob)
    : half_width_(half_width), prob_(std::move(prob)) {
    if (half_width_ < 0 || prob_.size() != 2 * static_cast<std::size_t>(half_width_) + 1)
        throw DimensionMismatch("distribution needs 2*half_width+1 entries");
}

double PositionDistribution::at(int position) const {
    if (position < -half_width_ || position > half_width_)
        throw VertexOutOfRange("position outside the lattice");
    return prob_[static_cast<std::size_t>(position + half_width_)];
}

double PositionDistribution::total() const {
    double acc = 0.0;
    for (double v : prob_) acc += v;
    return acc;
}

PositionDistribution simulate_line(const LineSimConfig& config) {
    if (config.steps < 1) throw Error("simulate_line needs at least one step");
    const double l = effective_loop_weight(config);
    if (l == 0.0) return run_two_state(config);
    return run_three_state(lack_coin(l), config);
}

PeakSpeeds peak_velocity(const PositionDistribution& dist, int steps) {
    if (steps < 20) throw std::invalid_argument("peak_velocity needs steps >= 20");
    if (steps > dist.half_width())
        throw DimensionMismatch("distribution narrower than the step count");
    // local max over a +-2 window, so single-site parity ripples don't count
    const auto is_local_max = [&](int x) {
        const double v = dist.at(x);
        for (int d = 1; d <= 2; ++d) {
            if (x + d <= dist.half_width() && v < dist.at(x + d)) return false;
            if (x - d >= -dist.half_width() && v < dist.at(x - d)) return false;
        }
        return true;
    };
    PeakSpeeds speeds{0.0, 0.0};
    bool found_right = false, found_left = false;
    for (int x = steps; x > 0; --x)
        if (dist.at(x) >= kPeakThreshold && is_local_max(x)) {
            speeds.right = static_cast<double>(x) / steps;
            found_right = true;
            break;
        }
    for (int x = -steps; x < 0; ++x)
        if (dist.at(x) >= kPeakThreshold && is_local_max(x)) {
            speeds.left = static_cast<double>(x) / steps;
            found_left = true;
            break;
        }
    if (!found_left || !found_right)
        throw NoPeakFound("no side peak above threshold " + std::to_string(kPeakThreshold));
    return speeds;
}

}  // namespace wqwalk

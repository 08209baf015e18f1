// types.hpp — amplitude-vector basics used by every module
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "wqwalk/errors.hpp"

namespace wqwalk {

using Complex = std::complex<double>;
using Vertex = std::uint32_t;

/// Amplitudes indexed by the arc order of a WeightedGraph.
using ArcState = std::vector<Complex>;

inline double l2_norm(const ArcState& s) {
    double acc = 0.0;
    for (const Complex& a : s) acc += std::norm(a);
    return std::sqrt(acc);
}

inline void normalize(ArcState& s) {
    const double n = l2_norm(s);
    if (n == 0.0) throw Error("cannot normalize the zero state");
    for (Complex& a : s) a /= n;
}

/// <a|b>, conjugate-linear in the first argument.
inline Complex inner(const ArcState& a, const ArcState& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner product of unequal dimensions");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double max_abs_diff(const ArcState& a, const ArcState& b) {
    if (a.size() != b.size()) throw DimensionMismatch("comparing states of unequal dimensions");
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

/// Haar-ish random unit vector: i.i.d. complex normals, normalized.
inline ArcState random_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ArcState s(dim);
    for (Complex& a : s) a = Complex{gauss(rng), gauss(rng)};
    normalize(s);
    return s;
}

}  // namespace wqwalk

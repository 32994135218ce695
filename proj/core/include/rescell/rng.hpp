#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rescell/errors.hpp"

namespace rescell {

// The engine keeps one generator per subsystem, all derived from the master
// seed, so adding draws to one subsystem never shifts another subsystem's
// sequence. Policies share streams across arms of a paired comparison.
//
// std::mt19937_64 output is fully specified by the standard; the
// distribution transforms below are written out by hand because the standard
// library's distributions are implementation-defined and would break
// cross-toolchain reproducibility.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for stream `index` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

/// Uniform index in [0, n).
inline std::size_t uniform_index(Rng& g, std::size_t n) {
    std::size_t i = static_cast<std::size_t>(uniform01(g) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

/// Standard normal via Box-Muller; consumes exactly two uniforms per call.
inline double normal(Rng& g, double mean = 0.0, double sigma = 1.0) {
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    // Guard log(0).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + sigma * z;
}

/// Poisson count by Knuth's product-of-uniforms method. Adequate for the
/// per-tick arrival intensities this simulator deals in.
inline int poisson(Rng& g, double lambda) {
    if (lambda < 0.0) throw RangeError("poisson: negative rate");
    if (lambda == 0.0) return 0;
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= uniform01(g);
    } while (p > limit);
    return k - 1;
}

/// Draw an index from a categorical distribution given per-entry weights.
inline std::size_t categorical(Rng& g, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw RangeError("categorical: weights must sum to a positive value");
    double u = uniform01(g) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

/// The per-subsystem generators used by one simulation run.
struct RngStreams {
    Rng arrivals;
    Rng demands;
    Rng shadowing;
    Rng mobility;
    Rng harvest;
    Rng fading;
    Rng los;

    explicit RngStreams(std::uint64_t master)
        : arrivals(derive_seed(master, 0)),
          demands(derive_seed(master, 1)),
          shadowing(derive_seed(master, 2)),
          mobility(derive_seed(master, 3)),
          harvest(derive_seed(master, 4)),
          fading(derive_seed(master, 5)),
          los(derive_seed(master, 6)) {}
};

}  // namespace rescell

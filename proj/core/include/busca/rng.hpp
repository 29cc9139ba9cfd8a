#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace busca {

/// Seeded generator with hand-rolled variate transforms so that a seed
/// produces the same stream on every platform (std::*_distribution is
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Exponential with the given mean, strictly positive.
    double exponential(double mean) {
        double u;
        do {
            u = 1.0 - uniform(); // (0, 1]
        } while (u <= 0.0);
        return -mean * std::log(u);
    }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1;
        do {
            u1 = 1.0 - uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent per-item seeds from a
/// base seed so worker scheduling never changes results.
[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace busca

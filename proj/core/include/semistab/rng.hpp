#pragma once

#include <cmath>
#include <cstdint>

#include "semistab/complex_matrix.hpp"

namespace semistab {

/// splitmix64 stream with Box-Muller gaussians. Self-contained so seeded
/// experiments reproduce bit-for-bit; the standard library's distributions
/// are implementation-defined and would tie outputs to one libstdc++.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x5bd1e995u)) {}

    /// Independent stream for one trial of a seeded suite. Streams derived
    /// from (seed, trial) are order-independent across trials.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng r(0);
        r.state_ = mix(mix(seed) ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
        return r;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    std::uint64_t uniform_index(std::uint64_t lo, std::uint64_t hi) {
        return lo + next_u64() % (hi - lo + 1);
    }

    /// Standard normal via Box-Muller (pair cached).
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Complex gaussian with independent N(0, 1/2) parts (unit variance).
    Complex gaussian_complex() {
        const double s = std::sqrt(0.5);
        return Complex{s * gaussian(), s * gaussian()};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace semistab

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "yager/distribution.hpp"
#include "yager/error.hpp"

namespace yager {

struct SimplexSamplerConfig {
    std::uint64_t seed = 0;
    std::size_t n = 2;
    std::size_t trials = 1;
};

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based stream: the state is a pure function of the key, so a trial
// can be regenerated without touching any other trial.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0, 1).
    double next_open_unit() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

constexpr std::uint64_t trial_key(std::uint64_t seed, std::uint64_t n,
                                  std::uint64_t trial_index) noexcept {
    return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ trial_index);
}

}  // namespace detail

/// Draws a point uniformly from the (n-1)-simplex (flat Dirichlet) by
/// normalizing n unit-exponential variates. Deterministic in
/// (seed, n, trial_index) and independent of any other call.
inline Distribution sample_uniform_simplex(const SimplexSamplerConfig& config,
                                           std::size_t trial_index) {
    if (config.n < 2) {
        throw Error(Errc::TooFewOutcomes,
                    "sampler needs n >= 2, got " + std::to_string(config.n));
    }
    if (trial_index >= config.trials) {
        throw Error(Errc::InvalidArgument, "trial index " + std::to_string(trial_index) +
                                               " out of range for " +
                                               std::to_string(config.trials) + " trials");
    }
    detail::SplitMix64 rng(detail::trial_key(config.seed, config.n, trial_index));
    std::vector<double> draws(config.n);
    double total = 0.0;
    for (double& x : draws) {
        x = -std::log(rng.next_open_unit());
        total += x;
    }
    for (double& x : draws) x /= total;
    return Distribution::make(draws);
}

}  // namespace yager

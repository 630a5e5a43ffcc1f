#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace testing_support {

inline double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Reproducible log-uniform sampler for property sweeps.
class LogUniform {
public:
    explicit LogUniform(std::uint64_t seed) : rng_(seed) {}
    double operator()(double lo, double hi)
    {
        return std::exp(std::log(lo) + unit_(rng_) * (std::log(hi) - std::log(lo)));
    }
    double uniform(double lo, double hi) { return lo + unit_(rng_) * (hi - lo); }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace testing_support

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qwalk/coin.hpp"

namespace qwalk::test {

inline constexpr double pi = std::numbers::pi;

// Fixed-seed generators so failures reproduce.
class Gen {
public:
    explicit Gen(unsigned seed = 20240611u) : rng_(seed) {}

    double angle() { return std::uniform_real_distribution<double>(-2 * pi, 2 * pi)(rng_); }
    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    CoinParams coin() { return {angle(), angle(), angle()}; }
    InitialCoin init() { return {angle(), angle()}; }

private:
    std::mt19937_64 rng_;
};

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace qwalk::test

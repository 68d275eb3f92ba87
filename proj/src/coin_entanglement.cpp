#include "qwalk/coin_entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr double kTraceTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kEigenClip = 1e-12;

double binary_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

}  // namespace

double ReducedCoinDensity::purity() const {
    double sum = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            sum += std::norm(rho(r, c));
        }
    }
    return sum;
}

std::array<double, 2> ReducedCoinDensity::eigenvalues() const {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
    const double mid = 0.5 * (a + d);
    return {mid - half_gap, mid + half_gap};
}

ReducedCoinDensity reduced_coin_density(const WalkerState& state) {
    const auto amps = state.amplitudes();
    Complex r00, r01, r11;
    for (std::size_t i = 0; i + 1 < amps.size(); i += 2) {
        r00 += std::norm(amps[i]);
        r11 += std::norm(amps[i + 1]);
        r01 += amps[i] * std::conj(amps[i + 1]);
    }
    return {CoinMatrix(r00, r01, std::conj(r01), r11)};
}

double von_neumann_entropy(const ReducedCoinDensity& density) {
    const auto& rho = density.rho;
    if (rho.max_abs_diff(rho.adjoint()) > kHermitianTolerance) {
        throw Error(ErrorKind::invalid_density, "coin density matrix is not Hermitian");
    }
    if (std::abs(density.trace() - 1.0) > kTraceTolerance) {
        throw Error(ErrorKind::invalid_density, "coin density matrix does not have unit trace");
    }
    double entropy = 0.0;
    for (double lambda : density.eigenvalues()) {
        if (lambda < -kEigenClip || lambda > 1.0 + kEigenClip) {
            throw Error(ErrorKind::invalid_density, "coin density matrix eigenvalue outside [0,1]");
        }
        entropy += binary_term(std::clamp(lambda, 0.0, 1.0));
    }
    return entropy;
}

EntanglementTrace entropy_trace(const CoinParams& coin, const InitialCoin& init, int max_steps) {
    if (max_steps < 1) {
        throw Error(ErrorKind::invalid_parameter, "entropy trace needs at least one step");
    }
    const CoinMatrix c = build_coin(coin);
    WalkerState state = initial_state(init, Topology::line_for_steps(max_steps), 0);
    EntanglementTrace trace;
    for (int t = 1; t <= max_steps; ++t) {
        state.advance(c);
        trace.push(t, von_neumann_entropy(reduced_coin_density(state)));
    }
    return trace;
}

}  // namespace qwalk

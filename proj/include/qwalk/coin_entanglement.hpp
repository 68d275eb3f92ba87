#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/entanglement_trace.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

// Reduced density matrix of the coin, rho(b, b') = sum_j a(j,b) conj(a(j,b')).
struct ReducedCoinDensity {
    CoinMatrix rho;

    double trace() const { return rho(0, 0).real() + rho(1, 1).real(); }
    double purity() const;
    // Both eigenvalues, ascending, from the closed form for a Hermitian 2x2.
    std::array<double, 2> eigenvalues() const;
};

ReducedCoinDensity reduced_coin_density(const WalkerState& state);

// -sum lambda log2 lambda, in bits. Eigenvalues within 1e-12 outside [0,1]
// are clipped; anything further out, a trace off by more than 1e-12, or a
// non-Hermitian input raises invalid_density.
double von_neumann_entropy(const ReducedCoinDensity& density);

// E_c(t) for t = 1..max_steps, walker starting at site 0 of a line sized to
// max_steps. Throws invalid_parameter for max_steps < 1.
EntanglementTrace entropy_trace(const CoinParams& coin, const InitialCoin& init, int max_steps);

}  // namespace qwalk

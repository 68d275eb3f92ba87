#pragma once

#include <map>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/spatial.hpp"

namespace qwalk {

// Explicit joint lattice state of at most three projected walkers. A
// configuration lists the site of each particle in order.
struct LatticeStateSmall {
    int particles = 0;
    int window_first = 0;
    int window_size = 0;
    std::map<std::vector<int>, Complex> amplitudes;

    // Zero for configurations not stored.
    Complex amplitude(const std::vector<int>& configuration) const;
    double norm_squared() const;
};

inline constexpr int kOracleMaxParticles = 3;
inline constexpr int kOracleMaxSteps = 6;

// Product of the per-particle projected lattice vectors over the
// Meyer-Wallach window. Throws oracle_too_large past 3 particles or 6 steps.
LatticeStateSmall lattice_state_small(const ParticleEnsemble& ensemble, int steps, int coin);

// tr rho_j^2 of one lattice site obtained by tracing every other site out of
// the joint state, with rho_j built over the full 2^M occupation basis.
double brute_force_site_purity(const LatticeStateSmall& state, int site);

// Meyer-Wallach value from the explicit joint state: no product-form shortcut.
double brute_force_mw(const ParticleEnsemble& ensemble, int steps, int coin);

}  // namespace qwalk

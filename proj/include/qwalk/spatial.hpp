#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/entanglement_trace.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

// Post-selected single-walker lattice state: the coin-b branch, renormalized.
struct Projection {
    double probability = 0.0;
    Topology topology;
    // lattice[i] belongs to topology.site_at(i).
    std::vector<Complex> lattice;

    Complex at(int site) const;
};

inline constexpr double kZeroProjectionThreshold = 1e-12;

// Throws zero_projection when the coin-b branch carries less than 1e-12 of
// the probability, and invalid_parameter for b outside {0, 1}.
Projection project_coin(const WalkerState& state, int coin);

// M distinguishable, non-interacting walkers sharing one coin operation.
struct ParticleEnsemble {
    Topology topology = Topology::line(1);
    CoinParams coin;
    // Either one entry shared by every particle or exactly one per particle.
    std::vector<InitialCoin> inits;
    std::vector<int> sites;

    int particles() const { return static_cast<int>(sites.size()); }
    const InitialCoin& init_for(int particle) const;

    // Throws invalid_parameter / invalid_site on inconsistent fields.
    void validate() const;

    // M contiguous sites centered on 0: -(M-1)/2..(M-1)/2 for odd M and
    // -M/2+1..M/2 for even M, on a line long enough for max_steps.
    static ParticleEnsemble on_line(int particles, const CoinParams& coin,
                                    const InitialCoin& init, int max_steps);
    // One walker on every site of an n-cycle.
    static ParticleEnsemble on_cycle(int n, const CoinParams& coin, const InitialCoin& init);
};

std::vector<int> centered_sites(int particles);

// a(i, j): probability that projected particle i sits on site j, together
// with the averaging window of the Meyer-Wallach sum.
struct OccupationTable {
    Topology topology = Topology::line(1);
    int projection = 0;
    int step = 0;
    int particles = 0;
    // particles x site_count, row-major over the topology's stored sites.
    std::vector<double> probs;
    int window_first = 0;
    int window_size = 0;

    // Zero for sites outside the stored lattice.
    double a(int particle, int site) const;
};

// Evolves every particle t steps, projects each onto coin b, and tabulates
// the occupation probabilities. On a line the window starts t sites left of
// the leftmost particle and holds 2t + M + 1 sites for contiguous placements.
OccupationTable occupation_probs(const ParticleEnsemble& ensemble, int steps, int coin);

// tr rho_j^2 = prod_i [a(i,j)^2 + (1 - a(i,j))^2].
double site_purity(const OccupationTable& table, int site);

// 2^M/(2^M-1) * (1 - (1/L) sum_{j in window} tr rho_j^2).
double meyer_wallach(const OccupationTable& table);

// meyer_wallach(occupation_probs(ensemble, t, coin)) for t = 1..max_steps,
// evolving the walkers incrementally.
EntanglementTrace mw_trace(const ParticleEnsemble& ensemble, int max_steps, int coin);

}  // namespace qwalk

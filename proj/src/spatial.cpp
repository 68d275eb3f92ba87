#include "qwalk/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void require_coin_label(int coin) {
    if (coin != 0 && coin != 1) {
        throw Error(ErrorKind::invalid_parameter,
                    "projection coin must be 0 or 1, got " + std::to_string(coin));
    }
}

std::vector<WalkerState> initial_walkers(const ParticleEnsemble& ensemble) {
    std::vector<WalkerState> walkers;
    walkers.reserve(ensemble.sites.size());
    for (int i = 0; i < ensemble.particles(); ++i) {
        walkers.push_back(initial_state(ensemble.init_for(i), ensemble.topology, ensemble.sites[i]));
    }
    return walkers;
}

OccupationTable tabulate(const ParticleEnsemble& ensemble, const std::vector<WalkerState>& walkers,
                         int steps, int coin) {
    const Topology& topo = ensemble.topology;
    const int n = topo.site_count();

    OccupationTable table;
    table.topology = topo;
    table.projection = coin;
    table.step = steps;
    table.particles = ensemble.particles();
    table.probs.resize(static_cast<std::size_t>(table.particles) * n);

    for (int i = 0; i < table.particles; ++i) {
        Projection proj = [&] {
            try {
                return project_coin(walkers[i], coin);
            } catch (const Error& e) {
                throw Error(e.kind(), "particle " + std::to_string(i) + ": " + e.what());
            }
        }();
        for (int k = 0; k < n; ++k) {
            table.probs[static_cast<std::size_t>(i) * n + k] = std::norm(proj.lattice[k]);
        }
    }

    if (topo.is_cycle()) {
        table.window_first = 0;
        table.window_size = n;
    } else {
        const auto [lo, hi] = std::minmax_element(ensemble.sites.begin(), ensemble.sites.end());
        table.window_first = *lo - steps;
        table.window_size = (*hi - *lo + 1) + 2 * steps + 1;
    }
    return table;
}

}  // namespace

Complex Projection::at(int site) const {
    return topology.contains(site) ? lattice[topology.index_of(site)] : Complex{};
}

Projection project_coin(const WalkerState& state, int coin) {
    require_coin_label(coin);
    const auto amps = state.amplitudes();
    const int n = state.site_count();
    double prob = 0.0;
    for (int i = 0; i < n; ++i) {
        prob += std::norm(amps[2 * i + coin]);
    }
    if (!(prob >= kZeroProjectionThreshold)) {
        throw Error(ErrorKind::zero_projection,
                    "coin-" + std::to_string(coin) + " branch has probability " + std::to_string(prob) +
                        " after " + std::to_string(state.steps()) + " steps");
    }
    const double scale = 1.0 / std::sqrt(prob);
    std::vector<Complex> lattice(n);
    for (int i = 0; i < n; ++i) {
        lattice[i] = amps[2 * i + coin] * scale;
    }
    return {prob, state.topology(), std::move(lattice)};
}

const InitialCoin& ParticleEnsemble::init_for(int particle) const {
    return inits.size() == 1 ? inits.front() : inits.at(particle);
}

void ParticleEnsemble::validate() const {
    if (sites.empty()) {
        throw Error(ErrorKind::invalid_parameter, "ensemble needs at least one particle");
    }
    if (inits.size() != 1 && inits.size() != sites.size()) {
        throw Error(ErrorKind::invalid_parameter,
                    "ensemble needs one shared initial coin or one per particle");
    }
    std::set<int> seen;
    for (int s : sites) {
        if (!topology.contains(s)) {
            throw Error(ErrorKind::invalid_site, "particle site " + std::to_string(s) + " is off the lattice");
        }
        if (!seen.insert(s).second) {
            throw Error(ErrorKind::invalid_site, "two particles share site " + std::to_string(s));
        }
    }
}

std::vector<int> centered_sites(int particles) {
    if (particles < 1) {
        throw Error(ErrorKind::invalid_parameter, "particle count must be positive");
    }
    const int first = particles % 2 == 1 ? -(particles - 1) / 2 : -particles / 2 + 1;
    std::vector<int> sites(particles);
    for (int i = 0; i < particles; ++i) {
        sites[i] = first + i;
    }
    return sites;
}

ParticleEnsemble ParticleEnsemble::on_line(int particles, const CoinParams& coin,
                                           const InitialCoin& init, int max_steps) {
    auto sites = centered_sites(particles);
    const int reach = std::max(-sites.front(), sites.back());
    // One spare site on each side so the window's trailing empty site is stored too.
    ParticleEnsemble e{Topology::line_for_steps(max_steps + 1, reach), coin, {init}, std::move(sites)};
    e.validate();
    return e;
}

ParticleEnsemble ParticleEnsemble::on_cycle(int n, const CoinParams& coin, const InitialCoin& init) {
    std::vector<int> sites(n);
    for (int i = 0; i < n; ++i) {
        sites[i] = i;
    }
    ParticleEnsemble e{Topology::cycle(n), coin, {init}, std::move(sites)};
    e.validate();
    return e;
}

double OccupationTable::a(int particle, int site) const {
    if (!topology.contains(site)) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(particle) * topology.site_count() + topology.index_of(site)];
}

OccupationTable occupation_probs(const ParticleEnsemble& ensemble, int steps, int coin) {
    require_coin_label(coin);
    ensemble.validate();
    if (steps < 0) {
        throw Error(ErrorKind::invalid_parameter, "step count must be non-negative");
    }
    const CoinMatrix c = build_coin(ensemble.coin);
    auto walkers = initial_walkers(ensemble);
    for (auto& w : walkers) {
        for (int t = 0; t < steps; ++t) {
            w.advance(c);
        }
    }
    return tabulate(ensemble, walkers, steps, coin);
}

double site_purity(const OccupationTable& table, int site) {
    double purity = 1.0;
    for (int i = 0; i < table.particles; ++i) {
        const double occ = table.a(i, site);
        purity *= occ * occ + (1.0 - occ) * (1.0 - occ);
    }
    return purity;
}

double meyer_wallach(const OccupationTable& table) {
    double sum = 0.0;
    for (int j = table.window_first; j < table.window_first + table.window_size; ++j) {
        sum += site_purity(table, j);
    }
    // 2^M / (2^M - 1) written so that large M does not overflow.
    const double scale = 1.0 / (1.0 - std::ldexp(1.0, -table.particles));
    const double e = scale * (1.0 - sum / table.window_size);
    // Rounding near the bounds is clipped; anything further out is a bug.
    constexpr double clip = 1e-12;
    if (e < -clip || e > 1.0 + clip) {
        throw Error(ErrorKind::invalid_density, "Meyer-Wallach value " + std::to_string(e) + " outside [0, 1]");
    }
    return std::clamp(e, 0.0, 1.0);
}

EntanglementTrace mw_trace(const ParticleEnsemble& ensemble, int max_steps, int coin) {
    require_coin_label(coin);
    ensemble.validate();
    if (max_steps < 1) {
        throw Error(ErrorKind::invalid_parameter, "trace needs at least one step");
    }
    const CoinMatrix c = build_coin(ensemble.coin);
    auto walkers = initial_walkers(ensemble);
    EntanglementTrace trace;
    for (int t = 1; t <= max_steps; ++t) {
        for (auto& w : walkers) {
            w.advance(c);
        }
        trace.push(t, meyer_wallach(tabulate(ensemble, walkers, t, coin)));
    }
    return trace;
}

}  // namespace qwalk

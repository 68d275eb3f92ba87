#include "qwalk/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr int kAway = INT_MIN;

void check_size(const ParticleEnsemble& ensemble, int steps) {
    if (ensemble.particles() > kOracleMaxParticles || steps > kOracleMaxSteps) {
        throw Error(ErrorKind::oracle_too_large,
                    "brute-force oracle is limited to " + std::to_string(kOracleMaxParticles) +
                        " particles and " + std::to_string(kOracleMaxSteps) + " steps");
    }
    if (ensemble.topology.is_cycle() && ensemble.topology.site_count() > 16) {
        throw Error(ErrorKind::oracle_too_large, "brute-force oracle is limited to cycles of 16 sites");
    }
}

}  // namespace

Complex LatticeStateSmall::amplitude(const std::vector<int>& configuration) const {
    const auto it = amplitudes.find(configuration);
    return it == amplitudes.end() ? Complex{} : it->second;
}

double LatticeStateSmall::norm_squared() const {
    double sum = 0.0;
    for (const auto& [config, amp] : amplitudes) {
        sum += std::norm(amp);
    }
    return sum;
}

LatticeStateSmall lattice_state_small(const ParticleEnsemble& ensemble, int steps, int coin) {
    ensemble.validate();
    check_size(ensemble, steps);
    if (steps < 0) {
        throw Error(ErrorKind::invalid_parameter, "step count must be non-negative");
    }

    const CoinMatrix c = build_coin(ensemble.coin);
    const int m = ensemble.particles();
    std::vector<Projection> projected;
    for (int i = 0; i < m; ++i) {
        auto w = evolve(initial_state(ensemble.init_for(i), ensemble.topology, ensemble.sites[i]), c, steps);
        projected.push_back(project_coin(w, coin));
    }

    LatticeStateSmall state;
    state.particles = m;
    // Same window as the product-form path, derived here independently.
    if (ensemble.topology.is_cycle()) {
        state.window_first = 0;
        state.window_size = ensemble.topology.site_count();
    } else {
        int lo = ensemble.sites[0], hi = ensemble.sites[0];
        for (int s : ensemble.sites) {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        state.window_first = lo - steps;
        state.window_size = hi - lo + 2 * steps + 2;
    }

    // Odometer over window^M configurations.
    std::vector<int> config(m, state.window_first);
    const int last = state.window_first + state.window_size - 1;
    while (true) {
        Complex amp = 1.0;
        for (int i = 0; i < m && amp != Complex{}; ++i) {
            amp *= projected[i].at(config[i]);
        }
        if (amp != Complex{}) {
            state.amplitudes.emplace(config, amp);
        }
        int k = 0;
        while (k < m && config[k] == last) {
            config[k] = state.window_first;
            ++k;
        }
        if (k == m) {
            break;
        }
        ++config[k];
    }
    return state;
}

double brute_force_site_purity(const LatticeStateSmall& state, int site) {
    const int dim = 1 << state.particles;
    // Rest-of-lattice key: every particle's site, with particles sitting on
    // `site` marked as away. Two configurations interfere in rho_site only if
    // their rest keys agree.
    std::map<std::vector<int>, std::vector<Complex>> branches;
    for (const auto& [config, amp] : state.amplitudes) {
        int pattern = 0;
        std::vector<int> rest = config;
        for (int i = 0; i < state.particles; ++i) {
            if (config[i] == site) {
                pattern |= 1 << i;
                rest[i] = kAway;
            }
        }
        auto& v = branches[rest];
        v.resize(dim);
        v[pattern] += amp;
    }

    std::vector<Complex> rho(static_cast<std::size_t>(dim) * dim);
    for (const auto& [rest, v] : branches) {
        for (int k = 0; k < dim; ++k) {
            for (int l = 0; l < dim; ++l) {
                rho[static_cast<std::size_t>(k) * dim + l] += v[k] * std::conj(v[l]);
            }
        }
    }
    double purity = 0.0;
    for (const auto& x : rho) {
        purity += std::norm(x);
    }
    return purity;
}

double brute_force_mw(const ParticleEnsemble& ensemble, int steps, int coin) {
    const auto state = lattice_state_small(ensemble, steps, coin);
    double sum = 0.0;
    for (int j = state.window_first; j < state.window_first + state.window_size; ++j) {
        sum += brute_force_site_purity(state, j);
    }
    const double d = std::pow(2.0, state.particles);
    return d / (d - 1.0) * (1.0 - sum / state.window_size);
}

}  // namespace qwalk

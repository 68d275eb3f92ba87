#include "qwalk/walker.hpp"

#include <string>
#include <utility>

#include "qwalk/error.hpp"

namespace qwalk {

Topology Topology::line(int extent) {
    if (extent < 1) {
        throw Error(ErrorKind::invalid_parameter,
                    "line extent must be at least 1, got " + std::to_string(extent));
    }
    return Topology(Line{extent});
}

Topology Topology::line_for_steps(int steps, int reach) {
    if (steps < 0 || reach < 0) {
        throw Error(ErrorKind::invalid_parameter, "step count and reach must be non-negative");
    }
    return line(2 * (steps + reach) + 1);
}

Topology Topology::cycle(int n) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_parameter,
                    "cycle needs at least 2 sites, got " + std::to_string(n));
    }
    return Topology(Cycle{n});
}

int Topology::site_count() const {
    return std::visit([](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Line>) {
            return s.extent;
        } else {
            return s.n;
        }
    }, shape_);
}

int Topology::origin() const {
    return is_line() ? site_count() / 2 : 0;
}

WalkerState::WalkerState(Topology topology, std::vector<Complex> amplitudes, int steps)
    : topology_(topology), amplitudes_(std::move(amplitudes)), steps_(steps) {
    if (amplitudes_.size() != 2 * static_cast<std::size_t>(topology_.site_count())) {
        throw Error(ErrorKind::invalid_parameter,
                    "amplitude array must hold two coin components per site");
    }
}

Complex WalkerState::amplitude(int site, int coin) const {
    if (coin != 0 && coin != 1) {
        throw Error(ErrorKind::invalid_parameter, "coin index must be 0 or 1");
    }
    if (!topology_.contains(site)) {
        if (topology_.is_cycle()) {
            throw Error(ErrorKind::invalid_site,
                        "site " + std::to_string(site) + " is not on the cycle");
        }
        return {};
    }
    return amplitudes_[2 * topology_.index_of(site) + coin];
}

double WalkerState::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

void WalkerState::advance(const CoinMatrix& coin) {
    const int n = site_count();
    const Complex c00 = coin(0, 0), c01 = coin(0, 1), c10 = coin(1, 0), c11 = coin(1, 1);

    if (topology_.is_line()) {
        // Coin-0 at index 0 would move to -1, coin-1 at n-1 would move to n.
        const Complex left = c00 * amplitudes_[0] + c01 * amplitudes_[1];
        const Complex right = c10 * amplitudes_[2 * (n - 1)] + c11 * amplitudes_[2 * (n - 1) + 1];
        if (left != Complex{} || right != Complex{}) {
            throw Error(ErrorKind::insufficient_extent,
                        "line of " + std::to_string(n) + " sites is too short for step " +
                            std::to_string(steps_ + 1));
        }
    }

    scratch_.assign(amplitudes_.size(), Complex{});
    for (int i = 0; i < n; ++i) {
        const Complex up = amplitudes_[2 * i];
        const Complex down = amplitudes_[2 * i + 1];
        const Complex to_left = c00 * up + c01 * down;
        const Complex to_right = c10 * up + c11 * down;
        const int l = i == 0 ? n - 1 : i - 1;
        const int r = i == n - 1 ? 0 : i + 1;
        scratch_[2 * l] = to_left;
        scratch_[2 * r + 1] = to_right;
    }
    std::swap(amplitudes_, scratch_);
    ++steps_;
}

WalkerState initial_state(const InitialCoin& coin, const Topology& topology, int site) {
    if (!topology.contains(site)) {
        throw Error(ErrorKind::invalid_site,
                    "initial site " + std::to_string(site) + " is outside the lattice");
    }
    const auto v = coin_vector(coin);
    std::vector<Complex> amps(2 * static_cast<std::size_t>(topology.site_count()));
    const int idx = topology.index_of(site);
    amps[2 * idx] = v[0];
    amps[2 * idx + 1] = v[1];
    return WalkerState(topology, std::move(amps));
}

WalkerState step(WalkerState state, const CoinMatrix& coin) {
    state.advance(coin);
    return state;
}

WalkerState evolve(WalkerState state, const CoinMatrix& coin, int steps) {
    if (steps < 0) {
        throw Error(ErrorKind::invalid_parameter, "step count must be non-negative");
    }
    for (int t = 0; t < steps; ++t) {
        state.advance(coin);
    }
    return state;
}

}  // namespace qwalk

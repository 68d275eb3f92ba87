#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void require_line(const PositionDistribution& dist, const char* what) {
    if (!dist.topology.is_line()) {
        throw Error(ErrorKind::unsupported_topology,
                    std::string(what) + " is only defined on a line");
    }
}

}  // namespace

double PositionDistribution::at(int site) const {
    return topology.contains(site) ? probs[topology.index_of(site)] : 0.0;
}

double PositionDistribution::total() const {
    double sum = 0.0;
    for (double p : probs) {
        sum += p;
    }
    return sum;
}

PositionDistribution position_distribution(const WalkerState& state) {
    const auto amps = state.amplitudes();
    std::vector<double> probs(state.site_count());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(amps[2 * i]) + std::norm(amps[2 * i + 1]);
    }
    return {state.topology(), std::move(probs)};
}

double mean_position(const PositionDistribution& dist) {
    require_line(dist, "mean position");
    double m = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        m += dist.topology.site_at(static_cast<int>(i)) * dist.probs[i];
    }
    return m;
}

double variance(const PositionDistribution& dist) {
    require_line(dist, "variance");
    const double m = mean_position(dist);
    double v = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double d = dist.topology.site_at(static_cast<int>(i)) - m;
        v += d * d * dist.probs[i];
    }
    return v;
}

double symmetry_defect(const PositionDistribution& dist) {
    require_line(dist, "symmetry defect");
    const int reach = std::max(dist.topology.max_site(), -dist.topology.min_site());
    double worst = 0.0;
    for (int j = 1; j <= reach; ++j) {
        worst = std::max(worst, std::abs(dist.at(j) - dist.at(-j)));
    }
    return worst;
}

}  // namespace qwalk

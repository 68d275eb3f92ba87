#pragma once

#include <vector>

#include "qwalk/walker.hpp"

namespace qwalk {

// P(site) over the whole stored lattice; probs[i] belongs to
// topology.site_at(i).
struct PositionDistribution {
    Topology topology;
    std::vector<double> probs;

    double at(int site) const;
    double total() const;
};

PositionDistribution position_distribution(const WalkerState& state);

// First moment of the signed site label. Line only (unsupported_topology on a
// cycle, which has no canonical embedding in Z).
double mean_position(const PositionDistribution& dist);

// Second central moment of the signed site label. Line only.
double variance(const PositionDistribution& dist);

// max_j |P(j) - P(-j)| about site 0. Line only.
double symmetry_defect(const PositionDistribution& dist);

}  // namespace qwalk

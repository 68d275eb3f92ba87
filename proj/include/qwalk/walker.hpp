#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Open chain of `extent` sites. Site labels are signed with label 0 stored at
// the array center (index extent / 2).
struct Line {
    int extent = 1;
    bool operator==(const Line&) const = default;
};

// Closed chain of n sites labelled 0..n-1; the shift wraps mod n.
struct Cycle {
    int n = 2;
    bool operator==(const Cycle&) const = default;
};

class Topology {
public:
    // Throws invalid_parameter for extent < 1.
    static Topology line(int extent);
    // Smallest centered line on which `steps` steps from any site in
    // [-reach, reach] never touch the array boundary.
    static Topology line_for_steps(int steps, int reach = 0);
    // Throws invalid_parameter for n < 2.
    static Topology cycle(int n);

    bool is_cycle() const { return std::holds_alternative<Cycle>(shape_); }
    bool is_line() const { return std::holds_alternative<Line>(shape_); }

    int site_count() const;
    // Array index of site label 0.
    int origin() const;
    int min_site() const { return -origin(); }
    int max_site() const { return site_count() - 1 - origin(); }

    bool contains(int site) const { return site >= min_site() && site <= max_site(); }
    int index_of(int site) const { return site + origin(); }
    int site_at(int index) const { return index - origin(); }

    const std::variant<Line, Cycle>& shape() const { return shape_; }

    bool operator==(const Topology&) const = default;

private:
    explicit Topology(std::variant<Line, Cycle> shape) : shape_(shape) {}

    std::variant<Line, Cycle> shape_;
};

// Single-walker amplitudes over (site, coin). Storage is site-major with the
// two coin components adjacent: amplitudes()[2 * index + coin].
class WalkerState {
public:
    WalkerState(Topology topology, std::vector<Complex> amplitudes, int steps = 0);

    const Topology& topology() const { return topology_; }
    int steps() const { return steps_; }
    int site_count() const { return topology_.site_count(); }

    // Sites outside the stored range have zero amplitude.
    Complex amplitude(int site, int coin) const;
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    double norm_squared() const;

    // One application of shift * (coin (x) 1) in place. On a line, throws
    // insufficient_extent (leaving the state untouched) if any amplitude would
    // leave the array.
    void advance(const CoinMatrix& coin);

private:
    Topology topology_;
    std::vector<Complex> amplitudes_;
    std::vector<Complex> scratch_;
    int steps_ = 0;
};

// Walker localized at `site` with coin state from `coin`. Throws invalid_site.
WalkerState initial_state(const InitialCoin& coin, const Topology& topology, int site = 0);

WalkerState step(WalkerState state, const CoinMatrix& coin);

// `steps` applications of step(); throws invalid_parameter for steps < 0.
WalkerState evolve(WalkerState state, const CoinMatrix& coin, int steps);

}  // namespace qwalk

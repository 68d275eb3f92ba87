#include <doctest.h>

#include <algorithm>

#include "qwalk/error.hpp"
#include "qwalk/oracle.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::test::pi;
using qwalk::test::close;

namespace {

const CoinParams hadamard{0, pi / 4, 0};

}  // namespace

TEST_CASE("three-particle lattice state after two Hadamard steps has eight terms") {
    const auto e = ParticleEnsemble::on_line(3, hadamard, InitialCoin::symmetric(), 2);
    const auto state = lattice_state_small(e, 2, 0);
    const Complex g(0.5, 0.5), d(0.5, -0.5);

    CHECK(state.amplitudes.size() == 8);
    CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    // Configurations list the sites of A, B, C.
    CHECK(close(state.amplitude({-3, -2, -1}), g * g * g, 1e-15));
    CHECK(close(state.amplitude({-3, -2, 1}), g * g * d, 1e-15));
    CHECK(close(state.amplitude({-3, 0, -1}), g * g * d, 1e-15));
    CHECK(close(state.amplitude({-1, -2, -1}), g * g * d, 1e-15));
    CHECK(close(state.amplitude({-3, 0, 1}), g * d * d, 1e-15));
    CHECK(close(state.amplitude({-1, 0, -1}), g * d * d, 1e-15));
    CHECK(close(state.amplitude({-1, -2, 1}), g * d * d, 1e-15));
    CHECK(close(state.amplitude({-1, 0, 1}), d * d * d, 1e-15));
}

TEST_CASE("brute-force purity of a shared site is diagonal in occupation") {
    // Site -1 holds A and/or C in the state above: four equally likely
    // patterns {}, {A}, {C}, {A,C}, each with probability 1/4.
    const auto e = ParticleEnsemble::on_line(3, hadamard, InitialCoin::symmetric(), 2);
    const auto state = lattice_state_small(e, 2, 0);
    CHECK(brute_force_site_purity(state, -1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(brute_force_site_purity(state, -3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(brute_force_site_purity(state, 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("oracle reproduces the hand-computed single-walker value") {
    const auto e = ParticleEnsemble::on_line(1, hadamard, InitialCoin::symmetric(), 2);
    CHECK(brute_force_mw(e, 2, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("two localized particles are unentangled") {
    const auto e = ParticleEnsemble::on_line(2, hadamard, InitialCoin::symmetric(), 0);
    CHECK(brute_force_mw(e, 0, 0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("oracle agrees with the product form") {
    for (int m = 1; m <= 3; ++m) {
        for (double theta : {pi / 12, pi / 4, 5 * pi / 12}) {
            const auto e = ParticleEnsemble::on_line(m, {0, theta, 0}, InitialCoin::symmetric(), 6);
            for (int b = 0; b <= 1; ++b) {
                for (int t = 0; t <= 6; ++t) {
                    CAPTURE(m);
                    CAPTURE(theta);
                    CAPTURE(b);
                    CAPTURE(t);
                    REQUIRE(std::abs(meyer_wallach(occupation_probs(e, t, b)) - brute_force_mw(e, t, b)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("oracle agrees with the product form for random coins, inits and placements") {
    test::Gen gen(61);
    for (int k = 0; k < 40; ++k) {
        const int m = gen.between(1, 3);
        ParticleEnsemble e;
        e.topology = Topology::line(41);
        e.coin = {gen.angle(), gen.unit() * 1.3 + 0.1, gen.angle()};
        for (int i = 0; i < m; ++i) {
            e.inits.push_back({gen.unit() * 1.2 + 0.2, gen.angle()});
            int s;
            do {
                s = gen.between(-4, 4);
            } while (std::find(e.sites.begin(), e.sites.end(), s) != e.sites.end());
            e.sites.push_back(s);
        }
        const int t = gen.between(0, 5);
        const int b = gen.between(0, 1);
        REQUIRE(std::abs(meyer_wallach(occupation_probs(e, t, b)) - brute_force_mw(e, t, b)) < 1e-10);
    }
}

TEST_CASE("oracle agrees with the product form on small cycles") {
    for (int n = 2; n <= 3; ++n) {
        const auto e = ParticleEnsemble::on_cycle(n, {0.3, pi / 5, 0.1}, InitialCoin::symmetric());
        for (int t = 0; t <= 6; ++t) {
            REQUIRE(std::abs(meyer_wallach(occupation_probs(e, t, 0)) - brute_force_mw(e, t, 0)) < 1e-10);
        }
    }
}

TEST_CASE("oracle refuses large problems") {
    const auto many = ParticleEnsemble::on_line(4, hadamard, InitialCoin::symmetric(), 2);
    const auto few = ParticleEnsemble::on_line(2, hadamard, InitialCoin::symmetric(), 8);
    try {
        brute_force_mw(many, 2, 0);
        FAIL("expected oracle-too-large");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::oracle_too_large);
    }
    try {
        brute_force_mw(few, 7, 0);
        FAIL("expected oracle-too-large");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::oracle_too_large);
    }
}

#include <numbers>

#include "qwalk/experiments.hpp"

namespace qwalk {

namespace {

constexpr double pi = std::numbers::pi;

RunConfig distribution(std::string name, CoinParams coin, int steps, std::string note = {}) {
    RunConfig c;
    c.kind = ExperimentKind::distribution;
    c.coin = coin;
    c.steps = steps;
    c.preset = std::move(name);
    c.note = std::move(note);
    return c;
}

RunConfig sweep(std::string name, int particles, int steps, int cycle_n, InitialCoin init, std::string note = {}) {
    RunConfig c;
    c.kind = ExperimentKind::theta_sweep;
    c.particles = particles;
    c.steps = steps;
    c.cycle_n = cycle_n;
    c.init = init;
    c.thetas = default_theta_grid();
    c.preset = std::move(name);
    c.note = std::move(note);
    return c;
}

std::vector<Preset> build() {
    std::vector<Preset> out;
    auto add = [&](RunConfig c) { out.push_back({c.preset, std::move(c)}); };

    add(distribution("fig1a", {0, pi / 12, 0}, 100));
    add(distribution("fig1b", {0, pi / 4, 0}, 100));
    add(distribution("fig1c", {0, 5 * pi / 12, 0}, 100));

    add(distribution("fig2a", {pi / 6, pi / 6, 0}, 100));
    add(distribution("fig2b", {0, pi / 6, pi / 6}, 100));
    add(distribution("fig2c", {5 * pi / 12, pi / 3, 0}, 100));
    add(distribution("fig2d", {0, pi / 3, 5 * pi / 12}, 100));

    {
        auto c = distribution("fig4", {0, pi / 4, 0}, 50,
                              "40 particles one per site; caption shows several step counts, 50 chosen; "
                              "probability is the per-particle mean");
        c.particles = 40;
        add(std::move(c));
    }

    {
        RunConfig c;
        c.kind = ExperimentKind::entropy_trace;
        c.steps = 100;
        c.preset = "fig5";
        c.note = "caption plots several theta; pi/4 chosen, override with --theta (pi/12, 5pi/12)";
        add(std::move(c));
    }
    {
        RunConfig c;
        c.kind = ExperimentKind::entropy_trace;
        c.init = {2 * pi / 9, pi / 6};
        c.steps = 100;
        c.preset = "fig6";
        c.note = "caption plots several theta; pi/4 chosen, override with --theta";
        add(std::move(c));
    }

    {
        RunConfig c;
        c.kind = ExperimentKind::phase_diagram;
        c.min_particles = 2;
        c.particles = 16;
        c.steps = 40;
        c.preset = "fig7";
        c.note = "caption gives no particle or step range; particles 2..16 and steps 1..40 chosen";
        add(std::move(c));
    }

    add(sweep("fig8a", 10, 10, 0, InitialCoin::symmetric()));
    add(sweep("fig8b", 20, 20, 0, InitialCoin::symmetric()));
    add(sweep("fig8c", 20, 20, 0, InitialCoin::basis0(),
              "caption omits the particle count for the |0> panel; 20 particles after 20 steps chosen"));

    {
        RunConfig c;
        c.kind = ExperimentKind::mw_cycle;
        c.particles = 10;
        c.cycle_n = 10;
        c.steps = 100;
        c.preset = "fig9";
        c.note = "caption plots several chain sizes; n = M = 10 chosen, override with --particles/--cycle-n";
        add(std::move(c));
    }

    add(sweep("fig10", 20, 20, 20, InitialCoin::symmetric()));
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = build();
    return table;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets()) {
        if (p.name == name) {
            return &p;
        }
    }
    return nullptr;
}

}  // namespace qwalk

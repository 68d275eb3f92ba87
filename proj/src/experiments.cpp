#include "qwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/coin_entanglement.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/spatial.hpp"

namespace qwalk {

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::distribution, "distribution"},
    {ExperimentKind::entropy_trace, "entropy-trace"},
    {ExperimentKind::mw_line, "mw-line"},
    {ExperimentKind::mw_cycle, "mw-cycle"},
    {ExperimentKind::theta_sweep, "theta-sweep"},
    {ExperimentKind::phase_diagram, "phase-diagram"},
    {ExperimentKind::oracle_check, "oracle-check"},
};

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorKind::invalid_parameter, what);
}

PositionDistribution run_distribution(const RunConfig& cfg) {
    const CoinMatrix coin = build_coin(cfg.coin);
    const bool cycle = cfg.cycle_n > 0;
    std::vector<int> sites;
    if (cycle) {
        for (int i = 0; i < cfg.particles; ++i) {
            sites.push_back(i);
        }
    } else {
        sites = centered_sites(cfg.particles);
    }
    const int reach = std::max(-sites.front(), sites.back());
    const Topology topo = cycle ? Topology::cycle(cfg.cycle_n) : Topology::line_for_steps(cfg.steps, reach);

    // Many particles: the per-particle mean, which is again a distribution.
    PositionDistribution total{topo, std::vector<double>(topo.site_count())};
    for (int s : sites) {
        const auto dist = position_distribution(evolve(initial_state(cfg.init, topo, s), coin, cfg.steps));
        for (std::size_t i = 0; i < total.probs.size(); ++i) {
            total.probs[i] += dist.probs[i];
        }
    }
    for (double& p : total.probs) {
        p /= static_cast<double>(sites.size());
    }
    return total;
}

SweepResult run_phase_diagram(const RunConfig& cfg) {
    SweepResult result;
    result.axes = {"particles", "step"};
    result.config = cfg;
    for (int m = cfg.min_particles; m <= cfg.particles; ++m) {
        const auto trace =
            mw_trace(ParticleEnsemble::on_line(m, cfg.coin, cfg.init, cfg.steps), cfg.steps, cfg.projection);
        for (const auto& e : trace.entries()) {
            result.points.push_back({static_cast<double>(m), static_cast<double>(e.step)});
            result.values.push_back(e.value);
        }
    }
    return result;
}

OracleReport run_oracle_check(const RunConfig& cfg) {
    OracleReport report;
    report.config = cfg;
    const auto ensemble = cfg.cycle_n > 0 ? ParticleEnsemble::on_cycle(cfg.cycle_n, cfg.coin, cfg.init)
                                          : ParticleEnsemble::on_line(cfg.particles, cfg.coin, cfg.init, cfg.steps);
    for (int t = 0; t <= cfg.steps; ++t) {
        report.rows.push_back({t, meyer_wallach(occupation_probs(ensemble, t, cfg.projection)),
                               brute_force_mw(ensemble, t, cfg.projection)});
    }
    return report;
}

RunResult dispatch(const RunConfig& cfg) {
    switch (cfg.kind) {
        case ExperimentKind::distribution:
            return run_distribution(cfg);
        case ExperimentKind::entropy_trace:
            return entropy_trace(cfg.coin, cfg.init, cfg.steps);
        case ExperimentKind::mw_line:
            return mw_trace(ParticleEnsemble::on_line(cfg.particles, cfg.coin, cfg.init, cfg.steps), cfg.steps,
                            cfg.projection);
        case ExperimentKind::mw_cycle:
            return mw_trace(ParticleEnsemble::on_cycle(cfg.cycle_n, cfg.coin, cfg.init), cfg.steps, cfg.projection);
        case ExperimentKind::theta_sweep: {
            auto r = theta_sweep(cfg.cycle_n > 0 ? SweepGeometry::cycle : SweepGeometry::line, cfg.particles,
                                 cfg.steps, cfg.init, cfg.thetas, cfg.projection, cfg.coin);
            r.config = cfg;
            return r;
        }
        case ExperimentKind::phase_diagram:
            return run_phase_diagram(cfg);
        case ExperimentKind::oracle_check:
            return run_oracle_check(cfg);
    }
    invalid("unknown experiment kind");
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

void validate(const RunConfig& c) {
    if (!std::isfinite(c.coin.xi) || !std::isfinite(c.coin.theta) || !std::isfinite(c.coin.zeta) ||
        !std::isfinite(c.init.delta) || !std::isfinite(c.init.eta)) {
        invalid("angles must be finite");
    }
    if (c.projection != 0 && c.projection != 1) {
        invalid("projection must be 0 or 1");
    }
    if (c.particles < 1) {
        invalid("particle count must be positive");
    }
    if (c.cycle_n < 0 || c.cycle_n == 1) {
        invalid("cycle length must be at least 2");
    }
    const bool cycle = c.cycle_n > 0;
    const int min_steps = c.kind == ExperimentKind::distribution || c.kind == ExperimentKind::theta_sweep ||
                                  c.kind == ExperimentKind::oracle_check
                              ? 0
                              : 1;
    if (c.steps < min_steps) {
        invalid(std::string(to_string(c.kind)) + " needs at least " + std::to_string(min_steps) + " step(s)");
    }

    switch (c.kind) {
        case ExperimentKind::distribution:
            if (cycle && c.particles > c.cycle_n) {
                invalid("more particles than cycle sites");
            }
            break;
        case ExperimentKind::entropy_trace:
            if (cycle || c.particles != 1) {
                invalid("entropy-trace runs a single walker on a line");
            }
            break;
        case ExperimentKind::mw_line:
        case ExperimentKind::phase_diagram:
            if (cycle) {
                invalid(std::string(to_string(c.kind)) + " runs on a line; drop the cycle length");
            }
            if (c.kind == ExperimentKind::phase_diagram && (c.min_particles < 1 || c.min_particles > c.particles)) {
                invalid("phase-diagram needs 1 <= min particles <= particles");
            }
            break;
        case ExperimentKind::mw_cycle:
            if (c.cycle_n != c.particles) {
                invalid("mw-cycle needs one particle per site (cycle length == particles)");
            }
            break;
        case ExperimentKind::theta_sweep:
            if (cycle && c.cycle_n != c.particles) {
                invalid("cycle theta-sweep needs cycle length == particles");
            }
            if (c.thetas.empty()) {
                invalid("theta-sweep needs at least one theta");
            }
            for (double th : c.thetas) {
                if (!(th >= -1e-12 && th <= std::numbers::pi / 2 + 1e-12)) {
                    invalid("theta-sweep values must lie in [0, pi/2]");
                }
            }
            break;
        case ExperimentKind::oracle_check:
            if (c.particles > kOracleMaxParticles || c.steps > kOracleMaxSteps) {
                invalid("oracle-check is limited to 3 particles and 6 steps");
            }
            if (cycle && c.cycle_n != c.particles) {
                invalid("cycle oracle-check needs cycle length == particles");
            }
            break;
    }
}

double OracleReport::max_abs_difference() const {
    double worst = 0.0;
    for (const auto& r : rows) {
        worst = std::max(worst, std::abs(r.product_form - r.brute_force));
    }
    return worst;
}

RunResult run(const RunConfig& config) {
    try {
        validate(config);
        return dispatch(config);
    } catch (const RunError&) {
        throw;
    } catch (const Error& e) {
        throw RunError(e.kind(), e.what(), config_echo(config));
    }
}

SweepResult theta_sweep(SweepGeometry geometry, int particles, int steps, const InitialCoin& init,
                        std::span<const double> thetas, int projection, const CoinParams& base) {
    SweepResult result;
    result.axes = {"theta"};
    for (double theta : thetas) {
        if (!(theta >= -1e-12 && theta <= std::numbers::pi / 2 + 1e-12)) {
            invalid("theta-sweep values must lie in [0, pi/2]");
        }
        CoinParams coin = base;
        coin.theta = theta;
        const auto ensemble = geometry == SweepGeometry::cycle
                                  ? ParticleEnsemble::on_cycle(particles, coin, init)
                                  : ParticleEnsemble::on_line(particles, coin, init, steps);
        result.points.push_back({theta});
        result.values.push_back(meyer_wallach(occupation_probs(ensemble, steps, projection)));
    }
    return result;
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 24; ++k) {
        grid.push_back(k * std::numbers::pi / 48);
    }
    return grid;
}

}  // namespace qwalk

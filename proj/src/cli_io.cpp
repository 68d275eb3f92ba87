#include "qwalk/cli_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

namespace qwalk {

namespace {

[[noreturn]] void usage(const std::string& what) {
    throw Error(ErrorKind::usage, what);
}

double parse_decimal(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        usage("not a number: '" + std::string(text) + "'");
    }
    return value;
}

struct Subcommand {
    const char* name;
    ExperimentKind kind;
    const char* description;
};

constexpr Subcommand kSubcommands[] = {
    {"walk", ExperimentKind::distribution, "position distribution after --steps steps"},
    {"entropy", ExperimentKind::entropy_trace, "coin-position entanglement entropy for t = 1..steps"},
    {"spatial-line", ExperimentKind::mw_line, "Meyer-Wallach spatial entanglement on an open line"},
    {"spatial-cycle", ExperimentKind::mw_cycle, "Meyer-Wallach spatial entanglement on an n-cycle"},
    {"sweep-theta", ExperimentKind::theta_sweep, "spatial entanglement against the coin angle theta"},
    {"phase-diagram", ExperimentKind::phase_diagram, "spatial entanglement over (particles, step)"},
    {"oracle-check", ExperimentKind::oracle_check, "product-form vs brute-force Meyer-Wallach"},
};

struct RawFlags {
    std::string theta, xi, zeta, delta, eta, thetas;
    int steps = 0, particles = 0, cycle_n = 0, projection = 0, min_particles = 0;
    std::string preset, out;
};

void write_rows(const RunResult& result, std::ostream& out) {
    std::visit([&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PositionDistribution>) {
            out << "site,probability\n";
            for (std::size_t i = 0; i < r.probs.size(); ++i) {
                out << r.topology.site_at(static_cast<int>(i)) << ',' << format_fixed(r.probs[i]) << '\n';
            }
        } else if constexpr (std::is_same_v<T, EntanglementTrace>) {
            out << "step,entanglement\n";
            for (const auto& e : r.entries()) {
                out << e.step << ',' << format_fixed(e.value) << '\n';
            }
        } else if constexpr (std::is_same_v<T, SweepResult>) {
            const bool grid = r.axes.size() == 2;
            out << (grid ? "particles,step,entanglement\n" : "theta,entanglement\n");
            for (std::size_t k = 0; k < r.values.size(); ++k) {
                if (grid) {
                    out << static_cast<int>(r.points[k][0]) << ',' << static_cast<int>(r.points[k][1]);
                } else {
                    out << format_fixed(r.points[k][0]);
                }
                out << ',' << format_fixed(r.values[k]) << '\n';
            }
        } else {
            out << "step,product_form,brute_force,abs_difference\n";
            for (const auto& row : r.rows) {
                out << row.step << ',' << format_fixed(row.product_form) << ',' << format_fixed(row.brute_force)
                    << ',' << format_fixed(std::abs(row.product_form - row.brute_force)) << '\n';
            }
        }
    }, result);
}

}  // namespace

double parse_angle(std::string_view text) {
    static const std::regex fraction(R"(^\s*([+-])?\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        const double sign = m[1].matched && m[1].str() == "-" ? -1.0 : 1.0;
        const double num = m[2].matched ? parse_decimal(m[2].str()) : 1.0;
        const double den = m[3].matched ? parse_decimal(m[3].str()) : 1.0;
        if (den == 0.0) {
            usage("zero denominator in angle '" + s + "'");
        }
        return sign * num * std::numbers::pi / den;
    }
    std::string_view trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (!trimmed.empty() && trimmed.front() == '+') trimmed.remove_prefix(1);
    const double v = parse_decimal(trimmed);
    if (!std::isfinite(v)) {
        usage("angle must be finite: '" + s + "'");
    }
    return v;
}

std::string format_fixed(double value) {
    if (value == 0.0 || !std::isfinite(value)) {
        return value == 0.0 ? "0" : fmt::format("{}", value);
    }
    const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(value))));
    const int decimals = std::max(0, 14 - magnitude);
    return fmt::format("{:.{}f}", value, decimals);
}

ParsedArgs parse_args(int argc, const char* const* argv) {
    CLI::App app{"Discrete-time quantum walk simulator: distributions, coin entropy, spatial entanglement",
                 "qwalk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    RawFlags raw;
    std::vector<std::pair<const Subcommand*, CLI::App*>> subs;
    for (const auto& sc : kSubcommands) {
        CLI::App* sub = app.add_subcommand(sc.name, sc.description);
        sub->add_option("--theta", raw.theta, "coin angle theta (radians or e.g. pi/4)");
        sub->add_option("--xi", raw.xi, "coin phase xi");
        sub->add_option("--zeta", raw.zeta, "coin phase zeta");
        sub->add_option("--delta", raw.delta, "initial coin angle delta");
        sub->add_option("--eta", raw.eta, "initial coin phase eta");
        sub->add_option("--steps", raw.steps, "number of walk steps (maximum step for traces)");
        sub->add_option("--particles", raw.particles, "number of walkers");
        sub->add_option("--cycle-n", raw.cycle_n, "walk on an n-cycle instead of a line");
        sub->add_option("--projection", raw.projection, "coin state projected onto")->check(CLI::IsMember({0, 1}));
        sub->add_option("--preset", raw.preset, "load a checked-in figure configuration");
        sub->add_option("--out", raw.out, "output CSV path (stdout when omitted)");
        if (sc.kind == ExperimentKind::theta_sweep) {
            sub->add_option("--thetas", raw.thetas, "comma-separated theta values (default k*pi/48, k=0..24)");
        }
        if (sc.kind == ExperimentKind::phase_diagram) {
            sub->add_option("--min-particles", raw.min_particles, "smallest particle count (default 2)");
        }
        subs.emplace_back(&sc, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        return {RunConfig{}, true, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {RunConfig{}, true, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        usage(std::string(e.what()) + "\n\n" + app.help());
    }

    const Subcommand* chosen = nullptr;
    CLI::App* sub = nullptr;
    for (const auto& [sc, app_sub] : subs) {
        if (app_sub->parsed()) {
            chosen = sc;
            sub = app_sub;
        }
    }
    const auto given = [&](const char* flag) {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    const std::string help = sub->help();

    RunConfig cfg;
    cfg.kind = chosen->kind;
    if (given("--preset")) {
        const Preset* p = find_preset(raw.preset);
        if (!p) {
            usage("unknown preset '" + raw.preset + "'\n\n" + help);
        }
        if (p->config.kind != chosen->kind) {
            usage("preset '" + raw.preset + "' is a " + std::string(to_string(p->config.kind)) +
                  " run and cannot be used with '" + chosen->name + "'");
        }
        cfg = p->config;
    } else {
        if (!given("--steps")) {
            usage(std::string("'") + chosen->name + "' needs --steps (or --preset)\n\n" + help);
        }
        if (chosen->kind == ExperimentKind::phase_diagram) {
            cfg.particles = 16;
        }
        if (chosen->kind == ExperimentKind::theta_sweep) {
            cfg.thetas = default_theta_grid();
        }
    }

    try {
        if (given("--theta")) cfg.coin.theta = parse_angle(raw.theta);
        if (given("--xi")) cfg.coin.xi = parse_angle(raw.xi);
        if (given("--zeta")) cfg.coin.zeta = parse_angle(raw.zeta);
        if (given("--delta")) cfg.init.delta = parse_angle(raw.delta);
        if (given("--eta")) cfg.init.eta = parse_angle(raw.eta);
        if (given("--thetas")) {
            cfg.thetas.clear();
            std::stringstream list(raw.thetas);
            for (std::string item; std::getline(list, item, ',');) {
                cfg.thetas.push_back(parse_angle(item));
            }
        }
    } catch (const Error& e) {
        usage(std::string(e.what()) + "\n\n" + help);
    }
    if (given("--steps")) cfg.steps = raw.steps;
    if (given("--projection")) cfg.projection = raw.projection;
    if (given("--min-particles")) cfg.min_particles = raw.min_particles;
    if (given("--out")) cfg.output = raw.out;

    const bool has_particles = given("--particles");
    const bool has_cycle = given("--cycle-n");
    if (has_particles) cfg.particles = raw.particles;
    if (has_cycle) cfg.cycle_n = raw.cycle_n;
    if (chosen->kind == ExperimentKind::mw_cycle) {
        // Either flag alone fixes both: the chain holds one particle per site.
        if (has_cycle && !has_particles) cfg.particles = cfg.cycle_n;
        if (has_particles && !has_cycle) cfg.cycle_n = cfg.particles;
        if (cfg.cycle_n == 0) {
            usage("'spatial-cycle' needs --cycle-n or --particles\n\n" + help);
        }
    }
    if (chosen->kind == ExperimentKind::theta_sweep && has_cycle && !has_particles) {
        cfg.particles = cfg.cycle_n;
    }
    if (chosen->kind == ExperimentKind::oracle_check && has_cycle && !has_particles) {
        cfg.particles = cfg.cycle_n;
    }

    try {
        validate(cfg);
    } catch (const Error& e) {
        usage(std::string(e.what()) + "\n\n" + help);
    }
    return {cfg, false, {}};
}

void emit_csv(const RunResult& result, const RunConfig& config, std::ostream& out) {
    out << "# config: " << config_echo(config) << '\n';
    if (!config.note.empty()) {
        out << "# note: " << config.note << '\n';
    }
    write_rows(result, out);
}

void write_csv(const RunResult& result, const RunConfig& config, const std::string& path) {
    std::ostringstream buffer;
    emit_csv(result, config, buffer);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
    }
    file << buffer.str();
    file.close();
    if (!file) {
        throw Error(ErrorKind::io, "failed writing '" + path + "'");
    }
}

}  // namespace qwalk

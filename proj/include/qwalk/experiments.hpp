#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/entanglement_trace.hpp"
#include "qwalk/error.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

enum class ExperimentKind {
    distribution,
    entropy_trace,
    mw_line,
    mw_cycle,
    theta_sweep,
    phase_diagram,
    oracle_check,
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view name);

// Declarative description of one run. `cycle_n == 0` means an open line.
struct RunConfig {
    ExperimentKind kind = ExperimentKind::distribution;
    CoinParams coin{0.0, std::numbers::pi / 4, 0.0};
    InitialCoin init = InitialCoin::symmetric();
    int cycle_n = 0;
    int particles = 1;
    // Smallest particle count of a phase diagram.
    int min_particles = 2;
    int steps = 0;
    int projection = 0;
    std::vector<double> thetas;
    std::string preset;
    std::string note;
    std::string output;

    bool operator==(const RunConfig&) const = default;
};

// Throws invalid_parameter describing the first inconsistency found.
void validate(const RunConfig& config);

// Single-line JSON form of every RunConfig field; doubles round-trip exactly.
std::string config_echo(const RunConfig& config);
RunConfig parse_config_echo(std::string_view echo);

// Error raised by run(): the original kind plus the echo of the failing config.
class RunError : public Error {
public:
    RunError(ErrorKind kind, const std::string& message, std::string echo)
        : Error(kind, message + " [config: " + echo + "]"), echo_(std::move(echo)) {}

    const std::string& config_echo() const { return echo_; }

private:
    std::string echo_;
};

struct SweepResult {
    std::vector<std::string> axes;
    // points[k] holds one coordinate per axis for values[k].
    std::vector<std::vector<double>> points;
    std::vector<double> values;
    RunConfig config;
};

struct OracleReport {
    struct Row {
        int step;
        double product_form;
        double brute_force;
    };
    std::vector<Row> rows;
    RunConfig config;

    double max_abs_difference() const;
};

using RunResult = std::variant<PositionDistribution, EntanglementTrace, SweepResult, OracleReport>;

RunResult run(const RunConfig& config);

enum class SweepGeometry { line, cycle };

// E_MW after `steps` steps for each theta, everything else held fixed. On a
// cycle the chain has one site per particle.
SweepResult theta_sweep(SweepGeometry geometry, int particles, int steps, const InitialCoin& init,
                        std::span<const double> thetas, int projection = 0,
                        const CoinParams& base = {});

// Theta values k*pi/48, k = 0..24.
std::vector<double> default_theta_grid();

struct Preset {
    std::string name;
    RunConfig config;
};

// One checked-in configuration per figure panel of the reference study.
const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace qwalk

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qwalk/experiments.hpp"

namespace qwalk {

// Decimal radians ("0.5", "-1e-3") or a pi fraction ("pi", "-pi/6",
// "2pi/9", "5*pi/12", "0.5*pi"). Throws usage on anything else.
double parse_angle(std::string_view text);

// Fixed decimal notation with 15 significant digits, never an exponent.
std::string format_fixed(double value);

struct ParsedArgs {
    RunConfig config;
    bool help = false;
    std::string help_text;
};

// Subcommands walk, entropy, spatial-line, spatial-cycle, sweep-theta,
// phase-diagram, oracle-check. A --preset is loaded first and explicit flags
// override it. Throws usage (message includes the help text) on unknown
// flags, missing required values, or inconsistent combinations.
ParsedArgs parse_args(int argc, const char* const* argv);

// Comment line with the config echo, then the column header, then one row per
// record.
void emit_csv(const RunResult& result, const RunConfig& config, std::ostream& out);

// Writes the whole file or throws io.
void write_csv(const RunResult& result, const RunConfig& config, const std::string& path);

}  // namespace qwalk

#include <json.hpp>

#include "qwalk/experiments.hpp"

namespace qwalk {

std::string config_echo(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(c.kind));
    j["xi"] = c.coin.xi;
    j["theta"] = c.coin.theta;
    j["zeta"] = c.coin.zeta;
    j["delta"] = c.init.delta;
    j["eta"] = c.init.eta;
    j["cycle_n"] = c.cycle_n;
    j["particles"] = c.particles;
    j["min_particles"] = c.min_particles;
    j["steps"] = c.steps;
    j["projection"] = c.projection;
    j["thetas"] = c.thetas;
    j["preset"] = c.preset;
    j["note"] = c.note;
    j["output"] = c.output;
    return j.dump();
}

RunConfig parse_config_echo(std::string_view echo) {
    try {
        const auto j = nlohmann::json::parse(echo);
        RunConfig c;
        const auto kind = parse_kind(j.at("kind").get<std::string>());
        if (!kind) {
            throw Error(ErrorKind::invalid_parameter, "unknown experiment kind in config echo");
        }
        c.kind = *kind;
        c.coin = {j.at("xi").get<double>(), j.at("theta").get<double>(), j.at("zeta").get<double>()};
        c.init = {j.at("delta").get<double>(), j.at("eta").get<double>()};
        c.cycle_n = j.at("cycle_n").get<int>();
        c.particles = j.at("particles").get<int>();
        c.min_particles = j.at("min_particles").get<int>();
        c.steps = j.at("steps").get<int>();
        c.projection = j.at("projection").get<int>();
        c.thetas = j.at("thetas").get<std::vector<double>>();
        c.preset = j.at("preset").get<std::string>();
        c.note = j.at("note").get<std::string>();
        c.output = j.at("output").get<std::string>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_parameter, std::string("malformed config echo: ") + e.what());
    }
}

}  // namespace qwalk

#include "preeq/cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include "preeq/bench.hpp"

namespace preeq::cli {

namespace {

using json = nlohmann::json;
using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

double as_number(const json& v, const std::string& name) {
    if (!v.is_number()) {
        throw ConfigError("field '" + name + "': expected a number, got " + v.type_name());
    }
    return v.get<double>();
}

int as_integer(const json& v, const std::string& name) {
    if (!v.is_number_integer()) {
        throw ConfigError("field '" + name + "': expected an integer, got " + v.type_name());
    }
    return v.get<int>();
}

template <typename Group, typename Field>
Setter number_field(Group RunConfig::*group, Field Group::*field) {
    return [group, field](RunConfig& cfg, const json& v, const std::string& name) {
        if constexpr (std::is_same_v<Field, int>) {
            cfg.*group.*field = as_integer(v, name);
        } else {
            cfg.*group.*field = as_number(v, name);
        }
    };
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"r_g", number_field(&RunConfig::link, &LinkConfig::r_g)},
        {"r_s", number_field(&RunConfig::led, &LedParams::r_s)},
        {"r_l", number_field(&RunConfig::led, &LedParams::r_l)},
        {"c_w", number_field(&RunConfig::led, &LedParams::c_w)},
        {"l_b", number_field(&RunConfig::led, &LedParams::l_b)},
        {"k_pa_db", number_field(&RunConfig::link, &LinkConfig::k_pa_db)},
        {"k_lna_db", number_field(&RunConfig::link, &LinkConfig::k_lna_db)},
        {"gain_convention",
         [](RunConfig& cfg, const json& v, const std::string& name) {
             if (!v.is_string()) {
                 throw ConfigError("field '" + name + "': expected \"power\" or \"amplitude\"");
             }
             const auto parsed = parse_gain_convention(v.get<std::string>());
             if (!parsed) {
                 throw ConfigError("field '" + name + "': unknown convention '" + v.get<std::string>() +
                                   "' (expected \"power\" or \"amplitude\")");
             }
             cfg.link.gain_convention = *parsed;
         }},
        {"resp_led", number_field(&RunConfig::link, &LinkConfig::resp_led)},
        {"resp_pd", number_field(&RunConfig::link, &LinkConfig::resp_pd)},
        {"h", number_field(&RunConfig::link, &LinkConfig::h)},
        {"n0_dbm_per_hz", number_field(&RunConfig::link, &LinkConfig::n0_dbm_per_hz)},
        {"mu", number_field(&RunConfig::link, &LinkConfig::mu)},
        {"h_min", number_field(&RunConfig::sweep, &SweepSpec::h_min)},
        {"h_max", number_field(&RunConfig::sweep, &SweepSpec::h_max)},
        {"steps", number_field(&RunConfig::sweep, &SweepSpec::steps)},
        {"log_spacing",
         [](RunConfig& cfg, const json& v, const std::string& name) {
             if (!v.is_boolean()) {
                 throw ConfigError("field '" + name + "': expected true or false");
             }
             cfg.sweep.log_spacing = v.get<bool>();
         }},
        {"integration_tolerance", number_field(&RunConfig::integration, &IntegrationControl::rel_tol)},
        {"integration_depth", number_field(&RunConfig::integration, &IntegrationControl::max_depth)},
        {"grid_resolution", number_field(&RunConfig::grid, &GridSpec::resolution)},
        {"grid_tolerance", number_field(&RunConfig::grid, &GridSpec::rel_tol)},
    };
    return table;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void require(std::vector<std::string>& out, bool ok, const std::string& message) {
    if (!ok) out.push_back(message);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        std::ostringstream msg;
        msg << source << ":" << line << ":" << column << ": JSON parse error: " << e.what();
        throw ConfigError(msg.str());
    }
    if (!doc.is_object()) {
        throw ConfigError(std::string(source) + ": top level must be a JSON object");
    }

    RunConfig cfg;
    const auto& table = setters();
    for (const auto& [key, value] : doc.items()) {
        const auto it = table.find(key);
        if (it == table.end()) {
            throw ConfigError(std::string(source) + ": unknown field '" + key + "'");
        }
        try {
            it->second(cfg, value, key);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string(source) + ": " + e.what());
        } catch (const json::exception& e) {
            throw ConfigError(std::string(source) + ": field '" + key + "': " + e.what());
        }
    }

    const auto problems = violations(cfg);
    if (!problems.empty()) {
        std::string msg = std::string(source) + ": invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ConfigError(msg);
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

std::vector<std::string> violations(const RunConfig& cfg) {
    std::vector<std::string> out;
    require(out, positive(cfg.led.r_s), "r_s must be positive");
    require(out, positive(cfg.led.r_l), "r_l must be positive");
    require(out, positive(cfg.led.c_w), "c_w must be positive");
    require(out, positive(cfg.led.l_b), "l_b must be positive");
    require(out, positive(cfg.link.r_g), "r_g must be positive");
    require(out, std::isfinite(cfg.link.k_pa_db), "k_pa_db must be finite");
    require(out, std::isfinite(cfg.link.k_lna_db), "k_lna_db must be finite");
    require(out, std::isfinite(cfg.link.n0_dbm_per_hz), "n0_dbm_per_hz must be finite");
    require(out, positive(cfg.link.resp_led), "resp_led must be positive");
    require(out, positive(cfg.link.resp_pd), "resp_pd must be positive");
    require(out, positive(cfg.link.h) && cfg.link.h <= 1.0, "h must satisfy 0 < h <= 1");
    require(out, positive(cfg.link.mu), "mu must be positive");
    require(out, positive(cfg.sweep.h_min), "h_min must be positive");
    require(out, positive(cfg.sweep.h_max) && cfg.sweep.h_max <= 1.0, "h_max must satisfy 0 < h_max <= 1");
    require(out, cfg.sweep.h_min < cfg.sweep.h_max, "h_min must be below h_max");
    require(out, cfg.sweep.steps >= 2, "steps must be at least 2");
    require(out, positive(cfg.integration.rel_tol), "integration_tolerance must be positive");
    require(out, cfg.integration.max_depth > 0, "integration_depth must be positive");
    require(out, cfg.grid.resolution >= 2, "grid_resolution must be at least 2");
    require(out, positive(cfg.grid.rel_tol), "grid_tolerance must be positive");
    return out;
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
    return sweep.log_spacing ? log_spaced(sweep.h_min, sweep.h_max, sweep.steps)
                             : lin_spaced(sweep.h_min, sweep.h_max, sweep.steps);
}

nlohmann::json to_json(const RunConfig& cfg) {
    return {
        {"r_g", cfg.link.r_g},
        {"r_s", cfg.led.r_s},
        {"r_l", cfg.led.r_l},
        {"c_w", cfg.led.c_w},
        {"l_b", cfg.led.l_b},
        {"k_pa_db", cfg.link.k_pa_db},
        {"k_lna_db", cfg.link.k_lna_db},
        {"gain_convention", std::string(to_string(cfg.link.gain_convention))},
        {"resp_led", cfg.link.resp_led},
        {"resp_pd", cfg.link.resp_pd},
        {"h", cfg.link.h},
        {"n0_dbm_per_hz", cfg.link.n0_dbm_per_hz},
        {"mu", cfg.link.mu},
        {"h_min", cfg.sweep.h_min},
        {"h_max", cfg.sweep.h_max},
        {"steps", cfg.sweep.steps},
        {"log_spacing", cfg.sweep.log_spacing},
        {"integration_tolerance", cfg.integration.rel_tol},
        {"integration_depth", cfg.integration.max_depth},
        {"grid_resolution", cfg.grid.resolution},
        {"grid_tolerance", cfg.grid.rel_tol},
    };
}

}  // namespace preeq::cli

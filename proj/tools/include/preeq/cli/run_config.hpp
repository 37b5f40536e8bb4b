#ifndef PREEQ_CLI_RUN_CONFIG_HPP
#define PREEQ_CLI_RUN_CONFIG_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "preeq/circuits.hpp"
#include "preeq/linkmodel.hpp"
#include "preeq/optimizer.hpp"

namespace preeq::cli {

struct SweepSpec {
    double h_min = 0.001;
    double h_max = 1.0;
    int steps = 30;
    bool log_spacing = true;
};

/// Everything a command needs. Defaults are the typical blue-LED link.
struct RunConfig {
    LedParams led;
    LinkConfig link;
    SweepSpec sweep;
    IntegrationControl integration;
    GridSpec grid;
};

/// Malformed or invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a flat JSON object of snake_case fields. Missing fields keep their
/// defaults; unknown fields, wrong types and violated invariants throw ConfigError.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Human-readable list of violated invariants; empty when valid.
std::vector<std::string> violations(const RunConfig& cfg);

std::vector<double> sweep_values(const SweepSpec& sweep);

/// The config as a flat JSON object, the same shape parse_config accepts.
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace preeq::cli

#endif  // PREEQ_CLI_RUN_CONFIG_HPP

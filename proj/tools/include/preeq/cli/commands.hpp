#ifndef PREEQ_CLI_COMMANDS_HPP
#define PREEQ_CLI_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "preeq/bench.hpp"
#include "preeq/cli/run_config.hpp"

namespace preeq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInternal = 3;

struct NmseLimits {
    double pole = 0.03;
    double capacity = 0.05;
};

/// Scientific notation with 12 significant digits, e.g. 6.10400000000e+08.
std::string format_number(double v);

/// Design report at the config's h, or at h_override when given.
nlohmann::json cmd_design(const RunConfig& cfg, std::optional<double> h_override = std::nullopt);

/// f_hz,led_db,eq_db,link_db over log-spaced f in [f_max / 1e4, f_max].
/// The equalizer is the refined optimal design at the config's h (or h_override).
void cmd_response(const RunConfig& cfg, int points, double f_max, std::ostream& out,
                  std::optional<double> h_override = std::nullopt);

/// One CSV row per sweep point. Returns the sweep so callers can report NMSE.
SweepResult cmd_sweep(const RunConfig& cfg, std::ostream& out);

struct ValidationReport {
    nlohmann::json report;
    bool passed;
};

ValidationReport cmd_validate(const RunConfig& cfg, const NmseLimits& limits = {});

/// kExitOk when every NMSE is within its limit, kExitThreshold otherwise.
int exit_status(const ValidationReport& v);

/// h,regime,c_cce,c_bce,c_noeq,c_oracle,bandwidth_cce_hz
void cmd_compare(const RunConfig& cfg, std::ostream& out);

/// Command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace preeq::cli

#endif  // PREEQ_CLI_COMMANDS_HPP

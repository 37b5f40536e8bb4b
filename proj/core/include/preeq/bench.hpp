#ifndef PREEQ_BENCH_HPP
#define PREEQ_BENCH_HPP

#include <span>
#include <string_view>
#include <vector>

#include "preeq/optimizer.hpp"

namespace preeq {

/// Equalizer strategies compared across attenuations.
enum class Scheme {
    cce,           // capacity-centric: refined optimal design
    bce,           // bandwidth-centric: both link poles at the LED's upper pole
    no_equalizer,  // bypass
};

std::string_view to_string(Scheme s);

LinkPoles scheme_poles(Scheme s, const LinkParams& link, const LedModel& led);

struct SweepRow {
    double h;
    Regime regime;
    double x_closed;
    double y_closed;
    double x_oracle;
    double y_oracle;
    double c_closed;
    double c_refined;
    double c_oracle;
    double c_bce;
    double c_noeq;
    double bandwidth_opt;  // analytic bandwidth at the refined poles
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double pole_nmse;      // x and y series pooled
    double pole_nmse_x;
    double pole_nmse_y;
    double capacity_nmse;  // c_closed against c_oracle
};

/// One row per h, in input order. h_values must be positive and ascending.
SweepResult sweep_attenuation(const LinkParams& link, const LedModel& led, std::span<const double> h_values,
                              const GridSpec& grid = {});

std::vector<double> log_spaced(double lo, double hi, int n);
std::vector<double> lin_spaced(double lo, double hi, int n);

struct CurvePoint {
    double bandwidth;
    double capacity;
};

/// Symmetric path x = y, log-spaced from the LED's upper pole to span times it.
std::vector<LinkPoles> symmetric_pole_path(const LedModel& led, int points = 400, double span = 20.0);

std::vector<CurvePoint> capacity_bandwidth_curve(double alpha_value, std::span<const LinkPoles> path);

}  // namespace preeq

#endif  // PREEQ_BENCH_HPP

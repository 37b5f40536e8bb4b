#include "preeq/bench.hpp"

#include <cmath>
#include <stdexcept>

namespace preeq {

std::string_view to_string(Scheme s) {
    switch (s) {
        case Scheme::cce: return "CCE";
        case Scheme::bce: return "BCE";
        case Scheme::no_equalizer: return "NoEqualizer";
    }
    return "?";
}

LinkPoles scheme_poles(Scheme s, const LinkParams& link, const LedModel& led) {
    switch (s) {
        case Scheme::bce: return {led.f_p2, led.f_p2};
        case Scheme::no_equalizer: return {led.f_p1, led.f_p2};
        case Scheme::cce: return optimal_design(link, led).poles_refined;
    }
    throw std::invalid_argument("scheme_poles: unknown scheme");
}

SweepResult sweep_attenuation(const LinkParams& link, const LedModel& led, std::span<const double> h_values,
                              const GridSpec& grid) {
    for (std::size_t i = 0; i < h_values.size(); ++i) {
        if (!(h_values[i] > 0.0)) {
            throw std::invalid_argument("sweep_attenuation: h values must be positive");
        }
        if (i > 0 && !(h_values[i] > h_values[i - 1])) {
            throw std::invalid_argument("sweep_attenuation: h values must be strictly ascending");
        }
    }

    SweepResult out{};
    out.rows.reserve(h_values.size());
    std::vector<double> closed_x, closed_y, oracle_x, oracle_y, closed_c, oracle_c;

    for (double h : h_values) {
        const LinkParams at = link.with_h(h);
        const DesignResult d = optimal_design(at, led);
        const GridOptimum o = grid_search_optimum(d.alpha, led, grid);

        SweepRow row{};
        row.h = h;
        row.regime = d.regime;
        row.x_closed = d.poles_closed.x;
        row.y_closed = d.poles_closed.y;
        row.x_oracle = o.poles.x;
        row.y_oracle = o.poles.y;
        row.c_closed = d.capacity_closed;
        row.c_refined = d.capacity_refined;
        row.c_oracle = o.capacity;
        row.c_bce = capacity_from_poles(scheme_poles(Scheme::bce, at, led), d.alpha);
        row.c_noeq = capacity_from_poles(scheme_poles(Scheme::no_equalizer, at, led), d.alpha);
        row.bandwidth_opt = analytic_bandwidth(d.poles_refined);
        out.rows.push_back(row);

        closed_x.push_back(row.x_closed);
        closed_y.push_back(row.y_closed);
        oracle_x.push_back(row.x_oracle);
        oracle_y.push_back(row.y_oracle);
        closed_c.push_back(row.c_closed);
        oracle_c.push_back(row.c_oracle);
    }

    if (!out.rows.empty()) {
        out.pole_nmse_x = nmse(oracle_x, closed_x);
        out.pole_nmse_y = nmse(oracle_y, closed_y);
        std::vector<double> oracle_xy = oracle_x;
        oracle_xy.insert(oracle_xy.end(), oracle_y.begin(), oracle_y.end());
        std::vector<double> closed_xy = closed_x;
        closed_xy.insert(closed_xy.end(), closed_y.begin(), closed_y.end());
        out.pole_nmse = nmse(oracle_xy, closed_xy);
        out.capacity_nmse = nmse(oracle_c, closed_c);
    }
    return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (n < 2 || !(lo > 0.0) || !(hi > lo)) {
        throw std::invalid_argument("log_spaced: need n >= 2 and 0 < lo < hi");
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    const double step = std::log10(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = lo * std::pow(10.0, step * i);
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) {
        throw std::invalid_argument("lin_spaced: need n >= 2 and lo < hi");
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = lo + step * i;
    }
    v.back() = hi;
    return v;
}

std::vector<LinkPoles> symmetric_pole_path(const LedModel& led, int points, double span) {
    std::vector<LinkPoles> path;
    for (double x : log_spaced(led.f_p2, span * led.f_p2, points)) {
        path.push_back({x, x});
    }
    return path;
}

std::vector<CurvePoint> capacity_bandwidth_curve(double alpha_value, std::span<const LinkPoles> path) {
    std::vector<CurvePoint> curve;
    curve.reserve(path.size());
    for (const LinkPoles& p : path) {
        curve.push_back({analytic_bandwidth(p), capacity_from_poles(p, alpha_value)});
    }
    return curve;
}

}  // namespace preeq

#include "preeq/linkmodel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "preeq/numeric.hpp"
#include "preeq/twoport.hpp"

namespace preeq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

bool matched(double zero, double pole) {
    return std::abs(zero - pole) <= kMatchTolerance * std::abs(pole);
}

// Splits [0, f_max] at decade boundaries starting below the lowest corner and
// integrates each piece adaptively. The integrand is assumed to decay as f^-4
// beyond f_max; the truncated tail is added analytically.
double normalized_power_integral(const ScalarFn& g, double lowest_corner, double f_max,
                                 const IntegrationControl& control) {
    std::vector<double> edges{0.0};
    for (double edge = 1e-2 * lowest_corner; edge < f_max; edge *= 10.0) {
        edges.push_back(edge);
    }
    edges.push_back(f_max);

    // A one-panel-per-segment Simpson pass sets the scale of the absolute tolerance.
    double crude = 0.0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        const double a = edges[i - 1];
        const double b = edges[i];
        crude += (b - a) / 6.0 * (g(a) + 4.0 * g(0.5 * (a + b)) + g(b));
    }
    const double abs_tol = control.rel_tol * crude / static_cast<double>(edges.size() - 1);

    double total = 0.0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        total += adaptive_simpson(g, edges[i - 1], edges[i], abs_tol, control.max_depth);
    }
    return total + g(f_max) * f_max / 3.0;
}

}  // namespace

std::string_view to_string(GainConvention c) {
    return c == GainConvention::power ? "power" : "amplitude";
}

std::optional<GainConvention> parse_gain_convention(std::string_view s) {
    if (s == "power") return GainConvention::power;
    if (s == "amplitude") return GainConvention::amplitude;
    return std::nullopt;
}

double db_to_linear(double db, GainConvention convention) {
    return std::pow(10.0, db / (convention == GainConvention::power ? 10.0 : 20.0));
}

double dbm_per_hz_to_watts_per_hz(double dbm_per_hz) { return 1e-3 * std::pow(10.0, dbm_per_hz / 10.0); }

LinkParams linearize(const LinkConfig& cfg) {
    return {cfg.r_g,
            db_to_linear(cfg.k_pa_db, cfg.gain_convention),
            db_to_linear(cfg.k_lna_db, cfg.gain_convention),
            cfg.resp_led,
            cfg.resp_pd,
            cfg.h,
            dbm_per_hz_to_watts_per_hz(cfg.n0_dbm_per_hz),
            cfg.mu};
}

LinkPoles surviving_poles(const LedModel& led, const EqualizerModel& eq) {
    LinkPoles poles{led.f_p1, led.f_p2};
    if (eq.stage1_present) {
        if (!matched(eq.f_z1, led.f_p1)) {
            throw ZeroPoleMismatchError("equalizer zero 1 does not cancel the LED's lower pole");
        }
        poles.x = eq.f_p1;
    }
    if (eq.stage2_present) {
        if (!matched(eq.f_z2, led.f_p2)) {
            throw ZeroPoleMismatchError("equalizer zero 2 does not cancel the LED's upper pole");
        }
        poles.y = eq.f_p2;
    }
    return poles;
}

Complex link_response(double f, const LinkParams& link, const LedModel& led, const EqualizerModel& eq) {
    const LinkPoles poles = surviving_poles(led, eq);
    const double dc = link.resp_led * link.h * link.resp_pd * link.k_lna * eq.k * link.k_pa * led.k;
    return dc / (Complex{1.0, f / poles.x} * Complex{1.0, f / poles.y});
}

Complex link_response_cascade(double f, const LinkParams& link, const LedModel& led,
                              const EqualizerModel& eq) {
    const std::array<TransferMatrix, 3> chain{
        scattering_to_transfer(equalizer_scattering(eq, f)),
        scattering_to_transfer(ideal_amplifier(link.k_pa)),
        scattering_to_transfer(led_scattering(led, f)),
    };
    return link.resp_led * link.h * link.resp_pd * link.k_lna * forward_gain(cascade(chain));
}

double analytic_bandwidth(LinkPoles poles) { return kPi / 2.0 * poles.x * poles.y / (poles.x + poles.y); }

double numeric_bandwidth(LinkPoles poles, const IntegrationControl& control) {
    const auto g = [&](double f) {
        const double u = f / poles.x;
        const double v = f / poles.y;
        return 1.0 / ((1.0 + u * u) * (1.0 + v * v));
    };
    const double f_max = control.span * std::max(poles.x, poles.y);
    return normalized_power_integral(g, std::min(poles.x, poles.y), f_max, control);
}

double numeric_bandwidth(const LinkParams& link, const LedModel& led, const EqualizerModel& eq,
                         const IntegrationControl& control) {
    std::vector<double> corners{led.f_p1, led.f_p2};
    for (double c : {eq.f_z1, eq.f_p1, eq.f_z2, eq.f_p2}) {
        if (std::isfinite(c)) corners.push_back(c);
    }
    const auto [lo_it, hi_it] = std::minmax_element(corners.begin(), corners.end());
    const double lowest = *lo_it;
    const double f_max = control.span * *hi_it;

    const auto power = [&](double f) { return std::norm(link_response_cascade(f, link, led, eq)); };

    // Peak of |H|^2: DC for a matched chain, possibly a shelf peak otherwise.
    double peak_f = 0.0;
    double peak = power(0.0);
    constexpr int kPerDecade = 50;
    const double ratio = std::pow(10.0, 1.0 / kPerDecade);
    for (double f = 1e-3 * lowest; f <= f_max; f *= ratio) {
        const double p = power(f);
        if (p > peak) {
            peak = p;
            peak_f = f;
        }
    }
    if (peak_f > 0.0) {
        peak = golden_section_maximize(power, peak_f / ratio, peak_f * ratio, 1e-10).value;
        peak = std::max(peak, power(peak_f));
    }
    if (!(peak > 0.0)) {
        return 0.0;
    }
    const auto g = [&](double f) { return power(f) / peak; };
    return normalized_power_integral(g, lowest, f_max, control);
}

double end_to_end_gain(const LinkParams& link, const LedModel& led, LinkPoles poles) {
    const auto& p = led.params;
    return link.resp_led * link.h * link.resp_pd * link.k_lna * link.k_pa /
           (2.0 * kPi * kPi * p.c_w * p.l_b * poles.x * poles.y);
}

double alpha(const LinkParams& link, const LedModel& led) {
    const auto& p = led.params;
    const double gain = link.k_pa * link.resp_led * link.h * link.resp_pd * link.k_lna;
    const double reactance = 2.0 * kPi * kPi * p.c_w * p.l_b;
    return gain * gain * link.mu * link.mu / (4.0 * kPi * kPi * kE * link.n0 * reactance * reactance);
}

double capacity_from_bk(double bandwidth, double k_c, const LinkParams& link) {
    const double snr = k_c * k_c * link.mu * link.mu / (8.0 * kPi * kE * bandwidth * link.n0);
    return 0.5 * bandwidth * std::log1p(snr) / std::numbers::ln2;
}

double capacity_from_poles(LinkPoles poles, double alpha_value) {
    const auto [x, y] = poles;
    const double snr = alpha_value * (x + y) / (x * x * x * y * y * y);
    return kPi / 4.0 * x * y / (x + y) * std::log1p(snr) / std::numbers::ln2;
}

}  // namespace preeq

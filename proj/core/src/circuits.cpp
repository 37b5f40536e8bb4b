#include "preeq/circuits.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace preeq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Target poles within this relative distance of the LED pole are treated as
// coincident, so closed-form corners synthesize to exact bypass/short.
constexpr double kCornerTolerance = 1e-12;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

Complex one_plus_j(double f, double corner) { return {1.0, f / corner}; }

}  // namespace

LedModel derive_led_model(const LedParams& p, double r_g) {
    require_positive(p.r_s, "r_s");
    require_positive(p.r_l, "r_l");
    require_positive(p.c_w, "c_w");
    require_positive(p.l_b, "l_b");
    require_positive(r_g, "r_g");

    LedModel m;
    m.params = p;
    m.r_g = r_g;
    m.f_p1 = (p.r_l + 1.0) / (kTwoPi * p.c_w * p.r_l);
    m.f_p2 = (p.r_s + r_g) / (kTwoPi * p.l_b);
    m.k = 2.0 * p.r_l / ((p.r_s + r_g) * (p.r_l + 1.0));
    if (m.f_p1 > m.f_p2) {
        std::swap(m.f_p1, m.f_p2);
        m.poles_swapped = true;
    }
    return m;
}

Complex led_s21(const LedModel& m, double f) {
    return m.k / (one_plus_j(f, m.f_p1) * one_plus_j(f, m.f_p2));
}

ScatteringMatrix led_scattering(const LedModel& m, double f) { return matched_reciprocal(led_s21(m, f)); }

EqualizerModel derive_equalizer_model(const EqualizerParams& p, double r_g) {
    require_positive(r_g, "r_g");
    EqualizerModel m{p, kNaN, kNaN, kNaN, kNaN};
    m.stage1_present = p.stage1_present();
    m.stage2_present = p.stage2_present();

    if (m.stage1_present) {
        const double r1 = *p.r1;
        require_positive(r1, "r1");
        require_positive(p.l_e, "l_e");
        m.f_z1 = r1 / (kTwoPi * p.l_e);
        m.f_p1 = (2.0 * r1 + r_g) / (2.0 * kTwoPi * p.l_e);
    }
    if (p.r2 < 0.0 || !std::isfinite(p.r2)) {
        throw std::invalid_argument("r2 must be non-negative and finite");
    }
    if (m.stage2_present) {
        require_positive(p.c_e, "c_e");
        m.f_z2 = 1.0 / (kTwoPi * p.c_e * p.r2);
        m.f_p2 = (2.0 * r_g + p.r2) / (2.0 * kTwoPi * r_g * p.c_e * p.r2);
    }

    m.k = (m.stage1_present ? m.f_z1 / m.f_p1 : 1.0) * (m.stage2_present ? m.f_z2 / m.f_p2 : 1.0);
    return m;
}

Complex equalizer_s21(const EqualizerModel& m, double f) {
    Complex s = m.k;
    if (m.stage1_present) {
        s *= one_plus_j(f, m.f_z1) / one_plus_j(f, m.f_p1);
    }
    if (m.stage2_present) {
        s *= one_plus_j(f, m.f_z2) / one_plus_j(f, m.f_p2);
    }
    return s;
}

ScatteringMatrix equalizer_scattering(const EqualizerModel& m, double f) {
    return matched_reciprocal(equalizer_s21(m, f));
}

EqualizerParams match_zeros_to_led(const LedModel& led, std::optional<double> r1, double r2) {
    EqualizerParams p;
    if (r1) {
        require_positive(*r1, "r1");
        p.r1 = *r1;
        p.l_e = *r1 / (kTwoPi * led.f_p1);
    }
    if (r2 < 0.0 || !std::isfinite(r2)) {
        throw std::invalid_argument("r2 must be non-negative and finite");
    }
    if (r2 > 0.0) {
        p.r2 = r2;
        p.c_e = 1.0 / (kTwoPi * r2 * led.f_p2);
    }
    return p;
}

EqualizerParams synthesize_from_poles(double x, double y, const LedModel& led) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("synthesize_from_poles: non-finite target pole");
    }
    if (x < led.f_p1 * (1.0 - kCornerTolerance)) {
        throw std::domain_error("synthesize_from_poles: first pole below the LED pole it must cancel");
    }
    if (y < led.f_p2 * (1.0 - kCornerTolerance)) {
        throw std::domain_error("synthesize_from_poles: second pole below the LED pole it must cancel");
    }

    std::optional<double> r1;
    if (x > led.f_p1 * (1.0 + kCornerTolerance)) {
        r1 = led.r_g / (2.0 * (x / led.f_p1 - 1.0));
    }
    double r2 = 0.0;
    if (y > led.f_p2 * (1.0 + kCornerTolerance)) {
        r2 = 2.0 * led.r_g * (y / led.f_p2 - 1.0);
    }
    return match_zeros_to_led(led, r1, r2);
}

}  // namespace preeq

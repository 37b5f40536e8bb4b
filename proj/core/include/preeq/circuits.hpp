#ifndef PREEQ_CIRCUITS_HPP
#define PREEQ_CIRCUITS_HPP

#include <optional>

#include "preeq/twoport.hpp"

namespace preeq {

/// Second-order LED equivalent circuit (SI units).
///
/// The internal resistance enters the model through terms of the form
/// (r_l + 1); the "1" is taken literally, i.e. r_l is normalized to 1 ohm.
struct LedParams {
    double r_s = 1.0;      // series resistance [ohm]
    double r_l = 0.5;      // internal (cladding/MQW) resistance [ohm]
    double c_w = 10.8e-9;  // quantum-well capacitance [F]
    double l_b = 28.6e-9;  // bonding/unconfined-carrier inductance [H]
};

/// Poles and DC gain of the LED's forward transmission, all in Hz.
struct LedModel {
    LedParams params;
    double r_g = 50.0;
    double f_p1 = 0.0;  // lower pole
    double f_p2 = 0.0;  // upper pole
    double k = 0.0;     // DC forward gain
    bool poles_swapped = false;
};

LedModel derive_led_model(const LedParams& p, double r_g);

/// k / ((1 + jf/f_p1)(1 + jf/f_p2))
Complex led_s21(const LedModel& m, double f);
ScatteringMatrix led_scattering(const LedModel& m, double f);

/// Component values of the two-stage shelving equalizer.
///
/// Stage 1 (r1, l_e) is bypassed when r1 is empty, which is the R1 -> infinity
/// limit. Stage 2 (r2, c_e) is absent when r2 == 0, i.e. C_e is shorted.
struct EqualizerParams {
    std::optional<double> r1;
    double l_e = 0.0;
    double r2 = 0.0;
    double c_e = 0.0;

    static EqualizerParams bypass() { return {}; }
    bool stage1_present() const { return r1.has_value(); }
    bool stage2_present() const { return r2 > 0.0; }
};

/// Zeros/poles of the equalizer in Hz. Entries of an absent stage are NaN.
struct EqualizerModel {
    EqualizerParams params;
    double f_z1;
    double f_p1;
    double f_z2;
    double f_p2;
    double k = 1.0;
    bool stage1_present = false;
    bool stage2_present = false;
};

EqualizerModel derive_equalizer_model(const EqualizerParams& p, double r_g);

/// k (1 + jf/f_z1)(1 + jf/f_z2) / ((1 + jf/f_p1)(1 + jf/f_p2)); absent stages contribute 1.
Complex equalizer_s21(const EqualizerModel& m, double f);
ScatteringMatrix equalizer_scattering(const EqualizerModel& m, double f);

/// Chooses l_e and c_e so the equalizer zeros land on the LED poles.
/// An empty r1 keeps stage 1 bypassed; r2 == 0 leaves stage 2 absent.
EqualizerParams match_zeros_to_led(const LedModel& led, std::optional<double> r1, double r2);

/// Inverts the pole formulas of a zero-matched equalizer. x == f_p1 of the
/// LED bypasses stage 1, y == f_p2 of the LED drops stage 2.
/// Throws std::domain_error when a target pole lies below its zero.
EqualizerParams synthesize_from_poles(double x, double y, const LedModel& led);

}  // namespace preeq

#endif  // PREEQ_CIRCUITS_HPP

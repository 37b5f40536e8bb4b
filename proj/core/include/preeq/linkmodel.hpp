#ifndef PREEQ_LINKMODEL_HPP
#define PREEQ_LINKMODEL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <optional>

#include "preeq/circuits.hpp"

namespace preeq {

/// How amplifier gains given in dB are linearized.
enum class GainConvention {
    power,      // 10^(dB/10)
    amplitude,  // 10^(dB/20)
};

std::string_view to_string(GainConvention c);
std::optional<GainConvention> parse_gain_convention(std::string_view s);

/// User-facing link description, with gains in dB and noise in dBm/Hz.
struct LinkConfig {
    double r_g = 50.0;
    double k_pa_db = 30.0;
    double k_lna_db = 30.0;
    GainConvention gain_convention = GainConvention::power;
    double resp_led = 1.0;
    double resp_pd = 1.0;
    double h = 0.5;
    double n0_dbm_per_hz = -50.0;
    double mu = 1.0;
};

/// The same link with every quantity linear and in SI units.
struct LinkParams {
    double r_g;
    double k_pa;
    double k_lna;
    double resp_led;
    double resp_pd;
    double h;
    double n0;  // W/Hz
    double mu;

    LinkParams with_h(double new_h) const {
        LinkParams copy = *this;
        copy.h = new_h;
        return copy;
    }
};

double db_to_linear(double db, GainConvention convention);
double dbm_per_hz_to_watts_per_hz(double dbm_per_hz);

/// The only place dB/dBm quantities are converted.
LinkParams linearize(const LinkConfig& cfg);

/// Poles of the equalized link in Hz: x pairs with the LED's lower pole,
/// y with its upper pole.
struct LinkPoles {
    double x;
    double y;

    friend bool operator==(const LinkPoles&, const LinkPoles&) = default;
};

class ZeroPoleMismatchError : public std::domain_error {
public:
    explicit ZeroPoleMismatchError(const std::string& what) : std::domain_error(what) {}
};

// Relative deviation of an equalizer zero from its LED pole that still counts as matched.
inline constexpr double kMatchTolerance = 1e-6;

/// Poles that survive zero-pole cancellation: the equalizer pole where a stage
/// is present, the uncompensated LED pole otherwise. Throws
/// ZeroPoleMismatchError if a present stage is not matched.
LinkPoles surviving_poles(const LedModel& led, const EqualizerModel& eq);

/// Closed-form response of a zero-matched link (receiver output per source amplitude).
Complex link_response(double f, const LinkParams& link, const LedModel& led, const EqualizerModel& eq);

/// Same quantity computed through the T-matrix cascade equalizer -> PA -> LED.
/// Valid for any equalizer, matched or not.
Complex link_response_cascade(double f, const LinkParams& link, const LedModel& led,
                              const EqualizerModel& eq);

/// 3-dB (noise-equivalent) bandwidth of a two-pole link, (pi/2) x y / (x + y).
double analytic_bandwidth(LinkPoles poles);

struct IntegrationControl {
    double rel_tol = 1e-6;
    int max_depth = 40;
    double span = 1e3;  // F_max = span * max(x, y)
};

/// Noise-equivalent bandwidth of the normalized two-pole response by quadrature.
double numeric_bandwidth(LinkPoles poles, const IntegrationControl& control = {});

/// Noise-equivalent bandwidth of the full cascaded chain by quadrature.
double numeric_bandwidth(const LinkParams& link, const LedModel& led, const EqualizerModel& eq,
                         const IntegrationControl& control = {});

/// DC end-to-end channel coefficient K^C of a zero-matched link.
double end_to_end_gain(const LinkParams& link, const LedModel& led, LinkPoles poles);

/// Aggregate SNR scale; the only link-dependent quantity in the reduced capacity objective.
double alpha(const LinkParams& link, const LedModel& led);

/// IMDD capacity lower bound from bandwidth and channel coefficient [bit/s].
double capacity_from_bk(double bandwidth, double k_c, const LinkParams& link);

/// (pi/4) x y / (x + y) * log2(alpha (x + y) / (x^3 y^3) + 1) [bit/s].
double capacity_from_poles(LinkPoles poles, double alpha_value);

}  // namespace preeq

#endif  // PREEQ_LINKMODEL_HPP

#include "preeq/twoport.hpp"

#include <algorithm>
#include <cmath>

namespace preeq {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_magnitude(Complex a, Complex b, Complex c, Complex d) {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

void require_finite(Complex a, Complex b, Complex c, Complex d, const char* what) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d)) {
        throw std::invalid_argument(std::string(what) + ": non-finite matrix entry");
    }
}

// |pivot| must be a non-negligible fraction of the largest entry.
void require_transmission(Complex pivot, double scale, const char* what) {
    if (!(std::abs(pivot) > kDegenerateThreshold * scale) || scale == 0.0) {
        throw DegenerateNetworkError(std::string(what) + ": no forward transmission");
    }
}

}  // namespace

TransferMatrix scattering_to_transfer(const ScatteringMatrix& s) {
    require_finite(s.s11, s.s12, s.s21, s.s22, "scattering_to_transfer");
    require_transmission(s.s21, max_magnitude(s.s11, s.s12, s.s21, s.s22), "scattering_to_transfer");
    return {1.0 / s.s21, -s.s22 / s.s21, s.s11 / s.s21, (s.s12 * s.s21 - s.s11 * s.s22) / s.s21};
}

ScatteringMatrix transfer_to_scattering(const TransferMatrix& t) {
    require_finite(t.t11, t.t12, t.t21, t.t22, "transfer_to_scattering");
    require_transmission(t.t11, max_magnitude(t.t11, t.t12, t.t21, t.t22), "transfer_to_scattering");
    return {t.t21 / t.t11, t.t22 - t.t21 * t.t12 / t.t11, 1.0 / t.t11, -t.t12 / t.t11};
}

TransferMatrix cascade(std::span<const TransferMatrix> stages) {
    if (stages.empty()) {
        throw std::invalid_argument("cascade: empty stage list");
    }
    TransferMatrix product = stages.front();
    for (const auto& stage : stages.subspan(1)) {
        product = product * stage;
    }
    return product;
}

Complex forward_gain(const TransferMatrix& t) {
    require_finite(t.t11, t.t12, t.t21, t.t22, "forward_gain");
    require_transmission(t.t11, max_magnitude(t.t11, t.t12, t.t21, t.t22), "forward_gain");
    return 1.0 / t.t11;
}

ScatteringMatrix ideal_amplifier(double gain) { return {0.0, 0.0, gain, 0.0}; }

ScatteringMatrix matched_reciprocal(Complex s21) { return {0.0, s21, s21, 0.0}; }

}  // namespace preeq

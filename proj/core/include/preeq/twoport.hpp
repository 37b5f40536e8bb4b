#ifndef PREEQ_TWOPORT_HPP
#define PREEQ_TWOPORT_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace preeq {

using Complex = std::complex<double>;

/// Raised when a network has no forward transmission (s21 or t11 vanishes).
class DegenerateNetworkError : public std::domain_error {
public:
    explicit DegenerateNetworkError(const std::string& what) : std::domain_error(what) {}
};

/// Scattering parameters of a two-port at a single frequency.
struct ScatteringMatrix {
    Complex s11{};
    Complex s12{};
    Complex s21{};
    Complex s22{};

    friend bool operator==(const ScatteringMatrix&, const ScatteringMatrix&) = default;
};

/// Cascadable transfer (T) parameters. The T-matrix of a chain is the
/// ordinary product of the stage T-matrices in signal order.
struct TransferMatrix {
    Complex t11{1.0};
    Complex t12{};
    Complex t21{};
    Complex t22{1.0};

    static constexpr TransferMatrix identity() { return {}; }

    friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
        return {a.t11 * b.t11 + a.t12 * b.t21, a.t11 * b.t12 + a.t12 * b.t22,
                a.t21 * b.t11 + a.t22 * b.t21, a.t21 * b.t12 + a.t22 * b.t22};
    }

    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;
};

// Relative threshold below which s21 (or t11) is treated as zero.
inline constexpr double kDegenerateThreshold = 1e-12;

TransferMatrix scattering_to_transfer(const ScatteringMatrix& s);
ScatteringMatrix transfer_to_scattering(const TransferMatrix& t);

/// Product of the stages in list order. Throws std::invalid_argument on an empty list.
TransferMatrix cascade(std::span<const TransferMatrix> stages);

/// Forward transmission of a (possibly cascaded) network, 1/t11.
Complex forward_gain(const TransferMatrix& t);

/// Unilateral, perfectly matched amplifier: S = [[0, 0], [gain, 0]].
ScatteringMatrix ideal_amplifier(double gain);

/// Matched reciprocal network with the given forward transmission.
ScatteringMatrix matched_reciprocal(Complex s21);

}  // namespace preeq

#endif  // PREEQ_TWOPORT_HPP

#ifndef PREEQ_NUMERIC_HPP
#define PREEQ_NUMERIC_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace preeq {

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

using ScalarFn = std::function<double(double)>;

/// Adaptive Simpson quadrature of f on [a, b].
///
/// Subdivides until the Richardson error estimate of every panel is below
/// its share of abs_tol. Throws ConvergenceError if a panel would need to be
/// split deeper than max_depth.
double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol, int max_depth);

struct ScalarOptimum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than rel_tol * |midpoint|.
ScalarOptimum golden_section_maximize(const ScalarFn& f, double lo, double hi, double rel_tol,
                                      int max_iterations = 500);

/// Bisection on a sign-changing bracket; returns the midpoint of the final bracket.
double bisect(const ScalarFn& f, double lo, double hi, double abs_tol, int max_iterations = 400);

}  // namespace preeq

#endif  // PREEQ_NUMERIC_HPP

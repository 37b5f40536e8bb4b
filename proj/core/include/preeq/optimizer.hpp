#ifndef PREEQ_OPTIMIZER_HPP
#define PREEQ_OPTIMIZER_HPP

#include <span>
#include <string_view>

#include "preeq/circuits.hpp"
#include "preeq/linkmodel.hpp"

namespace preeq {

/// Which equalizer topology maximizes capacity at a given attenuation.
enum class Regime {
    no_equalizer,  // h <= h2: bypass, link keeps the LED poles
    first_order,   // h2 < h < h1: stage 1 only, y pinned to the LED's upper pole
    symmetric,     // h >= h1: both stages, x == y
};

std::string_view to_string(Regime r);

struct Thresholds {
    double h1;  // symmetric optimum reaches the LED's upper pole
    double h2;  // first-order optimum reaches the LED's lower pole
};

double threshold_h1(const LinkParams& link, const LedModel& led);
double threshold_h2(const LinkParams& link, const LedModel& led);

/// Boundaries: h == h2 is NoEqualizer, h == h1 is Symmetric.
Regime classify_regime(double h, double h1, double h2);

/// Root u > 1 of ln u = k (u - 1) / u, plus the closed approximation exp(k - k e^-k).
struct LogRoot {
    double root;
    double approximation;
    double residual;
};

LogRoot solve_log_equation(double k);

struct DesignResult {
    Regime regime;
    double alpha;
    Thresholds thresholds;

    LinkPoles poles_closed;
    EqualizerParams params_closed;
    // capacity_from_poles at the closed-form poles, except in the symmetric regime
    // where it is the closed-form optimum 5 pi (2 alpha)^(1/5) / (8 e ln 2).
    double capacity_closed;
    // The regime's published closed-form capacity expression, kept for comparison.
    double capacity_formula;
    // First-order pole before clipping to the LED pole interval (NaN otherwise).
    double x_unclipped;

    LinkPoles poles_refined;
    EqualizerParams params_refined;
    double capacity_refined;
};

/// Regime selection and closed-form pole placement; refined fields mirror the closed ones.
DesignResult closed_form_design(const LinkParams& link, const LedModel& led);

/// Polishes the closed-form poles against the exact capacity objective of the regime.
DesignResult refine_design(const LinkParams& link, const LedModel& led, DesignResult closed);

/// closed_form_design followed by refine_design.
DesignResult optimal_design(const LinkParams& link, const LedModel& led);

struct GridSpec {
    int resolution = 200;   // coarse points per axis
    double rel_tol = 1e-6;  // coordinate refinement tolerance
    int max_sweeps = 200;
};

struct GridOptimum {
    LinkPoles poles;
    double capacity;
};

/// Brute-force maximization of capacity_from_poles over
/// [f_p1, X] x [f_p2, X], X = max(10 (2 alpha)^(1/5) / e, 10 f_p2):
/// log-spaced coarse grid, then coordinate-wise golden-section refinement.
/// Ties resolve to the lowest x, then the lowest y.
GridOptimum grid_search_optimum(double alpha_value, const LedModel& led, const GridSpec& grid = {});
GridOptimum grid_search_optimum(const LinkParams& link, const LedModel& led, const GridSpec& grid = {});

/// sum (c - r)^2 / sum r^2
double nmse(std::span<const double> reference, std::span<const double> candidate);

}  // namespace preeq

#endif  // PREEQ_OPTIMIZER_HPP

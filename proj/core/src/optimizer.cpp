#include "preeq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "preeq/numeric.hpp"

namespace preeq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kLn2 = std::numbers::ln2;

// Refinement tolerance on the pole location.
constexpr double kRefineTol = 1e-8;

double linear_gain_product(const LinkParams& link) {
    return link.k_pa * link.resp_led * link.resp_pd * link.k_lna * link.mu;
}

std::vector<double> log_axis(double lo, double hi, int n) {
    std::vector<double> axis(static_cast<std::size_t>(n));
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        axis[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    axis.front() = lo;
    axis.back() = hi;
    return axis;
}

// Maximizes f on [lo, hi], where an endpoint sitting on the feasible-set
// boundary may itself be the optimum.
ScalarOptimum bounded_maximize(const ScalarFn& f, double lo, double hi, double rel_tol) {
    ScalarOptimum best = golden_section_maximize(f, lo, hi, rel_tol);
    for (double edge : {lo, hi}) {
        const double v = f(edge);
        if (v > best.value) best = {edge, v};
    }
    return best;
}

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::no_equalizer: return "NoEqualizer";
        case Regime::first_order: return "FirstOrder";
        case Regime::symmetric: return "Symmetric";
    }
    return "?";
}

double threshold_h1(const LinkParams& link, const LedModel& led) {
    const auto& p = led.params;
    return 2.0 * std::sqrt(2.0 * link.n0) * std::pow(kPi, 3) * std::pow(kE, 3) * p.c_w * p.l_b *
           std::pow(led.f_p2, 2.5) / linear_gain_product(link);
}

double threshold_h2(const LinkParams& link, const LedModel& led) {
    const auto& p = led.params;
    return 4.0 * std::pow(kPi, 3) * kE * kE * std::sqrt(link.n0) * p.c_w * p.l_b * std::pow(led.f_p1, 1.5) *
           led.f_p2 / linear_gain_product(link);
}

Regime classify_regime(double h, double h1, double h2) {
    if (!(h > 0.0) || !(h2 > 0.0) || !(h2 < h1)) {
        throw std::invalid_argument("classify_regime: requires 0 < h and 0 < h2 < h1");
    }
    if (h <= h2) return Regime::no_equalizer;
    if (h < h1) return Regime::first_order;
    return Regime::symmetric;
}

LogRoot solve_log_equation(double k) {
    if (!(k > 1.0) || !std::isfinite(k)) {
        throw std::invalid_argument("solve_log_equation: k must exceed 1");
    }
    const auto g = [k](double u) { return std::log(u) - k * (u - 1.0) / u; };

    // g < 0 at its minimum u = k and g(e^k) = k e^-k > 0.
    const double hi = std::exp(k);
    if (!std::isfinite(hi)) {
        throw std::invalid_argument("solve_log_equation: k too large");
    }
    double u = bisect(g, k, hi, 1e-15 * hi);
    for (int i = 0; i < 8; ++i) {
        const double slope = 1.0 / u - k / (u * u);
        if (slope == 0.0) break;
        const double next = u - g(u) / slope;
        if (!(next > 1.0) || next == u) break;
        u = next;
    }
    return {u, std::exp(k - k * std::exp(-k)), std::abs(g(u))};
}

DesignResult closed_form_design(const LinkParams& link, const LedModel& led) {
    DesignResult r{};
    r.alpha = alpha(link, led);
    r.thresholds = {threshold_h1(link, led), threshold_h2(link, led)};
    r.regime = classify_regime(link.h, r.thresholds.h1, r.thresholds.h2);
    r.x_unclipped = std::numeric_limits<double>::quiet_NaN();

    const double beta = led.f_p2;
    switch (r.regime) {
        case Regime::symmetric: {
            const double root5 = std::pow(2.0 * r.alpha, 0.2);
            // h >= h1 already implies x >= beta; the max only absorbs rounding.
            const double x = std::max(root5 / kE, beta);
            r.poles_closed = {x, x};
            r.capacity_formula = 5.0 * kPi * root5 / (8.0 * kE * kLn2);
            r.capacity_closed = r.capacity_formula;
            break;
        }
        case Regime::first_order: {
            const double raw = std::cbrt(r.alpha) / (kE * std::pow(beta, 2.0 / 3.0));
            r.x_unclipped = raw;
            r.poles_closed = {std::clamp(raw, led.f_p1, beta), beta};
            r.capacity_formula = 3.0 * kPi / (4.0 * kLn2) * raw;
            r.capacity_closed = capacity_from_poles(r.poles_closed, r.alpha);
            break;
        }
        case Regime::no_equalizer: {
            r.poles_closed = {led.f_p1, led.f_p2};
            r.capacity_formula = capacity_from_poles(r.poles_closed, r.alpha);
            r.capacity_closed = r.capacity_formula;
            break;
        }
    }
    r.params_closed = synthesize_from_poles(r.poles_closed.x, r.poles_closed.y, led);
    r.poles_refined = r.poles_closed;
    r.params_refined = r.params_closed;
    r.capacity_refined = r.capacity_closed;
    return r;
}

DesignResult refine_design(const LinkParams& /*link*/, const LedModel& led, DesignResult r) {
    const double beta = led.f_p2;
    const double a = r.alpha;
    LinkPoles refined = r.poles_closed;

    switch (r.regime) {
        case Regime::symmetric: {
            const auto diagonal = [a](double x) { return capacity_from_poles({x, x}, a); };
            const ScalarOptimum best = bounded_maximize(diagonal, beta, 100.0 * r.poles_closed.x, kRefineTol);
            refined = {best.x, best.x};
            break;
        }
        case Regime::first_order: {
            const auto along_x = [a, beta](double x) { return capacity_from_poles({x, beta}, a); };
            const ScalarOptimum best = bounded_maximize(along_x, led.f_p1, beta, kRefineTol);
            refined = {best.x, beta};
            break;
        }
        case Regime::no_equalizer:
            return r;
    }

    const double at_closed = capacity_from_poles(r.poles_closed, a);
    const double at_refined = capacity_from_poles(refined, a);
    if (at_refined < at_closed) {
        refined = r.poles_closed;
    }
    r.poles_refined = refined;
    r.capacity_refined = std::max({at_refined, at_closed, r.capacity_closed});
    r.params_refined = synthesize_from_poles(refined.x, refined.y, led);
    return r;
}

DesignResult optimal_design(const LinkParams& link, const LedModel& led) {
    return refine_design(link, led, closed_form_design(link, led));
}

GridOptimum grid_search_optimum(double alpha_value, const LedModel& led, const GridSpec& grid) {
    if (grid.resolution < 2 || !(grid.rel_tol > 0.0)) {
        throw std::invalid_argument("grid_search_optimum: resolution >= 2 and rel_tol > 0 required");
    }
    const double upper = std::max(10.0 * std::pow(2.0 * alpha_value, 0.2) / kE, 10.0 * led.f_p2);
    const std::vector<double> xs = log_axis(led.f_p1, upper, grid.resolution);
    const std::vector<double> ys = log_axis(led.f_p2, upper, grid.resolution);

    // Row-major scan with strict improvement keeps the lowest (x, y) on ties.
    GridOptimum best{{xs.front(), ys.front()}, capacity_from_poles({xs.front(), ys.front()}, alpha_value)};
    for (double x : xs) {
        for (double y : ys) {
            const double c = capacity_from_poles({x, y}, alpha_value);
            if (c > best.capacity) best = {{x, y}, c};
        }
    }

    const double x_step = xs[1] / xs[0];
    const double y_step = ys[1] / ys[0];
    const double inner_tol = 0.1 * grid.rel_tol;
    for (int sweep = 0; sweep < grid.max_sweeps; ++sweep) {
        const LinkPoles before = best.poles;

        const double y_fixed = best.poles.y;
        const ScalarOptimum bx = bounded_maximize(
            [&](double x) { return capacity_from_poles({x, y_fixed}, alpha_value); },
            std::max(led.f_p1, best.poles.x / x_step), std::min(upper, best.poles.x * x_step), inner_tol);
        if (bx.value > best.capacity) best = {{bx.x, y_fixed}, bx.value};

        const double x_fixed = best.poles.x;
        const ScalarOptimum by = bounded_maximize(
            [&](double y) { return capacity_from_poles({x_fixed, y}, alpha_value); },
            std::max(led.f_p2, best.poles.y / y_step), std::min(upper, best.poles.y * y_step), inner_tol);
        if (by.value > best.capacity) best = {{x_fixed, by.x}, by.value};

        if (std::abs(best.poles.x - before.x) <= grid.rel_tol * before.x &&
            std::abs(best.poles.y - before.y) <= grid.rel_tol * before.y) {
            break;
        }
    }
    return best;
}

GridOptimum grid_search_optimum(const LinkParams& link, const LedModel& led, const GridSpec& grid) {
    return grid_search_optimum(alpha(link, led), led, grid);
}

double nmse(std::span<const double> reference, std::span<const double> candidate) {
    if (reference.size() != candidate.size()) {
        throw std::invalid_argument("nmse: series lengths differ");
    }
    if (reference.empty()) {
        throw std::invalid_argument("nmse: empty series");
    }
    double err = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = candidate[i] - reference[i];
        err += d * d;
        norm += reference[i] * reference[i];
    }
    if (norm == 0.0) {
        throw std::domain_error("nmse: reference series is identically zero");
    }
    return err / norm;
}

}  // namespace preeq

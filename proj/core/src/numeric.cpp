#include "preeq/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace preeq {

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const ScalarFn& f, const Panel& p, double tol, int depth_left) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;

    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth_left <= 0) {
        throw ConvergenceError("adaptive_simpson: depth limit reached before tolerance was met");
    }
    return refine(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth_left - 1) +
           refine(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth_left - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol, int max_depth) {
    if (!(b > a)) {
        return 0.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return refine(f, {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, abs_tol, max_depth);
}

ScalarOptimum golden_section_maximize(const ScalarFn& f, double lo, double hi, double rel_tol,
                                      int max_iterations) {
    if (!(hi > lo)) {
        throw std::invalid_argument("golden_section_maximize: need lo < hi");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);

    for (int i = 0; i < max_iterations; ++i) {
        if (hi - lo <= rel_tol * std::abs(0.5 * (lo + hi))) {
            break;
        }
        // Ties move the upper bound down so flat objectives settle low.
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc >= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

double bisect(const ScalarFn& f, double lo, double hi, double abs_tol, int max_iterations) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument("bisect: bracket does not change sign");
    }
    for (int i = 0; i < max_iterations && hi - lo > abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace preeq

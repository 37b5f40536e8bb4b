// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "preeq/bench.hpp"
#include "preeq/cli/commands.hpp"
#include "preeq/cli/run_config.hpp"
#include "support.hpp"

using namespace preeq;
using preeq::test::default_led;
using preeq::test::default_link;
using preeq::test::rel_err;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = time_limit_s <= 0.0 || elapsed < time_limit_s;
    const bool pass = v.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s: %s; %.3f s", pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), elapsed);
    if (time_limit_s > 0.0) std::printf(" (limit %.0f s)", time_limit_s);
    std::printf("\n");
    std::fflush(stdout);
}

// Smallest h in [lo, hi] where pred turns true, assuming it is monotone in h.
double bisect_h(const std::function<bool(double)>& pred, double lo, double hi) {
    for (int i = 0; i < 60 && hi / lo > 1.0 + 1e-7; ++i) {
        const double mid = std::sqrt(lo * hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return std::sqrt(lo * hi);
}

const SweepResult& default_sweep() {
    static const SweepResult s = [] {
        const std::vector<double> hs = log_spaced(1e-3, 1.0, 30);
        return sweep_attenuation(default_link(), default_led(), hs);
    }();
    return s;
}

double gap_over_bypass(double h, double mu) {
    LinkParams link = default_link(h);
    link.mu = mu;
    const LedModel led = default_led();
    const double a = alpha(link, led);
    return grid_search_optimum(a, led).capacity - capacity_from_poles({led.f_p1, led.f_p2}, a);
}

}  // namespace

int main() {
    const LedModel led = default_led();

    criterion(1, "bandwidth oracle", 10.0, [&] {
        auto gen = test::rng(101);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const LinkPoles p{test::log_uniform(gen, 1e7, 1e10), test::log_uniform(gen, 1e7, 1e10)};
            worst = std::max(worst, rel_err(numeric_bandwidth(p), analytic_bandwidth(p)));
        }
        return Verdict{worst <= 0.005, fmt("worst relative error %.3e over 100 pairs (limit 5.0e-03)", worst)};
    });

    criterion(2, "closed-form vs oracle poles", 120.0, [&] {
        const SweepResult& s = default_sweep();
        return Verdict{s.pole_nmse <= 0.03, fmt("pole NMSE %.4e (x %.4e, y %.4e; limit 3.0e-02)", s.pole_nmse,
                                                s.pole_nmse_x, s.pole_nmse_y)};
    });

    criterion(3, "closed-form vs oracle capacity", 120.0, [&] {
        const SweepResult& s = default_sweep();
        return Verdict{s.capacity_nmse <= 0.05, fmt("capacity NMSE %.4e (limit 5.0e-02)", s.capacity_nmse)};
    });

    criterion(4, "regime thresholds vs oracle", 60.0, [&] {
        const LinkParams link = default_link();
        const double h1 = threshold_h1(link, led);
        const double h2 = threshold_h2(link, led);
        const auto oracle_x = [&](double h) { return grid_search_optimum(link.with_h(h), led).poles.x; };
        const double seen_h1 = bisect_h([&](double h) { return oracle_x(h) >= led.f_p2 * (1.0 - 1e-4); }, h2, 1.0);
        const double seen_h2 = bisect_h([&](double h) { return oracle_x(h) > led.f_p1 * (1.0 + 1e-4); }, 1e-4, h1);
        const double d1 = (seen_h1 - h1) / h1;
        const double d2 = (seen_h2 - h2) / h2;
        const bool ok = std::abs(d1) <= 0.02 && std::abs(d2) <= 0.05;
        return Verdict{ok, fmt("h1 %.6f vs oracle %.6f (%+.2f%%, limit 2%%); h2 %.7f vs oracle %.7f (%+.2f%%, limit 5%%)",
                               h1, seen_h1, 100.0 * d1, h2, seen_h2, 100.0 * d2)};
    });

    criterion(5, "transcendental roots", 0.0, [&] {
        const LogRoot r5 = solve_log_equation(5.0);
        const LogRoot r3 = solve_log_equation(3.0);
        const double e5 = rel_err(r5.approximation, r5.root);
        const double e3 = rel_err(r3.approximation, r3.root);
        const bool ok = r5.residual < 1e-12 && r3.residual < 1e-12 && e5 <= 0.005 && e3 <= 0.03;
        return Verdict{ok, fmt("k=5 root %.6f residual %.1e approx off %.3f%%; k=3 root %.6f residual %.1e approx "
                               "off %.3f%%",
                               r5.root, r5.residual, 100.0 * e5, r3.root, r3.residual, 100.0 * e3)};
    });

    criterion(6, "capacity decreasing in y below h1", 0.0, [&] {
        const LinkParams link = default_link();
        const double h1 = threshold_h1(link, led);
        auto gen = test::rng(106);
        int violations = 0;
        for (int i = 0; i < 400; ++i) {
            const double a = alpha(link.with_h(test::log_uniform(gen, 1e-3, h1)), led);
            const double x = test::log_uniform(gen, led.f_p1, led.f_p2);
            const double y = test::log_uniform(gen, led.f_p2, 100.0 * led.f_p2);
            const double dy = 1e-6 * y;
            const double slope = (capacity_from_poles({x, y + dy}, a) - capacity_from_poles({x, y - dy}, a)) / (2 * dy);
            if (!(slope < 0.0)) ++violations;
        }
        return Verdict{violations == 0, fmt("%d violations in 400 samples", violations)};
    });

    criterion(7, "dominance and crossover", 0.0, [&] {
        const SweepResult& s = default_sweep();
        int dominated = 0;
        bool below = false;
        bool above = false;
        for (const SweepRow& r : s.rows) {
            if (r.c_refined < r.c_bce * (1.0 - 1e-9) || r.c_refined < r.c_noeq * (1.0 - 1e-9)) ++dominated;
            below = below || (r.h <= 0.04 && r.c_bce < r.c_noeq);
            above = above || (r.h >= 0.4 && r.c_bce > r.c_noeq);
        }
        return Verdict{dominated == 0 && below && above,
                       fmt("%d dominance violations; BCE<NoEq at h<=0.04: %s; BCE>NoEq at h>=0.4: %s", dominated,
                           below ? "yes" : "no", above ? "yes" : "no")};
    });

    criterion(8, "capacity gap anchors (mu = 1)", 0.0, [&] {
        const double g04 = gap_over_bypass(0.4, 1.0);
        const double g004 = gap_over_bypass(0.04, 1.0);
        const bool ok = std::abs(g04 - 400e6) <= 0.15 * 400e6 && std::abs(g004 - 40e6) <= 0.5 * 40e6;
        return Verdict{ok, fmt("gap at h=0.4 %.1f Mbit/s (target 400 +/-15%%), at h=0.04 %.1f Mbit/s (target 40 "
                               "+/-50%%); convention-sensitive: mu=0.2 gives %.1f and %.1f",
                               g04 / 1e6, g004 / 1e6, gap_over_bypass(0.4, 0.2) / 1e6,
                               gap_over_bypass(0.04, 0.2) / 1e6)};
    });

    criterion(9, "algebraic consistency", 0.0, [&] {
        auto gen = test::rng(109);
        double worst_capacity = 0.0;
        double worst_response = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const LinkParams link = default_link(test::log_uniform(gen, 1e-3, 1.0));
            const double x = test::log_uniform(gen, led.f_p1, 100.0 * led.f_p2);
            const double y = test::log_uniform(gen, led.f_p2, 100.0 * led.f_p2);
            const EqualizerModel eq = derive_equalizer_model(synthesize_from_poles(x, y, led), led.r_g);
            const LinkPoles p = surviving_poles(led, eq);
            const double via_bk = capacity_from_bk(analytic_bandwidth(p), end_to_end_gain(link, led, p), link);
            worst_capacity = std::max(worst_capacity, rel_err(via_bk, capacity_from_poles(p, alpha(link, led))));
            const double f = test::log_uniform(gen, 1e5, 1e11);
            worst_response = std::max(worst_response, rel_err(std::abs(link_response_cascade(f, link, led, eq)),
                                                              std::abs(link_response(f, link, led, eq))));
        }
        const bool ok = worst_capacity <= 1e-9 && worst_response <= 1e-9;
        return Verdict{ok, fmt("capacity routes %.2e, cascade vs closed |H| %.2e (limit 1e-9)", worst_capacity,
                               worst_response)};
    });

    criterion(10, "deterministic CSV", 0.0, [&] {
        const cli::RunConfig cfg = cli::parse_config("{}");
        std::ostringstream s1, s2, c1, c2;
        cli::cmd_sweep(cfg, s1);
        cli::cmd_sweep(cfg, s2);
        cli::cmd_compare(cfg, c1);
        cli::cmd_compare(cfg, c2);
        const bool ok = s1.str() == s2.str() && c1.str() == c2.str() && !s1.str().empty() && !c1.str().empty();
        return Verdict{ok, fmt("sweep %zu bytes %s, compare %zu bytes %s", s1.str().size(),
                               s1.str() == s2.str() ? "identical" : "DIFFERENT", c1.str().size(),
                               c1.str() == c2.str() ? "identical" : "DIFFERENT")};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "preeq/circuits.hpp"
#include "preeq/linkmodel.hpp"
#include "preeq/optimizer.hpp"
#include "support.hpp"

using namespace preeq;
using preeq::test::default_led;
using preeq::test::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double db(Complex v) { return 20.0 * std::log10(std::abs(v)); }

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("LED model at the typical parameters") {
    const LedModel led = default_led();
    // Hand evaluation: (0.5 + 1) / (2 pi 10.8e-9 0.5), 51 / (2 pi 28.6e-9), 2 * 0.5 / (51 * 1.5).
    CHECK(rel_err(led.f_p1, 44.20970641441537e6) < 1e-12);
    CHECK(rel_err(led.f_p2, 283.8077656533798e6) < 1e-12);
    CHECK(rel_err(led.k, 1.0 / 76.5) < 1e-12);
    CHECK_FALSE(led.poles_swapped);
}

TEST_CASE("LED model limits and scaling") {
    LedParams p;
    p.r_l = 1e9;
    CHECK(rel_err(derive_led_model(p, 50.0).f_p1, 1.0 / (2.0 * kPi * p.c_w)) < 1e-8);

    LedParams doubled;
    doubled.l_b *= 2.0;
    CHECK(rel_err(derive_led_model(doubled, 50.0).f_p2, default_led().f_p2 / 2.0) < 1e-15);
}

TEST_CASE("LED poles are reported in ascending order") {
    LedParams p;
    p.c_w = 1e-12;
    const LedModel led = derive_led_model(p, 50.0);
    CHECK(led.poles_swapped);
    CHECK(led.f_p1 < led.f_p2);
}

TEST_CASE("LED model rejects non-positive inputs") {
    LedParams p;
    p.c_w = 0.0;
    CHECK_THROWS_AS(derive_led_model(p, 50.0), std::invalid_argument);
    CHECK_THROWS_AS(derive_led_model(LedParams{}, -1.0), std::invalid_argument);
}

TEST_CASE("LED transmission shape") {
    const LedModel led = default_led();
    CHECK(led_s21(led, 0.0) == Complex(led.k));

    // The upper pole adds 1.2 % of attenuation at the lower pole.
    const double at_pole = std::abs(led_s21(led, led.f_p1));
    CHECK(rel_err(at_pole, led.k / std::sqrt(2.0)) < 0.02);

    const double drop = db(led_s21(led, led.f_p1)) - db(led_s21(led, 0.0));
    const double ratio = led.f_p1 / led.f_p2;
    CHECK(drop == doctest::Approx(-10.0 * std::log10(2.0) - 10.0 * std::log10(1.0 + ratio * ratio)).epsilon(1e-12));

    const double slope = db(led_s21(led, 100.0 * led.f_p2)) - db(led_s21(led, 10.0 * led.f_p2));
    CHECK(std::abs(slope + 40.0) < 0.5);

    const ScatteringMatrix s = led_scattering(led, 1e8);
    CHECK(s.s11 == Complex(0.0));
    CHECK(s.s22 == Complex(0.0));
    CHECK(s.s12 == s.s21);
}

TEST_CASE("equalizer model by direct formula") {
    const EqualizerParams p{100.0, 360e-9, 20.0, 28e-12};
    const EqualizerModel m = derive_equalizer_model(p, 50.0);
    const double fz1 = 100.0 / (2.0 * kPi * 360e-9);
    const double fp1 = (200.0 + 50.0) / (4.0 * kPi * 360e-9);
    const double fz2 = 1.0 / (2.0 * kPi * 28e-12 * 20.0);
    const double fp2 = (100.0 + 20.0) / (4.0 * kPi * 50.0 * 28e-12 * 20.0);
    CHECK(rel_err(m.f_z1, fz1) < 1e-12);
    CHECK(rel_err(m.f_p1, fp1) < 1e-12);
    CHECK(rel_err(m.f_z2, fz2) < 1e-12);
    CHECK(rel_err(m.f_p2, fp2) < 1e-12);
    CHECK(rel_err(m.k, fz1 * fz2 / (fp1 * fp2)) < 1e-12);
    CHECK(rel_err(m.k * m.f_p1 * m.f_p2 / (m.f_z1 * m.f_z2), 1.0) < 1e-12);
    CHECK(m.stage1_present);
    CHECK(m.stage2_present);
}

TEST_CASE("r1 equal to half the source resistance lifts the pole one octave") {
    const EqualizerModel m = derive_equalizer_model(EqualizerParams{25.0, 1e-7, 0.0, 0.0}, 50.0);
    CHECK(rel_err(m.f_p1, 2.0 * m.f_z1) < 1e-15);
    CHECK_FALSE(m.stage2_present);
    CHECK(std::isnan(m.f_z2));
    CHECK(std::isnan(m.f_p2));
}

TEST_CASE("equalizer transmission shape") {
    const EqualizerModel full = derive_equalizer_model(EqualizerParams{100.0, 360e-9, 20.0, 28e-12}, 50.0);
    CHECK(rel_err(equalizer_s21(full, 0.0), Complex(full.k)) < 1e-15);
    CHECK(std::abs(equalizer_s21(full, 1e15)) == doctest::Approx(1.0).epsilon(1e-6));

    const EqualizerModel bypass = derive_equalizer_model(EqualizerParams::bypass(), 50.0);
    CHECK_FALSE(bypass.stage1_present);
    CHECK_FALSE(bypass.stage2_present);
    for (double f : {0.0, 1e6, 1e9, 1e12}) {
        CHECK(equalizer_s21(bypass, f) == Complex(1.0));
    }
}

TEST_CASE("shelving shape: rises between zero and pole, flat beyond") {
    const LedModel led = default_led();
    const EqualizerParams p = synthesize_from_poles(4.0 * led.f_p1, led.f_p2, led);
    const EqualizerModel m = derive_equalizer_model(p, 50.0);
    double previous = db(equalizer_s21(m, m.f_z1));
    for (double f = m.f_z1 * 1.1; f < m.f_p1; f *= 1.1) {
        const double now = db(equalizer_s21(m, f));
        CHECK(now > previous);
        previous = now;
    }
    const double flat_a = db(equalizer_s21(m, 1000.0 * m.f_p1));
    const double flat_b = db(equalizer_s21(m, 10000.0 * m.f_p1));
    CHECK(std::abs(flat_a - flat_b) < 1e-4);
}

TEST_CASE("zero matching lands the zeros on the LED poles") {
    const LedModel led = default_led();
    const EqualizerParams p = match_zeros_to_led(led, 100.0, 20.0);
    CHECK(rel_err(p.l_e, 100.0 * 10.8e-9 * 0.5 / 1.5) < 1e-12);
    CHECK(rel_err(p.c_e, 28.6e-9 / (20.0 * 51.0)) < 1e-12);
    const EqualizerModel m = derive_equalizer_model(p, 50.0);
    CHECK(rel_err(m.f_z1, led.f_p1) < 1e-12);
    CHECK(rel_err(m.f_z2, led.f_p2) < 1e-12);

    const EqualizerParams first_order = match_zeros_to_led(led, 100.0, 0.0);
    CHECK_FALSE(first_order.stage2_present());
    CHECK(surviving_poles(led, derive_equalizer_model(first_order, 50.0)).y == led.f_p2);
}

TEST_CASE("synthesis corners") {
    const LedModel led = default_led();
    const EqualizerParams none = synthesize_from_poles(led.f_p1, led.f_p2, led);
    CHECK_FALSE(none.stage1_present());
    CHECK_FALSE(none.stage2_present());

    const EqualizerParams octave = synthesize_from_poles(2.0 * led.f_p1, led.f_p2, led);
    REQUIRE(octave.stage1_present());
    CHECK(rel_err(*octave.r1, 25.0) < 1e-12);
    CHECK(octave.r2 == 0.0);

    CHECK_THROWS_AS(synthesize_from_poles(0.5 * led.f_p1, led.f_p2, led), std::domain_error);
    CHECK_THROWS_AS(synthesize_from_poles(led.f_p1, 0.9 * led.f_p2, led), std::domain_error);
}

TEST_CASE("synthesis at the symmetric optimum round-trips") {
    const LedModel led = default_led();
    const double x = 610.4e6;
    const EqualizerModel m = derive_equalizer_model(synthesize_from_poles(x, x, led), 50.0);
    CHECK(rel_err(m.f_p1, x) < 1e-9);
    CHECK(rel_err(m.f_p2, x) < 1e-9);
    CHECK(rel_err(m.f_z1, led.f_p1) < 1e-12);
    CHECK(rel_err(m.f_z2, led.f_p2) < 1e-12);
}

TEST_CASE("synthesis round trip over random poles") {
    const LedModel led = default_led();
    auto gen = test::rng(10);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = test::log_uniform(gen, led.f_p1 * (1 + 1e-9), 100.0 * led.f_p2);
        const double y = test::log_uniform(gen, led.f_p2 * (1 + 1e-9), 100.0 * led.f_p2);
        const EqualizerModel m = derive_equalizer_model(synthesize_from_poles(x, y, led), 50.0);
        const LinkPoles p = surviving_poles(led, m);
        if (rel_err(p.x, x) > 1e-9 || rel_err(p.y, y) > 1e-9) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("component values are monotone in the target poles") {
    const LedModel led = default_led();
    double r1_prev = std::numeric_limits<double>::infinity();
    double r2_prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double scale = std::pow(100.0, i / 200.0);
        const EqualizerParams p = synthesize_from_poles(led.f_p1 * scale, led.f_p2 * scale, led);
        CHECK(*p.r1 < r1_prev);
        CHECK(p.r2 > r2_prev);
        r1_prev = *p.r1;
        r2_prev = p.r2;
    }
}

TEST_CASE("closed-form component expressions agree with synthesis") {
    const LedModel led = default_led();
    const LedParams& c = led.params;
    const double rg = 50.0;

    SUBCASE("symmetric regime") {
        const double a = alpha(test::default_link(0.5), led);
        const double root5 = std::pow(2.0 * a, 0.2);
        const double x = root5 / kE;
        const EqualizerParams p = synthesize_from_poles(x, x, led);
        const double den1 = 4.0 * kPi * c.c_w * c.r_l * root5 - 2.0 * kE * (c.r_l + 1.0);
        const double r1 = kE * rg * (c.r_l + 1.0) / den1;
        const double l_e = kE * rg * c.c_w * c.r_l / den1;
        const double r2 = 4.0 * kPi * rg * c.l_b / (c.r_s + rg) * root5 / kE - 2.0 * rg;
        const double c_e = kE * c.l_b / (4.0 * kPi * rg * c.l_b * root5 - 2.0 * kE * rg * (c.r_s + rg));
        CHECK(rel_err(*p.r1, r1) < 1e-9);
        CHECK(rel_err(p.l_e, l_e) < 1e-9);
        CHECK(rel_err(p.r2, r2) < 1e-9);
        CHECK(rel_err(p.c_e, c_e) < 1e-9);
        // Component relations that hold for any matched design.
        CHECK(rel_err(p.l_e, *p.r1 * c.c_w * c.r_l / (c.r_l + 1.0)) < 1e-12);
        CHECK(rel_err(p.c_e, c.l_b / (p.r2 * (c.r_s + rg))) < 1e-12);
    }

    SUBCASE("first-order regime") {
        const double a = alpha(test::default_link(0.01), led);
        const double x = std::cbrt(a) / (kE * std::pow(led.f_p2, 2.0 / 3.0));
        const EqualizerParams p = synthesize_from_poles(x, led.f_p2, led);
        const double g = std::pow(c.r_s + rg, 2.0 / 3.0);
        const double den = std::cbrt(a) * std::pow(2.0 * kPi * c.l_b, 2.0 / 3.0) * 2.0 * kPi * c.c_w * c.r_l -
                           kE * g * (c.r_l + 1.0);
        const double r1 = 0.5 * rg * kE * g * (c.r_l + 1.0) / den;
        const double l_e = 0.5 * kE * c.c_w * c.r_l * rg * g / den;
        CHECK(rel_err(*p.r1, r1) < 1e-9);
        CHECK(rel_err(p.l_e, l_e) < 1e-9);
        CHECK(p.r2 == 0.0);
    }
}

}  // TEST_SUITE

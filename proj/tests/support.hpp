#ifndef PREEQ_TESTS_SUPPORT_HPP
#define PREEQ_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "preeq/circuits.hpp"
#include "preeq/linkmodel.hpp"

namespace preeq::test {

inline LedModel default_led() { return derive_led_model(LedParams{}, 50.0); }

inline LinkParams default_link(double h = 0.5) {
    LinkConfig cfg;
    cfg.h = h;
    return linearize(cfg);
}

inline double rel_err(double actual, double expected) {
    return std::abs(actual - expected) / std::abs(expected);
}

inline double rel_err(std::complex<double> actual, std::complex<double> expected) {
    return std::abs(actual - expected) / std::abs(expected);
}

// Fixed seed so every run samples the same points.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed1234abcdULL + salt); }

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(gen));
}

}  // namespace preeq::test

#endif  // PREEQ_TESTS_SUPPORT_HPP

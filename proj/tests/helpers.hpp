#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "levyskew/chain.hpp"
#include "levyskew/fourier.hpp"
#include "levyskew/models.hpp"

namespace levyskew::testing {

// Reference models used across the suites.
inline LevyModel merton_model(double sigma = 0.2, double lambda = 1.0, double mu = -0.1,
                              double delta_j = 0.15) {
    return LevyModel{0.0, sigma, MertonJumps{lambda, mu, delta_j}};
}

inline LevyModel cgmy_model(double sigma = 0.0, double c = 1.0, double g = 5.0, double m = 10.0,
                            double y_exp = 0.5) {
    return LevyModel{0.0, sigma, CgmyJumps{c, g, m, y_exp}};
}

inline LevyModel meixner_model(double sigma = 0.0, double a_m = 0.3, double b_m = -0.45,
                               double d_m = 2.0) {
    return LevyModel{0.0, sigma, MeixnerJumps{a_m, b_m, d_m}};
}

inline LevyModel diffusion_model(double sigma = 0.2) { return LevyModel{0.0, sigma, NoJumps{}}; }

// Symmetric (beta = -1/2) instances of each family.
inline LevyModel symmetric_merton() { return merton_model(0.2, 1.0, -0.01125, 0.15); }
inline LevyModel symmetric_cgmy() { return cgmy_model(0.0, 1.0, 4.0, 5.0, 0.5); }
inline LevyModel symmetric_meixner() { return meixner_model(0.0, 0.3, -0.15, 2.0); }

// Composite Simpson rule; oracle-grade quadrature for test comparisons.
template <class F>
auto simpson(F f, double lo, double hi, int n) {
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    auto sum = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) {
        sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * (h / 3.0);
}

// Levy densities straight from the family definitions; independent of the
// closed-form exponents in the implementation.
inline double levy_density(const JumpFamily& jumps, double y) {
    if (const auto* j = std::get_if<MertonJumps>(&jumps)) {
        const double z = (y - j->mu) / j->delta_j;
        return j->lambda / (j->delta_j * std::sqrt(2.0 * std::numbers::pi)) *
               std::exp(-0.5 * z * z);
    }
    if (const auto* j = std::get_if<CgmyJumps>(&jumps)) {
        if (y > 0) return j->c * std::exp(-j->m * y) * std::pow(y, -1.0 - j->y_exp);
        return j->c * std::exp(j->g * y) * std::pow(-y, -1.0 - j->y_exp);
    }
    if (const auto* j = std::get_if<MeixnerJumps>(&jumps)) {
        return j->d_m * std::exp(j->b_m * y / j->a_m) /
               (y * std::sinh(std::numbers::pi * y / j->a_m));
    }
    return 0.0;
}

// Synthetic chain priced by the Fourier engine under the futures convention
// (s0 = f0, delta = r); both sides quoted at every strike.
inline OptionChain synthetic_chain(const LevyModel& model, double f0, double r, double t,
                                   const std::vector<double>& strikes,
                                   const FourierConfig& cfg = {}) {
    OptionChain chain;
    chain.future = f0;
    chain.valuation_date = "2006-08-31";
    chain.expiry_date = "2006-09-15";
    FourierEngine engine(MarketParams{f0, r, r, t}, model, cfg);
    for (double k : strikes) {
        chain.records.push_back(ChainRecord{k, engine.call(k), engine.put(k)});
    }
    return chain;
}

}  // namespace levyskew::testing

#pragma once

#include <cstdint>

#include "levyskew/models.hpp"

namespace levyskew {

struct McResult {
    double estimate;
    double std_error;
    std::int64_t n_paths;
    std::uint64_t seed;
};

// Black-Scholes-Merton call with continuous dividend yield; sigma == 0 gives
// the discounted intrinsic of the forward.
double black_scholes_call(double s0, double strike, double r, double delta, double sigma, double t);
double black_scholes_put(double s0, double strike, double r, double delta, double sigma, double t);

// Merton (1976) closed-form series for the European call. The model must be
// mean-corrected; truncation error is bounded by the Poisson tail times s0.
double merton_series(const MarketParams& market, const LevyModel& model, double strike,
                     int n_terms = 40);

// Exact terminal-law Monte Carlo for Merton or pure-diffusion models.
// Counter-based generation keyed by (seed, path index) and fixed-order
// pairwise reduction: identical (seed, n_paths) gives identical results.
McResult mc_price(const MarketParams& market, const LevyModel& model, double strike, bool is_call,
                  std::int64_t n_paths, std::uint64_t seed);

}  // namespace levyskew

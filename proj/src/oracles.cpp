#include "levyskew/oracles.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace levyskew {

namespace {

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Stateless per-path stream: the state depends only on (seed, path index),
// so sharding paths across workers cannot change any draw.
SplitMix64 path_stream(std::uint64_t seed, std::int64_t path) {
    SplitMix64 seeder{seed ^ 0x6A09E667F3BCC909ull};
    const std::uint64_t base = seeder.next();
    return SplitMix64{base + 0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(path + 1)};
}

double uniform_open(SplitMix64& rng) {
    // (0, 1]: never 0, so log() below is safe.
    return (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
}

double normal(SplitMix64& rng) {
    const double u1 = uniform_open(rng);
    const double u2 = uniform_open(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t poisson(SplitMix64& rng, double mean) {
    if (mean <= 0) return 0;
    const double u = uniform_open(rng);
    double p = std::exp(-mean);
    double cum = p;
    std::int64_t k = 0;
    while (u > cum && k < 10000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

double black_scholes_call(double s0, double strike, double r, double delta, double sigma,
                          double t) {
    const double df_r = std::exp(-r * t);
    const double df_q = std::exp(-delta * t);
    if (sigma <= 0.0) {
        return std::max(s0 * df_q - strike * df_r, 0.0);
    }
    const double sd = sigma * std::sqrt(t);
    const double d1 = (std::log(s0 / strike) + (r - delta + 0.5 * sigma * sigma) * t) / sd;
    const double d2 = d1 - sd;
    return s0 * df_q * norm_cdf(d1) - strike * df_r * norm_cdf(d2);
}

double black_scholes_put(double s0, double strike, double r, double delta, double sigma, double t) {
    return black_scholes_call(s0, strike, r, delta, sigma, t) -
           s0 * std::exp(-delta * t) + strike * std::exp(-r * t);
}

double merton_series(const MarketParams& market, const LevyModel& model, double strike,
                     int n_terms) {
    validate(market);
    validate(model);
    if (n_terms < 1) throw ParameterOutOfRange("n_terms must be >= 1");
    const auto* j = std::get_if<MertonJumps>(&model.jumps);
    if (!j) throw WrongFamily("merton_series requires Merton jumps");

    const double kappa = std::exp(j->mu + 0.5 * j->delta_j * j->delta_j) - 1.0;
    const double lambda_p = j->lambda * (1.0 + kappa);
    const double t = market.t;

    double price = 0.0;
    double weight = std::exp(-lambda_p * t);  // Poisson(lambda' T) pmf at n
    for (int n = 0; n <= n_terms; ++n) {
        if (n > 0) weight *= lambda_p * t / n;
        const double sigma_n = std::sqrt(model.sigma * model.sigma +
                                         n * j->delta_j * j->delta_j / t);
        const double r_n = market.r - j->lambda * kappa +
                           n * (j->mu + 0.5 * j->delta_j * j->delta_j) / t;
        price += weight *
                 black_scholes_call(market.s0, strike, r_n, market.delta, sigma_n, t);
    }
    return price;
}

McResult mc_price(const MarketParams& market, const LevyModel& model, double strike, bool is_call,
                  std::int64_t n_paths, std::uint64_t seed) {
    validate(market);
    validate(model);
    if (n_paths < 1000) throw ParameterOutOfRange("n_paths must be >= 1000");
    const auto* mj = std::get_if<MertonJumps>(&model.jumps);
    if (!mj && !std::holds_alternative<NoJumps>(model.jumps))
        throw WrongFamily("mc_price supports Merton or pure-diffusion models only");

    const double t = market.t;
    const double sqrt_t = std::sqrt(t);
    const double disc = std::exp(-market.r * t);
    const double lambda_t = mj ? mj->lambda * t : 0.0;

    std::vector<double> payoffs(static_cast<std::size_t>(n_paths));
    std::vector<double> payoffs_sq(static_cast<std::size_t>(n_paths));
    for (std::int64_t i = 0; i < n_paths; ++i) {
        SplitMix64 rng = path_stream(seed, i);
        double x = model.a * t + model.sigma * sqrt_t * normal(rng);
        if (mj) {
            const std::int64_t n_jumps = poisson(rng, lambda_t);
            for (std::int64_t q = 0; q < n_jumps; ++q) {
                x += mj->mu + mj->delta_j * normal(rng);
            }
        }
        const double s_t = market.s0 * std::exp(x);
        const double payoff = disc * std::max(is_call ? s_t - strike : strike - s_t, 0.0);
        payoffs[static_cast<std::size_t>(i)] = payoff;
        payoffs_sq[static_cast<std::size_t>(i)] = payoff * payoff;
    }

    const double n = static_cast<double>(n_paths);
    const double mean = pairwise_sum(payoffs) / n;
    const double mean_sq = pairwise_sum(payoffs_sq) / n;
    const double var = std::max(mean_sq - mean * mean, 0.0) * n / (n - 1.0);
    return McResult{mean, std::sqrt(var / n), n_paths, seed};
}

}  // namespace levyskew

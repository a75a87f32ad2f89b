#pragma once

#include <complex>
#include <variant>

#include "levyskew/errors.hpp"

namespace levyskew {

// Lognormal jumps with intensity lambda, log-jump mean mu and std delta_j.
// (Merton's delta is called delta_j here; delta is the dividend rate.)
struct MertonJumps {
    double lambda = 0.0;
    double mu = 0.0;
    double delta_j = 0.1;
};

// Jump density c*e^{g*y}|y|^{-1-y_exp} for y<0, c*e^{-m*y} y^{-1-y_exp} for y>0.
// m > 1 so the martingale correction is well defined.
struct CgmyJumps {
    double c = 1.0;
    double g = 2.0;
    double m = 3.0;
    double y_exp = 0.5;
};

// Jump density d_m * e^{b_m*y/a_m} / (y*sinh(pi*y/a_m)).
struct MeixnerJumps {
    double a_m = 0.3;
    double b_m = 0.0;
    double d_m = 1.0;
};

// Pure diffusion (Black-Scholes-Merton limit).
struct NoJumps {};

using JumpFamily = std::variant<NoJumps, MertonJumps, CgmyJumps, MeixnerJumps>;

// Open vertical strip of Re(z) with finite exponential moments; always
// contains Re(z)=0. Endpoints may be infinite. Evaluation exactly on an
// endpoint is a StripViolation, not a limit.
struct ComplexStrip {
    double p_lo;
    double p_hi;

    bool contains(double p) const { return p_lo < p && p < p_hi; }
};

// Risk-neutral Levy triplet (a, sigma^2, Pi) in parametric form. Immutable
// value type; all operations below are pure functions.
struct LevyModel {
    double a = 0.0;       // drift, per year
    double sigma = 0.0;   // diffusion volatility, >= 0
    JumpFamily jumps = NoJumps{};
};

struct MarketParams {
    double s0;     // spot or future level, > 0
    double r;      // risk-free rate, >= 0
    double delta;  // dividend rate, >= 0
    double t;      // maturity in years, > 0

    double forward() const;
};

// The (beta, Pi0) factorization Pi(dy) = e^{beta*y} Pi0(dy), Pi0 symmetric.
struct BetaDecomposition {
    double beta;
    JumpFamily family;  // symmetric base parameters (beta = 0 tilt)
};

// Throws ParameterOutOfRange if any family bound is violated.
void validate(const JumpFamily& jumps);
void validate(const LevyModel& model);
void validate(const MarketParams& market);

ComplexStrip strip(const LevyModel& model);

// Cumulant psi(z) with E e^{z X_t} = e^{t psi(z)}, in closed form per family.
// Throws StripViolation if Re(z) is outside the model's strip.
std::complex<double> char_exponent(const LevyModel& model, std::complex<double> z);

// Replaces the drift so that psi(1) = r - delta exactly.
LevyModel mean_correct(const LevyModel& model, double r, double delta);

// Dual market model: psi~(z) = psi(1-z) - psi(1), sigma~ = sigma,
// Pi~(dy) = e^{-y} Pi(-dy); drift set by mean correction with (delta, r)
// swapped. Involutive: dual(dual(m, r, d), d, r) == m.
LevyModel dual_triplet(const LevyModel& model, double r, double delta);

// Symmetry/tilt parameter; the market is symmetric iff beta == -1/2.
double beta_of(const LevyModel& model);

BetaDecomposition beta_decomposition(const LevyModel& model);

// Re-tilts the jump measure to e^{beta_new*y} p(y) dy holding the even factor
// p (including its mass) fixed; drift re-corrected for (r, delta).
LevyModel with_beta(const LevyModel& model, double beta_new, double r, double delta);

}  // namespace levyskew

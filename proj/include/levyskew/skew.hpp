#pragma once

#include <span>
#include <string>
#include <vector>

#include "levyskew/fourier.hpp"
#include "levyskew/models.hpp"

namespace levyskew {

// One point of the skewness-premium curve under the futures convention
// S0 = F0, r = delta, with K_c = (1+x)F0 and K_p = F0/(1+x).
struct SKPoint {
    double x;
    double k_call;
    double k_put;
    double sk;      // c(K_c)/p(K_p) - 1
    double excess;  // sk - x
};

// Put prices below this floor make the SK ratio meaningless.
inline constexpr double kPutPriceFloor = 1e-10;

SKPoint sk(const LevyModel& model, double f0, double r, double t, double x,
           const FourierConfig& cfg = {});

// c - (1+x) p; zero (up to pricing tolerance) iff beta == -1/2.
double bates_rule_residual(const LevyModel& model, double f0, double r, double t, double x,
                           const FourierConfig& cfg = {});

// |c(s0,K,r,delta,T,psi) - p(K,s0,delta,r,T,psi~)| with psi~ from dual_triplet.
double duality_check(const LevyModel& model, double s0, double strike, double r, double delta,
                     double t, const FourierConfig& cfg = {});

struct SignScanCell {
    double beta;
    double x;
    int sign;  // sign of sk - x with |excess| <= tol treated as 0
    bool skipped;
    std::string note;
};

// Scans sign(SK(x) - x) over a (beta, x) grid, re-tilting the base model at
// fixed Pi0. Cells whose tilt violates family bounds are marked skipped.
std::vector<SignScanCell> sk_excess_sign_scan(const LevyModel& base_model,
                                              std::span<const double> betas,
                                              std::span<const double> xs, double f0, double r,
                                              double t, const FourierConfig& cfg = {},
                                              double zero_tol = 1e-5);

struct MonotonicityCell {
    double beta;
    double call_price;
    bool skipped;
    std::string note;
};

struct MonotonicityReport {
    std::vector<MonotonicityCell> cells;
    bool monotone;
    int direction;  // +1 nondecreasing, -1 nonincreasing, 0 constant or not monotone
};

// Empirical probe of price monotonicity in beta at a fixed strike and Pi0.
MonotonicityReport monotonicity_scan(const LevyModel& base_model, std::span<const double> betas,
                                     double f0, double strike, double r, double t,
                                     const FourierConfig& cfg = {});

}  // namespace levyskew

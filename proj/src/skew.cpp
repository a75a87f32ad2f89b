#include "levyskew/skew.hpp"

#include <cmath>
#include <sstream>

namespace levyskew {

namespace {

struct SkPrices {
    double k_call, k_put, call, put;
};

SkPrices sk_prices(const LevyModel& model, double f0, double r, double t, double x,
                   const FourierConfig& cfg) {
    if (x < 0) throw ParameterOutOfRange("x must be >= 0");
    const MarketParams market{f0, r, r, t};
    FourierEngine engine(market, model, cfg);
    const double k_call = (1.0 + x) * f0;
    const double k_put = f0 / (1.0 + x);
    const double c = engine.call(k_call);
    const double p = engine.put(k_put);
    if (p < kPutPriceFloor) {
        std::ostringstream msg;
        msg << "put at strike " << k_put << " priced " << p << ", below floor " << kPutPriceFloor;
        throw DegeneratePut(msg.str());
    }
    return {k_call, k_put, c, p};
}

}  // namespace

SKPoint sk(const LevyModel& model, double f0, double r, double t, double x,
           const FourierConfig& cfg) {
    const SkPrices v = sk_prices(model, f0, r, t, x, cfg);
    const double ratio = v.call / v.put - 1.0;
    return SKPoint{x, v.k_call, v.k_put, ratio, ratio - x};
}

double bates_rule_residual(const LevyModel& model, double f0, double r, double t, double x,
                           const FourierConfig& cfg) {
    const SkPrices v = sk_prices(model, f0, r, t, x, cfg);
    return v.call - (1.0 + x) * v.put;
}

double duality_check(const LevyModel& model, double s0, double strike, double r, double delta,
                     double t, const FourierConfig& cfg) {
    const LevyModel dual = dual_triplet(model, r, delta);
    const double c = euro_call(MarketParams{s0, r, delta, t}, model, strike, cfg);
    const double p = euro_put(MarketParams{strike, delta, r, t}, dual, s0, cfg);
    return std::abs(c - p);
}

std::vector<SignScanCell> sk_excess_sign_scan(const LevyModel& base_model,
                                              std::span<const double> betas,
                                              std::span<const double> xs, double f0, double r,
                                              double t, const FourierConfig& cfg,
                                              double zero_tol) {
    std::vector<SignScanCell> out;
    out.reserve(betas.size() * xs.size());
    for (double beta : betas) {
        LevyModel tilted;
        bool tilt_ok = true;
        std::string note;
        try {
            tilted = with_beta(base_model, beta, r, r);
        } catch (const Error& e) {
            tilt_ok = false;
            note = e.what();
        }
        for (double x : xs) {
            if (!tilt_ok) {
                out.push_back({beta, x, 0, true, note});
                continue;
            }
            try {
                const SKPoint pt = sk(tilted, f0, r, t, x, cfg);
                const int sign = std::abs(pt.excess) <= zero_tol ? 0 : (pt.excess > 0 ? 1 : -1);
                out.push_back({beta, x, sign, false, {}});
            } catch (const Error& e) {
                out.push_back({beta, x, 0, true, e.what()});
            }
        }
    }
    return out;
}

MonotonicityReport monotonicity_scan(const LevyModel& base_model, std::span<const double> betas,
                                     double f0, double strike, double r, double t,
                                     const FourierConfig& cfg) {
    MonotonicityReport report;
    report.cells.reserve(betas.size());
    const MarketParams market{f0, r, r, t};
    for (double beta : betas) {
        try {
            const LevyModel tilted = with_beta(base_model, beta, r, r);
            report.cells.push_back({beta, euro_call(market, tilted, strike, cfg), false, {}});
        } catch (const Error& e) {
            report.cells.push_back({beta, 0.0, true, e.what()});
        }
    }

    // Direction verdict over non-skipped cells; ties within pricing noise
    // count as flat in either direction.
    const double slack = 2.0 * cfg.abs_tol;
    bool nondecreasing = true, nonincreasing = true;
    const MonotonicityCell* prev = nullptr;
    for (const auto& cell : report.cells) {
        if (cell.skipped) continue;
        if (prev) {
            if (cell.call_price < prev->call_price - slack) nondecreasing = false;
            if (cell.call_price > prev->call_price + slack) nonincreasing = false;
        }
        prev = &cell;
    }
    report.monotone = nondecreasing || nonincreasing;
    report.direction = !report.monotone ? 0
                       : (nondecreasing && nonincreasing ? 0 : (nondecreasing ? 1 : -1));
    return report;
}

}  // namespace levyskew

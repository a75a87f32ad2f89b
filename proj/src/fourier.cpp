#include "levyskew/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace levyskew {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; rule is symmetric).
constexpr int kHalf = 8;
constexpr double kGlX[kHalf] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr double kGlW[kHalf] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

void validate_config(const FourierConfig& cfg) {
    if (cfg.damping_alpha <= 0) throw ParameterOutOfRange("damping_alpha must be > 0");
    if (cfg.u_max <= 0) throw ParameterOutOfRange("u_max must be > 0");
    if (cfg.n_nodes < 64 || cfg.n_nodes % 2 != 0)
        throw ParameterOutOfRange("n_nodes must be even and >= 64");
    if (cfg.abs_tol <= 0) throw ParameterOutOfRange("abs_tol must be > 0");
}

}  // namespace

FourierEngine::FourierEngine(const MarketParams& market, const LevyModel& model,
                             const FourierConfig& cfg)
    : market_(market), cfg_(cfg) {
    validate(market);
    validate_config(cfg);

    if (model.sigma == 0.0 && std::holds_alternative<NoJumps>(model.jumps)) {
        degenerate_ = true;
        return;
    }

    const double alpha = cfg.damping_alpha;
    const ComplexStrip s = strip(model);
    if (!(1.0 + alpha < s.p_hi)) {
        std::ostringstream msg;
        msg << "damping_alpha=" << alpha << " needs 1+alpha < " << s.p_hi;
        throw StripViolation(msg.str());
    }

    const int panels = (cfg.n_nodes + 2 * kHalf - 1) / (2 * kHalf);
    const double h = cfg.u_max / panels;
    u_.reserve(2 * kHalf * panels);
    rho_w_.reserve(u_.capacity());

    const std::complex<double> i{0.0, 1.0};
    const double disc = std::exp(-market.r * market.t);
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (int q = 0; q < 2 * kHalf; ++q) {
            const int j = q % kHalf;
            const double u = mid + (q < kHalf ? -1.0 : 1.0) * 0.5 * h * kGlX[j];
            const std::complex<double> z = (alpha + 1.0) + i * u;
            const std::complex<double> phi = std::exp(market.t * char_exponent(model, z));
            const std::complex<double> denom =
                alpha * alpha + alpha - u * u + i * (2.0 * alpha + 1.0) * u;
            u_.push_back(u);
            rho_w_.push_back(0.5 * h * kGlW[j] * disc * phi / denom);
        }
    }

    {
        const std::complex<double> z = (alpha + 1.0) + i * cfg.u_max;
        const std::complex<double> phi = std::exp(market.t * char_exponent(model, z));
        const std::complex<double> denom =
            alpha * alpha + alpha - cfg.u_max * cfg.u_max + i * (2.0 * alpha + 1.0) * cfg.u_max;
        tail_mag_ = disc * std::abs(phi / denom);
    }
}

double FourierEngine::call(double strike) const {
    if (strike <= 0) throw ParameterOutOfRange("strike must be > 0");
    const double s0 = market_.s0;
    const double lower =
        std::max(s0 * std::exp(-market_.delta * market_.t) - strike * std::exp(-market_.r * market_.t), 0.0);
    const double upper = s0 * std::exp(-market_.delta * market_.t);

    if (degenerate_) {
        return std::max(market_.forward() - strike, 0.0) * std::exp(-market_.r * market_.t);
    }

    const double alpha = cfg_.damping_alpha;
    const double k = std::log(strike / s0);
    const double prefactor = s0 * std::exp(-alpha * k) / std::numbers::pi;

    // Crude tail bound: endpoint magnitude times remaining width proxy u_max.
    if (prefactor * tail_mag_ * cfg_.u_max > cfg_.abs_tol / 10.0) {
        std::ostringstream msg;
        msg << "integrand tail at u_max=" << cfg_.u_max << " too large for abs_tol="
            << cfg_.abs_tol << " at strike " << strike;
        throw TruncationWarning(msg.str());
    }

    double sum = 0.0;
    for (std::size_t j = 0; j < u_.size(); ++j) {
        const std::complex<double> e{std::cos(u_[j] * k), -std::sin(u_[j] * k)};
        sum += (e * rho_w_[j]).real();
    }
    double price = prefactor * sum;
    price = std::clamp(price, lower, upper);
    if (price < cfg_.abs_tol) price = 0.0;
    return price;
}

double FourierEngine::put(double strike) const {
    const double c = call(strike);
    double p = c - market_.s0 * std::exp(-market_.delta * market_.t) +
               strike * std::exp(-market_.r * market_.t);
    const double upper = strike * std::exp(-market_.r * market_.t);
    p = std::clamp(p, 0.0, upper);
    if (p < cfg_.abs_tol) p = 0.0;
    return p;
}

double euro_call(const MarketParams& market, const LevyModel& model, double strike,
                 const FourierConfig& cfg) {
    return FourierEngine(market, model, cfg).call(strike);
}

double euro_put(const MarketParams& market, const LevyModel& model, double strike,
                const FourierConfig& cfg) {
    return FourierEngine(market, model, cfg).put(strike);
}

std::vector<double> euro_calls(const MarketParams& market, const LevyModel& model,
                               std::span<const double> strikes, const FourierConfig& cfg) {
    FourierEngine engine(market, model, cfg);
    std::vector<double> out;
    out.reserve(strikes.size());
    for (double k : strikes) out.push_back(engine.call(k));
    return out;
}

}  // namespace levyskew

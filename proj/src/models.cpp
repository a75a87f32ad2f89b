#include "levyskew/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace levyskew {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void out_of_range(const std::string& what) {
    throw ParameterOutOfRange(what);
}

}  // namespace

double MarketParams::forward() const { return s0 * std::exp((r - delta) * t); }

void validate(const JumpFamily& jumps) {
    std::visit(overloaded{
                   [](const NoJumps&) {},
                   [](const MertonJumps& j) {
                       if (j.lambda < 0) out_of_range("merton: lambda must be >= 0");
                       if (j.delta_j <= 0) out_of_range("merton: delta_j must be > 0");
                   },
                   [](const CgmyJumps& j) {
                       if (j.c <= 0) out_of_range("cgmy: c must be > 0");
                       if (j.g <= 0) out_of_range("cgmy: g must be > 0");
                       if (j.m <= 1) out_of_range("cgmy: m must be > 1");
                       if (j.y_exp >= 2) out_of_range("cgmy: y_exp must be < 2");
                   },
                   [](const MeixnerJumps& j) {
                       if (j.a_m <= 0) out_of_range("meixner: a_m must be > 0");
                       if (std::abs(j.b_m) >= std::numbers::pi)
                           out_of_range("meixner: |b_m| must be < pi");
                       if (j.d_m <= 0) out_of_range("meixner: d_m must be > 0");
                   },
               },
               jumps);
}

void validate(const LevyModel& model) {
    if (model.sigma < 0) out_of_range("sigma must be >= 0");
    validate(model.jumps);
}

void validate(const MarketParams& market) {
    if (market.s0 <= 0) out_of_range("s0 must be > 0");
    if (market.r < 0) out_of_range("r must be >= 0");
    if (market.delta < 0) out_of_range("delta must be >= 0");
    if (market.t <= 0) out_of_range("t must be > 0");
}

ComplexStrip strip(const LevyModel& model) {
    validate(model);
    return std::visit(
        overloaded{
            [](const NoJumps&) { return ComplexStrip{-kInf, kInf}; },
            [](const MertonJumps&) { return ComplexStrip{-kInf, kInf}; },
            [](const CgmyJumps& j) { return ComplexStrip{-j.g, j.m}; },
            [](const MeixnerJumps& j) {
                const double pi = std::numbers::pi;
                return ComplexStrip{-(pi + j.b_m) / j.a_m, (pi - j.b_m) / j.a_m};
            },
        },
        model.jumps);
}

namespace {

// Jump part of the exponent, closed form per family. Conventions on the
// linear-in-z compensation term differ per family; the drift is always fixed
// operationally through mean_correct, so any consistent convention works.
std::complex<double> jump_exponent(const JumpFamily& jumps, std::complex<double> z) {
    using C = std::complex<double>;
    return std::visit(
        overloaded{
            [](const NoJumps&) { return C{0.0, 0.0}; },
            [&](const MertonJumps& j) {
                return j.lambda * (std::exp(j.mu * z + 0.5 * j.delta_j * j.delta_j * z * z) - 1.0);
            },
            [&](const CgmyJumps& j) {
                const double y = j.y_exp;
                if (y == 0.0) {
                    return j.c * (std::log(j.m / (j.m - z)) + std::log(j.g / (j.g + z)));
                }
                if (y == 1.0) {
                    return j.c * ((j.m - z) * std::log((j.m - z) / j.m) +
                                  (j.g + z) * std::log((j.g + z) / j.g));
                }
                return j.c * std::tgamma(-y) *
                       (std::pow(j.m - z, y) - std::pow(j.m, y) + std::pow(j.g + z, y) -
                        std::pow(j.g, y));
            },
            [&](const MeixnerJumps& j) {
                return 2.0 * j.d_m *
                       (std::log(std::cos(0.5 * j.b_m)) -
                        std::log(std::cos(0.5 * (j.a_m * z + j.b_m))));
            },
        },
        jumps);
}

void require_in_strip(const LevyModel& model, double p) {
    const ComplexStrip s = strip(model);
    if (!s.contains(p)) {
        std::ostringstream msg;
        msg << "Re(z)=" << p << " outside strip (" << s.p_lo << ", " << s.p_hi << ")";
        throw StripViolation(msg.str());
    }
}

}  // namespace

std::complex<double> char_exponent(const LevyModel& model, std::complex<double> z) {
    require_in_strip(model, z.real());
    return model.a * z + 0.5 * model.sigma * model.sigma * z * z + jump_exponent(model.jumps, z);
}

LevyModel mean_correct(const LevyModel& model, double r, double delta) {
    const std::complex<double> psi1 = char_exponent(model, 1.0);
    LevyModel out = model;
    out.a += (r - delta) - psi1.real();
    return out;
}

LevyModel dual_triplet(const LevyModel& model, double r, double delta) {
    require_in_strip(model, 1.0);
    LevyModel dual = model;
    dual.jumps = std::visit(
        overloaded{
            [](const NoJumps&) { return JumpFamily{NoJumps{}}; },
            [](const MertonJumps& j) {
                MertonJumps d;
                d.lambda = j.lambda * std::exp(j.mu + 0.5 * j.delta_j * j.delta_j);
                d.mu = -(j.mu + j.delta_j * j.delta_j);
                d.delta_j = j.delta_j;
                return JumpFamily{d};
            },
            [](const CgmyJumps& j) {
                CgmyJumps d = j;
                d.g = j.m - 1.0;
                d.m = j.g + 1.0;
                return JumpFamily{d};
            },
            [](const MeixnerJumps& j) {
                MeixnerJumps d = j;
                d.b_m = -j.b_m - j.a_m;
                return JumpFamily{d};
            },
        },
        model.jumps);
    return mean_correct(dual, delta, r);
}

double beta_of(const LevyModel& model) {
    return std::visit(
        overloaded{
            [](const NoJumps&) -> double { throw NoJumpsError("beta_of: model has no jumps"); },
            [](const MertonJumps& j) { return j.mu / (j.delta_j * j.delta_j); },
            [](const CgmyJumps& j) { return 0.5 * (j.g - j.m); },
            [](const MeixnerJumps& j) { return j.b_m / j.a_m; },
        },
        model.jumps);
}

BetaDecomposition beta_decomposition(const LevyModel& model) {
    const double beta = beta_of(model);
    JumpFamily base = std::visit(
        overloaded{
            [](const NoJumps&) -> JumpFamily { throw NoJumpsError("beta_decomposition: no jumps"); },
            [&](const MertonJumps& j) {
                // Even factor keeps the mass lambda*e^{-mu^2/(2 delta_j^2)}.
                MertonJumps b = j;
                b.lambda = j.lambda * std::exp(-0.5 * j.mu * j.mu / (j.delta_j * j.delta_j));
                b.mu = 0.0;
                return JumpFamily{b};
            },
            [](const CgmyJumps& j) {
                CgmyJumps b = j;
                b.g = b.m = 0.5 * (j.g + j.m);
                return JumpFamily{b};
            },
            [](const MeixnerJumps& j) {
                MeixnerJumps b = j;
                b.b_m = 0.0;
                return JumpFamily{b};
            },
        },
        model.jumps);
    return BetaDecomposition{beta, base};
}

LevyModel with_beta(const LevyModel& model, double beta_new, double r, double delta) {
    const double beta = beta_of(model);
    LevyModel out = model;
    out.jumps = std::visit(
        overloaded{
            [](const NoJumps&) -> JumpFamily { throw NoJumpsError("with_beta: no jumps"); },
            [&](const MertonJumps& j) {
                MertonJumps n = j;
                const double dj2 = j.delta_j * j.delta_j;
                n.lambda = j.lambda * std::exp(0.5 * (beta_new * beta_new - beta * beta) * dj2);
                n.mu = beta_new * dj2;
                return JumpFamily{n};
            },
            [&](const CgmyJumps& j) {
                const double eta = 0.5 * (j.g + j.m);
                CgmyJumps n = j;
                n.g = eta + beta_new;
                n.m = eta - beta_new;
                if (n.g <= 0) out_of_range("with_beta: cgmy needs eta + beta_new > 0");
                if (n.m <= 1) out_of_range("with_beta: cgmy needs eta - beta_new > 1");
                return JumpFamily{n};
            },
            [&](const MeixnerJumps& j) {
                MeixnerJumps n = j;
                n.b_m = beta_new * j.a_m;
                if (std::abs(n.b_m) >= std::numbers::pi)
                    out_of_range("with_beta: meixner needs |beta_new * a_m| < pi");
                return JumpFamily{n};
            },
        },
        model.jumps);
    validate(out);
    return mean_correct(out, r, delta);
}

}  // namespace levyskew

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "levyskew/chain.hpp"

using namespace levyskew;
using namespace levyskew::testing;

TEST_CASE("natural spline reproduces linear data between knots") {
    const std::vector<double> x{1.0, 2.0, 3.5, 5.0, 7.0};
    std::vector<double> y;
    for (double xi : x) y.push_back(3.0 * xi - 1.0);
    const CubicSpline s = CubicSpline::fit(x, y);
    for (double q = 1.0; q <= 7.0; q += 0.13) {
        CHECK(s(q) == doctest::Approx(3.0 * q - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("spline is exact at knots") {
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> y{1.0, -2.0, 0.5, 3.0, -1.0};
    const CubicSpline s = CubicSpline::fit(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-12));
    }
}

TEST_CASE("hand-derived natural spline midpoint values") {
    // Knots (0,0), (1,1), (2,0), (3,1), (4,0). Solving the natural tridiagonal
    // system by hand (M1 = M3 by symmetry): M1 = -30/7, M2 = 36/7, and
    // S(0.5) = 0.5 - (3/8)*(M1/6) = 0.5 + 15/56.
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> y{0.0, 1.0, 0.0, 1.0, 0.0};
    const CubicSpline s = CubicSpline::fit(x, y);
    const double m1 = -30.0 / 7.0;
    const double expected_half = 0.5 - (3.0 / 8.0) * (m1 / 6.0);
    CHECK(s(0.5) == doctest::Approx(expected_half).epsilon(1e-12));
}

TEST_CASE("spline refuses extrapolation and short inputs") {
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> y{0.0, 1.0, 4.0, 9.0};
    const CubicSpline s = CubicSpline::fit(x, y);
    CHECK_THROWS_AS((void)s(-0.1), ExtrapolationRequest);
    CHECK_THROWS_AS((void)s(3.1), ExtrapolationRequest);
    const std::vector<double> too_few{0.0, 1.0, 2.0};
    CHECK_THROWS_AS((void)CubicSpline::fit(too_few, too_few), InsufficientPoints);
    const std::vector<double> not_sorted{0.0, 2.0, 1.0, 3.0};
    CHECK_THROWS_AS((void)CubicSpline::fit(not_sorted, y), ParameterOutOfRange);
}

namespace {

constexpr double kRefF = 1303.82;

std::vector<double> linspace_strikes(double lo, double hi, double step) {
    std::vector<double> out;
    for (double k = lo; k <= hi + 1e-9; k += step) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("table conventions on the reference future price") {
    // Deterministic (K_paired, x) columns; premiums are synthetic.
    const LevyModel model = mean_correct(symmetric_merton(), 0.05, 0.05);
    const OptionChain chain = synthetic_chain(model, kRefF, 0.05, 15.0 / 365.0,
                                              linspace_strikes(1230, 1385, 5));
    const TableResult t1 = table_calls_vs_interp_puts(chain);
    const TableResult t2 = table_puts_vs_interp_calls(chain);

    for (const auto& row : t1.rows) {
        CHECK(row.k_primary * row.k_paired == doctest::Approx(kRefF * kRefF).epsilon(1e-12));
        CHECK(row.x == doctest::Approx(row.k_primary / kRefF - 1.0).epsilon(1e-12));
    }
    for (const auto& row : t2.rows) {
        CHECK(row.k_primary * row.k_paired == doctest::Approx(kRefF * kRefF).epsilon(1e-12));
        CHECK(row.x == doctest::Approx(kRefF / row.k_primary - 1.0).epsilon(1e-12));
    }

    // Spot checks against the printed table rows.
    const auto& first = t1.rows.front();
    CHECK(first.k_primary == 1230);
    CHECK(first.k_paired == doctest::Approx(1382.07).epsilon(1e-5));
    CHECK(first.x == doctest::Approx(-0.05662).epsilon(2e-4));
}

TEST_CASE("at-the-money-forward strike maps to x = 0") {
    const LevyModel model = mean_correct(symmetric_merton(), 0.05, 0.05);
    auto strikes = linspace_strikes(kRefF - 45, kRefF + 45, 10);
    strikes.push_back(kRefF);  // grid is offset by 5, so F itself is new
    std::sort(strikes.begin(), strikes.end());
    const OptionChain chain =
        synthetic_chain(model, kRefF, 0.05, 0.1, strikes);
    bool seen = false;
    for (const auto& row : table_calls_vs_interp_puts(chain).rows) {
        if (row.k_primary == kRefF) {
            CHECK(row.x == 0.0);
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("rows needing extrapolation are dropped and counted") {
    const LevyModel model = mean_correct(symmetric_merton(), 0.05, 0.05);
    const OptionChain chain =
        synthetic_chain(model, 100.0, 0.05, 0.5, linspace_strikes(80, 120, 2));
    const TableResult t1 = table_calls_vs_interp_puts(chain);
    // K_c = 80 pairs to 125, K_c = 120 pairs to 83.3: low-strike calls drop.
    CHECK(t1.skipped > 0);
    CHECK(!t1.rows.empty());
    for (const auto& row : t1.rows) {
        CHECK(row.k_paired >= 80.0);
        CHECK(row.k_paired <= 120.0);
    }
}

TEST_CASE("exact-pair chain: x_obs equals the direct price ratio") {
    const double f0 = 100.0, r = 0.05, t = 0.5;
    const LevyModel model = mean_correct(merton_model(), r, r);
    const std::vector<double> xs{0.02, 0.04, 0.06, 0.08};
    std::vector<double> strikes{f0};
    for (double x : xs) {
        strikes.push_back(f0 * (1 + x));
        strikes.push_back(f0 / (1 + x));
    }
    std::sort(strikes.begin(), strikes.end());
    const OptionChain chain = synthetic_chain(model, f0, r, t, strikes);

    FourierEngine engine(MarketParams{f0, r, r, t}, model, {});
    for (const auto& row : table_calls_vs_interp_puts(chain).rows) {
        // Paired strike is a knot, so the spline contributes nothing.
        const double direct = engine.call(row.k_primary) / engine.put(row.k_paired) - 1.0;
        CHECK(row.x_obs == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("diagnose") {
    const double f0 = 100.0, r = 0.05, t = 0.5;
    const auto strikes = linspace_strikes(85, 115, 1);
    SUBCASE("symmetric chain reads consistent-with-symmetry") {
        const LevyModel model = mean_correct(merton_model(0.15, 1.0, -0.045, 0.3), r, r);
        const ChainSummary s = diagnose(synthetic_chain(model, f0, r, t, strikes));
        CHECK(s.verdict == "consistent-with-symmetry");
        CHECK(std::abs(s.median_otm_excess) <= 1e-3);
    }
    SUBCASE("beta = +1 chain reads call-skew") {
        const LevyModel base = mean_correct(merton_model(0.15, 1.0, -0.045, 0.3), r, r);
        const LevyModel model = with_beta(base, 1.0, r, r);
        const ChainSummary s = diagnose(synthetic_chain(model, f0, r, t, strikes));
        CHECK(s.verdict == "call-skew");
        CHECK(s.otm_obs_above > s.otm_obs_below);
    }
}

TEST_CASE("chain csv round trip") {
    const LevyModel model = mean_correct(symmetric_merton(), 0.05, 0.05);
    OptionChain chain = synthetic_chain(model, 100.0, 0.05, 0.5, linspace_strikes(90, 110, 5));
    chain.records[1].call_mid.reset();  // unobserved quote stays blank
    std::ostringstream out;
    write_chain_csv(out, chain);
    std::istringstream in(out.str());
    const OptionChain back = read_chain_csv(in);
    CHECK(back.future == chain.future);
    CHECK(back.valuation_date == chain.valuation_date);
    CHECK(back.expiry_date == chain.expiry_date);
    REQUIRE(back.records.size() == chain.records.size());
    for (std::size_t i = 0; i < chain.records.size(); ++i) {
        CHECK(back.records[i].strike == doctest::Approx(chain.records[i].strike));
        CHECK(back.records[i].call_mid.has_value() == chain.records[i].call_mid.has_value());
        if (chain.records[i].put_mid) {
            CHECK(*back.records[i].put_mid ==
                  doctest::Approx(*chain.records[i].put_mid).epsilon(1e-9));
        }
    }
}

TEST_CASE("chain csv error reporting") {
    SUBCASE("bad number carries the line number") {
        std::istringstream in("#F=100\n100,1.0,2.0\n101,xyz,2.0\n");
        try {
            (void)read_chain_csv(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("missing future metadata") {
        std::istringstream in("100,1.0,2.0\n");
        CHECK_THROWS_AS((void)read_chain_csv(in), ParseError);
    }
    SUBCASE("too few observed quotes") {
        std::istringstream in("#F=100\n95,1.0,2.0\n100,1.0,2.0\n105,1.0,2.0\n");
        CHECK_THROWS_AS((void)read_chain_csv(in), InsufficientPoints);
    }
    SUBCASE("unsorted strikes") {
        std::istringstream in(
            "#F=100\n95,1,1\n100,1,1\n99,1,1\n105,1,1\n110,1,1\n");
        CHECK_THROWS_AS((void)read_chain_csv(in), ParameterOutOfRange);
    }
}

TEST_CASE("table csv column order") {
    const LevyModel model = mean_correct(symmetric_merton(), 0.05, 0.05);
    const OptionChain chain =
        synthetic_chain(model, 100.0, 0.05, 0.5, linspace_strikes(90, 110, 2));
    std::ostringstream out;
    write_table_csv(out, table_calls_vs_interp_puts(chain));
    CHECK(out.str().rfind("k_primary,k_paired,x,x_obs,excess\n", 0) == 0);
}

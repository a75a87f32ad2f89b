#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levyskew/errors.hpp"

namespace levyskew {

// Natural cubic spline: zero second derivative at the end knots, exact at the
// knots, evaluation refused outside the knot range.
class CubicSpline {
  public:
    static CubicSpline fit(std::span<const double> x, std::span<const double> y);

    double operator()(double x) const;
    double min_x() const { return x_.front(); }
    double max_x() const { return x_.back(); }

  private:
    CubicSpline() = default;
    std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

struct ChainRecord {
    double strike;
    std::optional<double> call_mid;
    std::optional<double> put_mid;
};

struct OptionChain {
    double future = 0.0;
    std::string valuation_date;
    std::string expiry_date;
    std::vector<ChainRecord> records;  // strictly increasing strikes
};

void validate(const OptionChain& chain);

// Interpolated or observed prices at or below this floor cannot anchor a
// price ratio; such rows are dropped and counted.
inline constexpr double kChainPriceFloor = 1e-10;

// |median OTM excess| at or below this reads as consistent-with-symmetry.
inline constexpr double kSymmetryVerdictTol = 1e-3;

struct SKReportRow {
    double k_primary;
    double k_paired;  // F^2 / k_primary
    double x;
    double x_obs;
    double excess;  // x - x_obs
};

struct TableResult {
    std::vector<SKReportRow> rows;
    int skipped = 0;  // rows dropped because the paired strike needed extrapolation
};

// Observed calls against spline-interpolated puts: x = K_c/F - 1,
// x_obs = c_obs(K_c)/p_int(F^2/K_c) - 1.
TableResult table_calls_vs_interp_puts(const OptionChain& chain);

// Observed puts against spline-interpolated calls: x = F/K_p - 1,
// x_obs = c_int(F^2/K_p)/p_obs(K_p) - 1.
TableResult table_puts_vs_interp_calls(const OptionChain& chain);

struct ChainSummary {
    int otm_obs_below = 0;  // OTM rows with x_obs < x
    int otm_obs_above = 0;
    int itm_obs_below = 0;
    int itm_obs_above = 0;
    double median_otm_excess = 0.0;
    std::string verdict;  // consistent-with-symmetry | call-skew | put-skew
};

ChainSummary diagnose(const OptionChain& chain);

// CSV: metadata lines "#F=", "#valuation=", "#expiry=", optional header line,
// then strike,call_mid,put_mid with blanks for unobserved quotes.
OptionChain read_chain_csv(std::istream& in);
OptionChain read_chain_csv_file(const std::string& path);
void write_chain_csv(std::ostream& out, const OptionChain& chain);

// Columns: k_primary,k_paired,x,x_obs,excess.
void write_table_csv(std::ostream& out, const TableResult& table);
void write_summary(std::ostream& out, const ChainSummary& summary);

}  // namespace levyskew

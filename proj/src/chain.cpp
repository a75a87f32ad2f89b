#include "levyskew/chain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace levyskew {

CubicSpline CubicSpline::fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 4 || y.size() != n)
        throw InsufficientPoints("cubic spline needs at least 4 points");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x[i] > x[i - 1]))
            throw ParameterOutOfRange("spline knots must be strictly increasing");
    }

    CubicSpline s;
    s.x_.assign(x.begin(), x.end());
    s.y_.assign(y.begin(), y.end());
    s.m_.assign(n, 0.0);

    // Thomas algorithm for the natural-spline tridiagonal system.
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1];
        const double h1 = x[i + 1] - x[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double w = (x[i] - x[i - 1]) / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        s.m_[i] = (rhs[i] - upper[i] * s.m_[i + 1]) / diag[i];
    }
    return s;
}

double CubicSpline::operator()(double x) const {
    if (x < x_.front() || x > x_.back()) {
        std::ostringstream msg;
        msg << "evaluation at " << x << " outside knot range [" << x_.front() << ", " << x_.back()
            << "]";
        throw ExtrapolationRequest(msg.str());
    }
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = std::min<std::size_t>(
        x_.size() - 2, static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - x_.begin() - 1, 0)));
    const double h = x_[i + 1] - x_[i];
    const double t0 = (x_[i + 1] - x) / h;
    const double t1 = (x - x_[i]) / h;
    return t0 * y_[i] + t1 * y_[i + 1] +
           ((t0 * t0 * t0 - t0) * m_[i] + (t1 * t1 * t1 - t1) * m_[i + 1]) * h * h / 6.0;
}

void validate(const OptionChain& chain) {
    if (chain.future <= 0) throw ParameterOutOfRange("chain: future price must be > 0");
    int n_calls = 0, n_puts = 0;
    const ChainRecord* prev = nullptr;
    for (const auto& rec : chain.records) {
        if (prev && !(rec.strike > prev->strike))
            throw ParameterOutOfRange("chain: strikes must be strictly increasing");
        if ((rec.call_mid && *rec.call_mid < 0) || (rec.put_mid && *rec.put_mid < 0))
            throw ParameterOutOfRange("chain: prices must be nonnegative");
        n_calls += rec.call_mid.has_value();
        n_puts += rec.put_mid.has_value();
        prev = &rec;
    }
    if (n_calls < 4 || n_puts < 4)
        throw InsufficientPoints("chain: need at least 4 observed calls and 4 observed puts");
}

namespace {

CubicSpline fit_side(const OptionChain& chain, bool calls) {
    std::vector<double> k, p;
    for (const auto& rec : chain.records) {
        const auto& mid = calls ? rec.call_mid : rec.put_mid;
        if (mid) {
            k.push_back(rec.strike);
            p.push_back(*mid);
        }
    }
    return CubicSpline::fit(k, p);
}

}  // namespace

TableResult table_calls_vs_interp_puts(const OptionChain& chain) {
    validate(chain);
    const CubicSpline put_spline = fit_side(chain, /*calls=*/false);
    const double f = chain.future;
    TableResult out;
    for (const auto& rec : chain.records) {
        if (!rec.call_mid) continue;
        const double k_c = rec.strike;
        const double k_p = f * f / k_c;
        if (k_p < put_spline.min_x() || k_p > put_spline.max_x()) {
            ++out.skipped;
            continue;
        }
        const double p_int = put_spline(k_p);
        if (p_int <= kChainPriceFloor) {
            ++out.skipped;
            continue;
        }
        const double x = k_c / f - 1.0;
        const double x_obs = *rec.call_mid / p_int - 1.0;
        out.rows.push_back({k_c, k_p, x, x_obs, x - x_obs});
    }
    return out;
}

TableResult table_puts_vs_interp_calls(const OptionChain& chain) {
    validate(chain);
    const CubicSpline call_spline = fit_side(chain, /*calls=*/true);
    const double f = chain.future;
    TableResult out;
    for (const auto& rec : chain.records) {
        if (!rec.put_mid) continue;
        const double k_p = rec.strike;
        const double k_c = f * f / k_p;
        if (k_c < call_spline.min_x() || k_c > call_spline.max_x()) {
            ++out.skipped;
            continue;
        }
        if (*rec.put_mid <= kChainPriceFloor) {
            ++out.skipped;
            continue;
        }
        const double x = f / k_p - 1.0;
        const double x_obs = call_spline(k_c) / *rec.put_mid - 1.0;
        out.rows.push_back({k_p, k_c, x, x_obs, x - x_obs});
    }
    return out;
}

ChainSummary diagnose(const OptionChain& chain) {
    const TableResult t1 = table_calls_vs_interp_puts(chain);
    const TableResult t2 = table_puts_vs_interp_calls(chain);
    std::vector<SKReportRow> rows = t1.rows;
    rows.insert(rows.end(), t2.rows.begin(), t2.rows.end());
    if (rows.empty()) throw EmptyTable("no report rows survived range filtering");

    ChainSummary s;
    std::vector<double> otm_excess;
    for (const auto& row : rows) {
        const bool otm = row.x > 0;
        const bool below = row.x_obs < row.x;
        if (otm) {
            (below ? s.otm_obs_below : s.otm_obs_above)++;
            otm_excess.push_back(row.excess);
        } else {
            (below ? s.itm_obs_below : s.itm_obs_above)++;
        }
    }
    if (!otm_excess.empty()) {
        std::sort(otm_excess.begin(), otm_excess.end());
        const std::size_t n = otm_excess.size();
        s.median_otm_excess =
            n % 2 ? otm_excess[n / 2] : 0.5 * (otm_excess[n / 2 - 1] + otm_excess[n / 2]);
    }
    // excess = x - x_obs: rich calls drive it negative.
    if (std::abs(s.median_otm_excess) <= kSymmetryVerdictTol) {
        s.verdict = "consistent-with-symmetry";
    } else {
        s.verdict = s.median_otm_excess < 0 ? "call-skew" : "put-skew";
    }
    return s;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw ParseError(msg.str());
}

std::optional<double> parse_opt(const std::string& field, int line) {
    std::string trimmed = field;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) return std::nullopt;
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(trimmed, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "not a number: '" + trimmed + "'");
    }
    if (pos != trimmed.size()) parse_fail(line, "trailing junk in '" + trimmed + "'");
    return v;
}

}  // namespace

OptionChain read_chain_csv(std::istream& in) {
    OptionChain chain;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#F=", 0) == 0) {
                const auto v = parse_opt(line.substr(3), line_no);
                if (!v) parse_fail(line_no, "empty #F= value");
                chain.future = *v;
            } else if (line.rfind("#valuation=", 0) == 0) {
                chain.valuation_date = line.substr(11);
            } else if (line.rfind("#expiry=", 0) == 0) {
                chain.expiry_date = line.substr(8);
            }
            continue;
        }
        if (line.rfind("strike", 0) == 0) continue;  // column header

        std::istringstream fields(line);
        std::string f0, f1, f2;
        if (!std::getline(fields, f0, ',')) parse_fail(line_no, "missing strike");
        std::getline(fields, f1, ',');
        std::getline(fields, f2, ',');
        ChainRecord rec;
        const auto strike = parse_opt(f0, line_no);
        if (!strike) parse_fail(line_no, "missing strike");
        rec.strike = *strike;
        rec.call_mid = parse_opt(f1, line_no);
        rec.put_mid = parse_opt(f2, line_no);
        chain.records.push_back(rec);
    }
    if (chain.future <= 0) throw ParseError("missing or invalid #F= metadata line");
    validate(chain);
    return chain;
}

OptionChain read_chain_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open chain file: " + path);
    return read_chain_csv(in);
}

void write_chain_csv(std::ostream& out, const OptionChain& chain) {
    out.precision(10);
    out << "#F=" << chain.future << "\n";
    if (!chain.valuation_date.empty()) out << "#valuation=" << chain.valuation_date << "\n";
    if (!chain.expiry_date.empty()) out << "#expiry=" << chain.expiry_date << "\n";
    out << "strike,call_mid,put_mid\n";
    for (const auto& rec : chain.records) {
        out << rec.strike << ",";
        if (rec.call_mid) out << *rec.call_mid;
        out << ",";
        if (rec.put_mid) out << *rec.put_mid;
        out << "\n";
    }
}

void write_table_csv(std::ostream& out, const TableResult& table) {
    out.precision(10);
    out << "k_primary,k_paired,x,x_obs,excess\n";
    for (const auto& row : table.rows) {
        out << row.k_primary << "," << row.k_paired << "," << row.x << "," << row.x_obs << ","
            << row.excess << "\n";
    }
}

void write_summary(std::ostream& out, const ChainSummary& s) {
    out.precision(10);
    out << "otm_obs_below " << s.otm_obs_below << "\n"
        << "otm_obs_above " << s.otm_obs_above << "\n"
        << "itm_obs_below " << s.itm_obs_below << "\n"
        << "itm_obs_above " << s.itm_obs_above << "\n"
        << "median_otm_excess " << s.median_otm_excess << "\n"
        << "verdict " << s.verdict << "\n";
}

}  // namespace levyskew

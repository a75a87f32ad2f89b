// Command-line surface: batch pricing, duality checks, SK tables, beta scans
// and option-chain diagnostics. Exit codes: 0 ok, 2 input error, 3 numerical
// error, 4 check failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levyskew/chain.hpp"
#include "levyskew/fourier.hpp"
#include "levyskew/model_spec.hpp"
#include "levyskew/oracles.hpp"
#include "levyskew/skew.hpp"

namespace {

using namespace levyskew;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCheckFailed = 4;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct ModelFlags {
    std::string model_file;
    std::string family;
    double sigma = 0.0;
    double r = 0.0;
    double delta = 0.0;
    double lambda = 0.0, mu = 0.0, delta_j = 0.0;
    double c = 0.0, g = 0.0, m = 0.0, y_exp = 0.0;
    double a_m = 0.0, b_m = 0.0, d_m = 0.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--model-file", model_file, "model spec file (key-value format)");
        cmd.add_option("--family", family, "merton|cgmy|meixner|none");
        cmd.add_option("--sigma", sigma, "diffusion volatility");
        cmd.add_option("--r", r, "risk-free rate");
        cmd.add_option("--delta", delta, "dividend rate");
        cmd.add_option("--lambda", lambda, "merton jump intensity");
        cmd.add_option("--mu", mu, "merton mean log-jump");
        cmd.add_option("--delta_j", delta_j, "merton log-jump std");
        cmd.add_option("--c", c, "cgmy c");
        cmd.add_option("--g", g, "cgmy g");
        cmd.add_option("--m", m, "cgmy m");
        cmd.add_option("--y_exp", y_exp, "cgmy y exponent");
        cmd.add_option("--a_m", a_m, "meixner a");
        cmd.add_option("--b_m", b_m, "meixner b");
        cmd.add_option("--d_m", d_m, "meixner d");
    }

    ModelSpec resolve() const {
        if (!model_file.empty()) return parse_model_spec_file(model_file);
        if (family.empty()) throw ParseError("either --model-file or --family is required");
        ModelSpec spec;
        spec.model.sigma = sigma;
        spec.r = r;
        spec.delta = delta;
        if (family == "none") {
            spec.model.jumps = NoJumps{};
        } else if (family == "merton") {
            spec.model.jumps = MertonJumps{lambda, mu, delta_j};
        } else if (family == "cgmy") {
            spec.model.jumps = CgmyJumps{c, g, m, y_exp};
        } else if (family == "meixner") {
            spec.model.jumps = MeixnerJumps{a_m, b_m, d_m};
        } else {
            throw ParseError("unknown family '" + family + "'");
        }
        validate(spec.model);
        return spec;
    }
};

struct PricerFlags {
    FourierConfig cfg;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--alpha", cfg.damping_alpha, "damping parameter");
        cmd.add_option("--u-max", cfg.u_max, "frequency truncation");
        cmd.add_option("--n-nodes", cfg.n_nodes, "quadrature nodes");
        cmd.add_option("--tol", cfg.abs_tol, "absolute price tolerance");
    }
};

std::vector<double> parse_grid(const std::string& csv, const std::string& flag) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError(flag + ": not a number: '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(flag + ": empty grid");
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot open output file: " + path);
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"Levy-market option pricing, put-call duality and skewness-premium diagnostics"};
    app.require_subcommand(1);

    // price
    auto* price = app.add_subcommand("price", "price a European call or put");
    ModelFlags price_model;
    PricerFlags price_pricer;
    double p_s0 = 100, p_k = 100, p_t = 1;
    std::string method = "fourier";
    bool want_put = false;
    std::int64_t paths = 100000;
    std::uint64_t seed = 1;
    int n_terms = 40;
    price_model.add_to(*price);
    price_pricer.add_to(*price);
    price->add_option("--s0", p_s0, "spot or future level");
    price->add_option("--k", p_k, "strike");
    price->add_option("--t", p_t, "maturity in years");
    price->add_option("--method", method, "fourier|mc|series");
    price->add_flag("--put", want_put, "price the put (default: call)");
    price->add_option("--paths", paths, "mc paths");
    price->add_option("--seed", seed, "mc seed");
    price->add_option("--n-terms", n_terms, "series terms");

    // dual
    auto* dual = app.add_subcommand("dual", "dual model parameters and duality residual");
    ModelFlags dual_model;
    PricerFlags dual_pricer;
    double d_s0 = 100, d_k = 100, d_t = 1;
    dual_model.add_to(*dual);
    dual_pricer.add_to(*dual);
    dual->add_option("--s0", d_s0, "spot level");
    dual->add_option("--k", d_k, "strike");
    dual->add_option("--t", d_t, "maturity in years");

    // sk
    auto* skc = app.add_subcommand("sk", "skewness-premium table over an x grid");
    ModelFlags sk_model;
    PricerFlags sk_pricer;
    double s_f0 = 100, s_t = 1;
    std::string s_xs = "0.01,0.02,0.03,0.04,0.05,0.06,0.07,0.08,0.09,0.10";
    std::string sk_out;
    sk_model.add_to(*skc);
    sk_pricer.add_to(*skc);
    skc->add_option("--f0", s_f0, "future price");
    skc->add_option("--t", s_t, "maturity in years");
    skc->add_option("--xs", s_xs, "comma-separated moneyness offsets");
    skc->add_option("--out", sk_out, "output CSV (default stdout)");

    // scan
    auto* scan = app.add_subcommand("scan", "sign or monotonicity scan over beta");
    ModelFlags scan_model;
    PricerFlags scan_pricer;
    std::string kind = "sign";
    double c_f0 = 100, c_t = 1, c_k = 105;
    std::string c_betas = "-2,-1,-0.5,0,1";
    std::string c_xs = "0.01,0.05,0.1";
    std::string scan_out;
    scan_model.add_to(*scan);
    scan_pricer.add_to(*scan);
    scan->add_option("--kind", kind, "sign|mono");
    scan->add_option("--f0", c_f0, "future price");
    scan->add_option("--t", c_t, "maturity in years");
    scan->add_option("--k", c_k, "strike for the monotonicity scan");
    scan->add_option("--betas", c_betas, "comma-separated beta grid");
    scan->add_option("--xs", c_xs, "comma-separated x grid (sign scan)");
    scan->add_option("--out", scan_out, "output CSV (default stdout)");

    // chain
    auto* chain_cmd = app.add_subcommand("chain", "option-chain diagnostics (Table 1/2 reports)");
    std::string chain_in, out_prefix = "chain_report";
    chain_cmd->add_option("--input", chain_in, "chain CSV file")->required();
    chain_cmd->add_option("--out-prefix", out_prefix, "prefix for the report files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: cli: " << e.what() << "\n";
        return kExitInput;
    }

    if (price->parsed()) {
        const ModelSpec spec = price_model.resolve();
        const LevyModel model = spec.corrected();
        const MarketParams market{p_s0, spec.r, spec.delta, p_t};
        if (method == "fourier") {
            const double v = want_put ? euro_put(market, model, p_k, price_pricer.cfg)
                                      : euro_call(market, model, p_k, price_pricer.cfg);
            std::cout << fmt(v) << "\n";
        } else if (method == "mc") {
            const McResult res = mc_price(market, model, p_k, !want_put, paths, seed);
            std::cout << fmt(res.estimate) << " " << fmt(res.std_error) << "\n";
        } else if (method == "series") {
            double v = merton_series(market, model, p_k, n_terms);
            if (want_put)
                v += p_k * std::exp(-spec.r * p_t) - p_s0 * std::exp(-spec.delta * p_t);
            std::cout << fmt(v) << "\n";
        } else {
            throw ParseError("unknown method '" + method + "'");
        }
        return kExitOk;
    }

    if (dual->parsed()) {
        const ModelSpec spec = dual_model.resolve();
        const LevyModel model = spec.corrected();
        const LevyModel dual_model_v = dual_triplet(model, spec.r, spec.delta);
        ModelSpec dual_spec{dual_model_v, spec.delta, spec.r};
        write_model_spec(std::cout, dual_spec);
        const double residual =
            duality_check(model, d_s0, d_k, spec.r, spec.delta, d_t, dual_pricer.cfg);
        std::cout << "residual " << fmt(residual) << "\n";
        return residual <= 2.0 * dual_pricer.cfg.abs_tol ? kExitOk : kExitCheckFailed;
    }

    if (skc->parsed()) {
        const ModelSpec spec = sk_model.resolve();
        const LevyModel model = spec.corrected();
        std::ofstream file;
        std::ostream& out = open_out(file, sk_out);
        out << "x,k_call,k_put,sk,excess\n";
        for (double x : parse_grid(s_xs, "--xs")) {
            try {
                const SKPoint pt = sk(model, s_f0, spec.r, s_t, x, sk_pricer.cfg);
                out << fmt(pt.x) << "," << fmt(pt.k_call) << "," << fmt(pt.k_put) << ","
                    << fmt(pt.sk) << "," << fmt(pt.excess) << "\n";
            } catch (const DegeneratePut& e) {
                out << fmt(x) << "," << fmt((1 + x) * s_f0) << "," << fmt(s_f0 / (1 + x))
                    << ",NA,NA\n";
                std::cerr << "warning: DegeneratePut: " << e.what() << "\n";
            }
        }
        return kExitOk;
    }

    if (scan->parsed()) {
        const ModelSpec spec = scan_model.resolve();
        const LevyModel model = spec.corrected();
        const auto betas = parse_grid(c_betas, "--betas");
        std::ofstream file;
        std::ostream& out = open_out(file, scan_out);
        if (kind == "sign") {
            const auto cells = sk_excess_sign_scan(model, betas, parse_grid(c_xs, "--xs"), c_f0,
                                                   spec.r, c_t, scan_pricer.cfg);
            out << "beta,x,sign\n";
            for (const auto& cell : cells) {
                out << fmt(cell.beta) << "," << fmt(cell.x) << ",";
                if (cell.skipped) {
                    out << "NA\n";
                    std::cerr << "warning: skipped cell: " << cell.note << "\n";
                } else {
                    out << cell.sign << "\n";
                }
            }
        } else if (kind == "mono") {
            const auto report =
                monotonicity_scan(model, betas, c_f0, c_k, spec.r, c_t, scan_pricer.cfg);
            out << "beta,call\n";
            for (const auto& cell : report.cells) {
                out << fmt(cell.beta) << ",";
                if (cell.skipped) {
                    out << "NA\n";
                    std::cerr << "warning: skipped cell: " << cell.note << "\n";
                } else {
                    out << fmt(cell.call_price) << "\n";
                }
            }
            out << "# monotone " << (report.monotone ? "yes" : "no") << " direction "
                << report.direction << "\n";
        } else {
            throw ParseError("unknown scan kind '" + kind + "'");
        }
        return kExitOk;
    }

    if (chain_cmd->parsed()) {
        const OptionChain chain = read_chain_csv_file(chain_in);
        const TableResult t1 = table_calls_vs_interp_puts(chain);
        const TableResult t2 = table_puts_vs_interp_calls(chain);
        const ChainSummary summary = diagnose(chain);
        {
            std::ofstream f(out_prefix + "_table1.csv");
            if (!f) throw ParseError("cannot write " + out_prefix + "_table1.csv");
            write_table_csv(f, t1);
        }
        {
            std::ofstream f(out_prefix + "_table2.csv");
            if (!f) throw ParseError("cannot write " + out_prefix + "_table2.csv");
            write_table_csv(f, t2);
        }
        {
            std::ofstream f(out_prefix + "_summary.txt");
            if (!f) throw ParseError("cannot write " + out_prefix + "_summary.txt");
            write_summary(f, summary);
        }
        write_summary(std::cout, summary);
        return kExitOk;
    }

    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: ParameterOutOfRange: " << e.what() << "\n";
        return kExitInput;
    } catch (const InsufficientPoints& e) {
        std::cerr << "error: InsufficientPoints: " << e.what() << "\n";
        return kExitInput;
    } catch (const EmptyTable& e) {
        std::cerr << "error: EmptyTable: " << e.what() << "\n";
        return kExitInput;
    } catch (const StripViolation& e) {
        std::cerr << "error: StripViolation: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const TruncationWarning& e) {
        std::cerr << "error: TruncationWarning: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

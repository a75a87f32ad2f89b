#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "levyskew/chain.hpp"
#include "levyskew/fourier.hpp"
#include "levyskew/model_spec.hpp"
#include "levyskew/oracles.hpp"
#include "levyskew/skew.hpp"

namespace py = pybind11;
using namespace levyskew;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Levy-market option pricing, put-call duality and skewness-premium diagnostics";

    py::register_exception<StripViolation>(m, "StripViolation");
    py::register_exception<ParameterOutOfRange>(m, "ParameterOutOfRange");
    py::register_exception<WrongFamily>(m, "WrongFamily");
    py::register_exception<NoJumpsError>(m, "NoJumpsError");
    py::register_exception<TruncationWarning>(m, "TruncationWarningError");
    py::register_exception<DegeneratePut>(m, "DegeneratePutError");
    py::register_exception<InsufficientPoints>(m, "InsufficientPointsError");
    py::register_exception<ExtrapolationRequest>(m, "ExtrapolationRequestError");
    py::register_exception<EmptyTable>(m, "EmptyTableError");
    py::register_exception<ParseError>(m, "ChainParseError");

    py::class_<MertonJumps>(m, "MertonJumps")
        .def(py::init<double, double, double>(), py::arg("lam"), py::arg("mu"), py::arg("delta_j"))
        .def_readwrite("lam", &MertonJumps::lambda)
        .def_readwrite("mu", &MertonJumps::mu)
        .def_readwrite("delta_j", &MertonJumps::delta_j);
    py::class_<CgmyJumps>(m, "CgmyJumps")
        .def(py::init<double, double, double, double>(), py::arg("c"), py::arg("g"), py::arg("m"),
             py::arg("y_exp"))
        .def_readwrite("c", &CgmyJumps::c)
        .def_readwrite("g", &CgmyJumps::g)
        .def_readwrite("m", &CgmyJumps::m)
        .def_readwrite("y_exp", &CgmyJumps::y_exp);
    py::class_<MeixnerJumps>(m, "MeixnerJumps")
        .def(py::init<double, double, double>(), py::arg("a_m"), py::arg("b_m"), py::arg("d_m"))
        .def_readwrite("a_m", &MeixnerJumps::a_m)
        .def_readwrite("b_m", &MeixnerJumps::b_m)
        .def_readwrite("d_m", &MeixnerJumps::d_m);
    py::class_<NoJumps>(m, "NoJumps").def(py::init<>());

    py::class_<LevyModel>(m, "LevyModel")
        .def(py::init([](double a, double sigma, const py::object& jumps) {
                 LevyModel model;
                 model.a = a;
                 model.sigma = sigma;
                 if (jumps.is_none())
                     model.jumps = NoJumps{};
                 else if (py::isinstance<MertonJumps>(jumps))
                     model.jumps = jumps.cast<MertonJumps>();
                 else if (py::isinstance<CgmyJumps>(jumps))
                     model.jumps = jumps.cast<CgmyJumps>();
                 else if (py::isinstance<MeixnerJumps>(jumps))
                     model.jumps = jumps.cast<MeixnerJumps>();
                 else
                     model.jumps = jumps.cast<NoJumps>();
                 validate(model);
                 return model;
             }),
             py::arg("a") = 0.0, py::arg("sigma") = 0.0, py::arg("jumps") = py::none())
        .def_readwrite("a", &LevyModel::a)
        .def_readwrite("sigma", &LevyModel::sigma)
        .def_property_readonly("jumps", [](const LevyModel& model) -> py::object {
            return std::visit([](const auto& j) -> py::object { return py::cast(j); },
                              model.jumps);
        });

    py::class_<MarketParams>(m, "MarketParams")
        .def(py::init<double, double, double, double>(), py::arg("s0"), py::arg("r"),
             py::arg("delta"), py::arg("t"))
        .def_readwrite("s0", &MarketParams::s0)
        .def_readwrite("r", &MarketParams::r)
        .def_readwrite("delta", &MarketParams::delta)
        .def_readwrite("t", &MarketParams::t)
        .def("forward", &MarketParams::forward);

    py::class_<ComplexStrip>(m, "ComplexStrip")
        .def_readonly("p_lo", &ComplexStrip::p_lo)
        .def_readonly("p_hi", &ComplexStrip::p_hi)
        .def("contains", &ComplexStrip::contains);

    py::class_<FourierConfig>(m, "FourierConfig")
        .def(py::init<>())
        .def_readwrite("damping_alpha", &FourierConfig::damping_alpha)
        .def_readwrite("u_max", &FourierConfig::u_max)
        .def_readwrite("n_nodes", &FourierConfig::n_nodes)
        .def_readwrite("abs_tol", &FourierConfig::abs_tol);

    py::class_<McResult>(m, "McResult")
        .def_readonly("estimate", &McResult::estimate)
        .def_readonly("std_error", &McResult::std_error)
        .def_readonly("n_paths", &McResult::n_paths)
        .def_readonly("seed", &McResult::seed);

    py::class_<SKPoint>(m, "SKPoint")
        .def_readonly("x", &SKPoint::x)
        .def_readonly("k_call", &SKPoint::k_call)
        .def_readonly("k_put", &SKPoint::k_put)
        .def_readonly("sk", &SKPoint::sk)
        .def_readonly("excess", &SKPoint::excess);

    m.def("strip", &strip, py::arg("model"));
    m.def("char_exponent", &char_exponent, py::arg("model"), py::arg("z"));
    m.def("mean_correct", &mean_correct, py::arg("model"), py::arg("r"), py::arg("delta"));
    m.def("dual_triplet", &dual_triplet, py::arg("model"), py::arg("r"), py::arg("delta"));
    m.def("beta_of", &beta_of, py::arg("model"));
    m.def("with_beta", &with_beta, py::arg("model"), py::arg("beta_new"), py::arg("r"),
          py::arg("delta"));

    m.def("euro_call", &euro_call, py::arg("market"), py::arg("model"), py::arg("strike"),
          py::arg("cfg") = FourierConfig{});
    m.def("euro_put", &euro_put, py::arg("market"), py::arg("model"), py::arg("strike"),
          py::arg("cfg") = FourierConfig{});
    m.def("black_scholes_call", &black_scholes_call, py::arg("s0"), py::arg("strike"),
          py::arg("r"), py::arg("delta"), py::arg("sigma"), py::arg("t"));
    m.def("merton_series", &merton_series, py::arg("market"), py::arg("model"), py::arg("strike"),
          py::arg("n_terms") = 40);
    m.def("mc_price", &mc_price, py::arg("market"), py::arg("model"), py::arg("strike"),
          py::arg("is_call"), py::arg("n_paths"), py::arg("seed"));

    m.def("sk", &sk, py::arg("model"), py::arg("f0"), py::arg("r"), py::arg("t"), py::arg("x"),
          py::arg("cfg") = FourierConfig{});
    m.def("bates_rule_residual", &bates_rule_residual, py::arg("model"), py::arg("f0"),
          py::arg("r"), py::arg("t"), py::arg("x"), py::arg("cfg") = FourierConfig{});
    m.def("duality_check", &duality_check, py::arg("model"), py::arg("s0"), py::arg("strike"),
          py::arg("r"), py::arg("delta"), py::arg("t"), py::arg("cfg") = FourierConfig{});
    m.def(
        "sk_excess_sign_scan",
        [](const LevyModel& base, const std::vector<double>& betas, const std::vector<double>& xs,
           double f0, double r, double t, const FourierConfig& cfg) {
            py::list out;
            for (const auto& cell : sk_excess_sign_scan(base, betas, xs, f0, r, t, cfg)) {
                out.append(py::make_tuple(cell.beta, cell.x,
                                          cell.skipped ? py::object(py::none())
                                                       : py::object(py::int_(cell.sign))));
            }
            return out;
        },
        py::arg("base_model"), py::arg("betas"), py::arg("xs"), py::arg("f0"), py::arg("r"),
        py::arg("t"), py::arg("cfg") = FourierConfig{});
    m.def(
        "monotonicity_scan",
        [](const LevyModel& base, const std::vector<double>& betas, double f0, double strike,
           double r, double t, const FourierConfig& cfg) {
            const auto report = monotonicity_scan(base, betas, f0, strike, r, t, cfg);
            py::list cells;
            for (const auto& cell : report.cells) {
                cells.append(py::make_tuple(cell.beta,
                                            cell.skipped ? py::object(py::none())
                                                         : py::object(py::float_(cell.call_price))));
            }
            return py::make_tuple(cells, report.monotone, report.direction);
        },
        py::arg("base_model"), py::arg("betas"), py::arg("f0"), py::arg("strike"), py::arg("r"),
        py::arg("t"), py::arg("cfg") = FourierConfig{});

    py::class_<ChainRecord>(m, "ChainRecord")
        .def(py::init([](double strike, std::optional<double> call_mid,
                         std::optional<double> put_mid) {
                 return ChainRecord{strike, call_mid, put_mid};
             }),
             py::arg("strike"), py::arg("call_mid") = py::none(), py::arg("put_mid") = py::none())
        .def_readwrite("strike", &ChainRecord::strike)
        .def_readwrite("call_mid", &ChainRecord::call_mid)
        .def_readwrite("put_mid", &ChainRecord::put_mid);

    py::class_<OptionChain>(m, "OptionChain")
        .def(py::init<>())
        .def_readwrite("future", &OptionChain::future)
        .def_readwrite("valuation_date", &OptionChain::valuation_date)
        .def_readwrite("expiry_date", &OptionChain::expiry_date)
        .def_readwrite("records", &OptionChain::records);

    py::class_<SKReportRow>(m, "SKReportRow")
        .def_readonly("k_primary", &SKReportRow::k_primary)
        .def_readonly("k_paired", &SKReportRow::k_paired)
        .def_readonly("x", &SKReportRow::x)
        .def_readonly("x_obs", &SKReportRow::x_obs)
        .def_readonly("excess", &SKReportRow::excess);

    py::class_<TableResult>(m, "TableResult")
        .def_readonly("rows", &TableResult::rows)
        .def_readonly("skipped", &TableResult::skipped);

    py::class_<ChainSummary>(m, "ChainSummary")
        .def_readonly("otm_obs_below", &ChainSummary::otm_obs_below)
        .def_readonly("otm_obs_above", &ChainSummary::otm_obs_above)
        .def_readonly("itm_obs_below", &ChainSummary::itm_obs_below)
        .def_readonly("itm_obs_above", &ChainSummary::itm_obs_above)
        .def_readonly("median_otm_excess", &ChainSummary::median_otm_excess)
        .def_readonly("verdict", &ChainSummary::verdict);

    m.def("table_calls_vs_interp_puts", &table_calls_vs_interp_puts, py::arg("chain"));
    m.def("table_puts_vs_interp_calls", &table_puts_vs_interp_calls, py::arg("chain"));
    m.def("diagnose", &diagnose, py::arg("chain"));
    m.def("read_chain_csv", &read_chain_csv_file, py::arg("path"));
    m.def(
        "read_chain_csv_string",
        [](const std::string& text) {
            std::istringstream in(text);
            return read_chain_csv(in);
        },
        py::arg("text"));
    m.def(
        "parse_model_spec",
        [](const std::string& text) {
            std::istringstream in(text);
            const ModelSpec spec = parse_model_spec(in);
            return py::make_tuple(spec.model, spec.r, spec.delta);
        },
        py::arg("text"));
}

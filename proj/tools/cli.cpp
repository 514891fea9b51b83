#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alphacalc/alpha_exp.hpp"
#include "alphacalc/check_suites.hpp"
#include "alphacalc/madelung.hpp"
#include "alphacalc/parser.hpp"

namespace alphacalc::cli {

namespace {

// Flag-level validation failure: maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational flag_rational(const char* flag, const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

AlphaOrder flag_alpha(const std::string& text) {
    try {
        return AlphaOrder(Rational::from_string(text));
    } catch (const Error& e) {
        throw UsageError(std::string("--alpha: ") + e.what());
    }
}

Domain flag_domain(const std::string& text) {
    if (text == "exact")
        return Domain::exact;
    if (text == "approx")
        return Domain::approx;
    throw UsageError("--domain: expected \"exact\" or \"approx\"");
}

PuiseuxSeries flag_series(const char* flag, const std::string& text, Domain d) {
    try {
        return parse_series(text, d);
    } catch (const SyntaxError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

GridSpec flag_grid(const std::string& text) {
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw UsageError("--grid: expected start:stop:step");
    try {
        return {Rational::from_string(text.substr(0, first)).to_double(),
                Rational::from_string(text.substr(first + 1, second - first - 1)).to_double(),
                Rational::from_string(text.substr(second + 1)).to_double()};
    } catch (const Error& e) {
        throw UsageError(std::string("--grid: ") + e.what());
    }
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json series_json_object(const PuiseuxSeries& f) {
    return nlohmann::json::parse(series_to_json(f));
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Puiseux-series calculus with the two-term-Leibnitz "
                 "fractional derivative"};
    app.require_subcommand(1);

    std::string alpha_s, expr_s, domain_s = "exact";
    std::string r_s, s_s, rt_s = "0", st_s = "0", v_s = "0";
    std::string dalpha_s, hbar_s = "1", trunc_s = "16", grid_s, at_s;
    std::string suite_s;
    unsigned terms_n = 16;
    unsigned cases_n = 100;
    std::uint64_t seed_n = 0;

    auto* deriv = app.add_subcommand("deriv", "alpha-derivative of a series");
    deriv->add_option("--alpha", alpha_s, "order, rational in (0,1]")->required();
    deriv->add_option("--expr", expr_s, "series expression")->required();
    deriv->add_option("--domain", domain_s, "exact|approx (default exact)");

    auto* integ = app.add_subcommand("integrate", "alpha-integral of a series");
    integ->add_option("--alpha", alpha_s)->required();
    integ->add_option("--expr", expr_s)->required();
    integ->add_option("--domain", domain_s);

    auto* rl = app.add_subcommand("rl", "termwise Riemann-Liouville derivative "
                                        "(approx domain)");
    rl->add_option("--alpha", alpha_s)->required();
    rl->add_option("--expr", expr_s)->required();

    auto* exp_cmd = app.add_subcommand("exp", "alpha-exponent series or closed form");
    exp_cmd->add_option("--alpha", alpha_s)->required();
    exp_cmd->add_option("--terms", terms_n, "retained terms N (default 16)");
    exp_cmd->add_option("--at", at_s, "evaluate exp(z^alpha/alpha) at z instead");

    auto* qpot = app.add_subcommand("qpot", "fractional quantum potential of an "
                                            "amplitude series");
    qpot->add_option("--alpha", alpha_s)->required();
    qpot->add_option("--R", r_s, "amplitude series")->required();
    qpot->add_option("--Dalpha", dalpha_s, "diffusion-like constant")->required();
    qpot->add_option("--hbar", hbar_s, "hbar > 0 (default 1)");
    qpot->add_option("--trunc", trunc_s, "truncation bound (default 16)");
    qpot->add_option("--grid", grid_s, "start:stop:step sampling; CSV output");

    auto* made = app.add_subcommand("madelung", "split residuals of a state");
    made->add_option("--alpha", alpha_s)->required();
    made->add_option("--R", r_s)->required();
    made->add_option("--S", s_s)->required();
    made->add_option("--Rt", rt_s, "time derivative of R (default 0)");
    made->add_option("--St", st_s, "time derivative of S (default 0)");
    made->add_option("--V", v_s, "potential (default 0)");
    made->add_option("--Dalpha", dalpha_s)->required();
    made->add_option("--hbar", hbar_s);

    auto* check = app.add_subcommand("check", "seeded law-check suites");
    check->add_option("suite", suite_s,
                      "leibnitz|chain|commute|fundamental|rl-gap|exp-ode|"
                      "madelung-audit")
        ->required();
    check->add_option("--cases", cases_n, "number of cases (default 100)");
    check->add_option("--seed", seed_n, "RNG seed (default 0)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (deriv->parsed()) {
            PuiseuxSeries f = flag_series("--expr", expr_s, flag_domain(domain_s));
            out << series_to_json(alpha_deriv(f, flag_alpha(alpha_s))) << "\n";
        } else if (integ->parsed()) {
            PuiseuxSeries f = flag_series("--expr", expr_s, flag_domain(domain_s));
            out << series_to_json(alpha_integral(f, flag_alpha(alpha_s))) << "\n";
        } else if (rl->parsed()) {
            PuiseuxSeries f = flag_series("--expr", expr_s, Domain::approx);
            out << series_to_json(rl_deriv_series(f, flag_alpha(alpha_s))) << "\n";
        } else if (exp_cmd->parsed()) {
            AlphaOrder a = flag_alpha(alpha_s);
            if (!at_s.empty()) {
                double z = flag_rational("--at", at_s).to_double();
                nlohmann::json j;
                j["alpha"] = a.value().str();
                j["z"] = z;
                j["value"] = alpha_exp_eval(z, a);
                out << j.dump() << "\n";
            } else {
                if (terms_n < 1)
                    throw UsageError("--terms: need at least one retained term");
                out << series_to_json(alpha_exp_series(a, terms_n).series) << "\n";
            }
        } else if (qpot->parsed()) {
            AlphaOrder a = flag_alpha(alpha_s);
            PuiseuxSeries R = flag_series("--R", r_s, Domain::exact);
            Rational D = flag_rational("--Dalpha", dalpha_s);
            Rational hbar = flag_rational("--hbar", hbar_s);
            Rational T = flag_rational("--trunc", trunc_s);
            if (grid_s.empty()) {
                out << series_to_json(quantum_potential(R, a, D, hbar, T)) << "\n";
            } else {
                auto samples = sample_qpotential(R, a, D, hbar, T, flag_grid(grid_s));
                out << "x,Q_alpha\n";
                for (const auto& [x, q] : samples)
                    out << g17(x) << "," << g17(q) << "\n";
            }
        } else if (made->parsed()) {
            MadelungState st{flag_series("--R", r_s, Domain::exact),
                             flag_series("--S", s_s, Domain::exact),
                             flag_series("--Rt", rt_s, Domain::exact),
                             flag_series("--St", st_s, Domain::exact),
                             flag_series("--V", v_s, Domain::exact),
                             flag_rational("--hbar", hbar_s),
                             flag_rational("--Dalpha", dalpha_s),
                             flag_alpha(alpha_s)};
            SplitResiduals res = split_residuals(st);
            nlohmann::json j;
            j["continuity"] = series_json_object(res.continuity);
            j["hamilton_jacobi"] = series_json_object(res.hamilton_jacobi);
            out << j.dump() << "\n";
        } else if (check->parsed()) {
            if (cases_n < 1)
                throw UsageError("--cases: need at least one case");
            SuiteReport r;
            try {
                r = check_suite(suite_s, cases_n, seed_n);
            } catch (const UnknownSuiteError& e) {
                throw UsageError(std::string("suite: ") + e.what());
            }
            out << format_report(r) << "\n";
            return r.ok() ? 0 : 1;
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace alphacalc::cli

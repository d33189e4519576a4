#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_support.hpp"
#include "kernint/closed_form.hpp"
#include "kernint/errors.hpp"
#include "kernint/partial_fractions.hpp"
#include "kernint/quadrature.hpp"
#include "kernint/series.hpp"
#include "kernint/verify.hpp"

using namespace kernint;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_disagree = 1;
constexpr int exit_usage = 2;

struct SpecFlags {
    std::string n = "1";
    std::string p = "0";
    std::string theta = "1.5707963267948966";
    std::string zeta = "1.5707963267948966";
    std::string upper = "1";
    bool degrees = false;

    void attach(CLI::App* app) {
        app->add_option("--n", n, "exponent n");
        app->add_option("--p", p, "exponent p: RE, RE+IMi, RE-IMi or IMi");
        app->add_option("--theta", theta, "angle θ (radians)");
        app->add_option("--zeta", zeta, "angle ζ (radians)");
        app->add_option("--upper", upper, "upper limit: 1, inf or X");
        app->add_flag("--deg", degrees, "read θ and ζ in degrees");
    }

    double angle(double v) const { return degrees ? v * pi / 180.0 : v; }

    IntegrandSpec single() const {
        const auto ns = cli::parse_real_grid(n);
        const auto ps = cli::parse_complex_grid(p);
        const auto ts = cli::parse_real_grid(theta);
        const auto zs = cli::parse_real_grid(zeta);
        if (ns.size() != 1 || ps.size() != 1 || ts.size() != 1 || zs.size() != 1) {
            throw Error(ErrorKind::ParseError, "this command takes single values, not grids");
        }
        return {ns[0], ps[0], angle(ts[0]), angle(zs[0]), cli::parse_upper(upper)};
    }

    std::vector<IntegrandSpec> grid() const {
        const auto upper_limit = cli::parse_upper(upper);
        std::vector<IntegrandSpec> specs;
        for (const double nv : cli::parse_real_grid(n)) {
            for (const complex pv : cli::parse_complex_grid(p)) {
                for (const double tv : cli::parse_real_grid(theta)) {
                    for (const double zv : cli::parse_real_grid(zeta)) {
                        specs.push_back({nv, pv, angle(tv), angle(zv), upper_limit});
                    }
                }
            }
        }
        return specs;
    }
};

std::string fmt(double x) {
    return cli::format_double(x);
}

int fail(const std::string& message) {
    std::cerr << message << '\n';
    return exit_usage;
}

int run_eval(const SpecFlags& flags, const std::string& method, bool as_json, double tol, bool as_given) {
    const IntegrandSpec spec = flags.single();
    const ThetaPolicy policy = as_given ? ThetaPolicy::AsGiven : ThetaPolicy::Canonicalize;
    const DomainStatus status = classify_domain(spec, policy);
    if (status.kind == DomainKind::Excluded || status.kind == DomainKind::SingularTheta) {
        if (as_json) {
            std::cout << cli::to_json(verify_point(spec, tol, policy)).dump() << '\n';
        }
        return fail(status.detail);
    }
    if (as_json || method == "all") {
        const EvalReport report = verify_point(spec, tol, policy);
        if (as_json) {
            std::cout << cli::to_json(report).dump() << '\n';
        } else {
            auto line = [](const char* name, const std::optional<double>& v) {
                std::cout << name << ' ' << (v ? fmt(*v) : std::string("n/a")) << '\n';
            };
            line("closed", report.closed);
            line("pf", report.pf);
            line("quad", report.quad);
            line("series", report.series);
            std::cout << "max_abs_err " << fmt(report.max_abs_err) << '\n';
            std::cout << "verdict " << to_string(report.verdict) << '\n';
        }
        if (method == "all" && report.verdict == Verdict::Disagree) {
            return exit_disagree;
        }
        return exit_ok;
    }

    // single path
    EvalReport report = verify_point(spec, tol, policy);
    std::optional<double> value;
    if (method == "closed") {
        value = report.closed;
    } else if (method == "pf") {
        value = report.pf;
    } else if (method == "quad") {
        value = report.quad;
    } else if (method == "series") {
        value = report.series;
    }
    if (!value) {
        return fail("method '" + method + "' is not available for this spec");
    }
    std::cout << fmt(*value) << '\n';
    return exit_ok;
}

int write_reports(const std::vector<EvalReport>& reports, const std::string& out_path) {
    std::ostringstream out;
    bool disagree = false;
    for (const auto& r : reports) {
        out << cli::to_json(r).dump() << '\n';
        disagree = disagree || r.verdict == Verdict::Disagree;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << out.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            return fail("cannot write " + out_path);
        }
        file << out.str();
    }
    return disagree ? exit_disagree : exit_ok;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed forms, decompositions, series and quadrature for the rational power kernel integral"};
    app.require_subcommand(1);

    // eval
    SpecFlags eval_flags;
    std::string eval_method = "closed";
    bool eval_json = false;
    bool eval_as_given = false;
    double eval_tol = 1e-9;
    auto* eval = app.add_subcommand("eval", "evaluate the integral for one spec");
    eval_flags.attach(eval);
    eval->add_option("--method", eval_method, "closed|pf|quad|series|all")
        ->check(CLI::IsMember({"closed", "pf", "quad", "series", "all"}));
    eval->add_flag("--json", eval_json, "print the full report as JSON");
    eval->add_option("--tol", eval_tol, "agreement tolerance for --method all");
    eval->add_flag("--as-given", eval_as_given, "do not reduce θ into (0, 2π)");

    // verify
    std::string grid_path;
    std::size_t random_count = 0;
    std::uint64_t seed = 0;
    double verify_tol = 1e-9;
    std::string verify_out;
    unsigned verify_threads = 1;
    bool verify_canon = false;
    auto* verify = app.add_subcommand("verify", "cross-check all paths over a grid");
    auto* grid_opt = verify->add_option("--grid", grid_path, "JSON array of specs or JSON lines");
    auto* random_opt = verify->add_option("--random", random_count, "number of random specs");
    grid_opt->excludes(random_opt);
    verify->add_option("--seed", seed, "seed of the random grid");
    verify->add_option("--tol", verify_tol, "absolute agreement tolerance");
    verify->add_option("--out", verify_out, "output file (JSON lines)");
    verify->add_option("--threads", verify_threads, "worker threads")->check(CLI::Range(1u, 1024u));
    verify->add_flag("--canonicalize", verify_canon, "reduce θ into (0, 2π) before the closed form");

    // decompose
    SpecFlags dec_flags;
    std::string dec_format = "json";
    auto* decompose_cmd = app.add_subcommand("decompose", "simple-fraction decomposition");
    dec_flags.attach(decompose_cmd);
    decompose_cmd->add_option("--format", dec_format, "json|table")->check(CLI::IsMember({"json", "table"}));

    // series
    SpecFlags series_flags;
    std::string variant = "contracted";
    double series_tol = 1e-10;
    double series_q = 0.0;
    bool series_json = false;
    auto* series_cmd = app.add_subcommand("series", "series representations");
    series_flags.attach(series_cmd);
    series_cmd->add_option("--variant", variant, "one-sided|contracted|imaginary")
        ->check(CLI::IsMember({"one-sided", "contracted", "imaginary"}));
    series_cmd->add_option("--tol", series_tol, "tail tolerance");
    series_cmd->add_option("--q", series_q, "q for the imaginary variant (else Im p)");
    series_cmd->add_flag("--json", series_json, "print JSON");

    // table
    SpecFlags table_flags;
    std::string table_out;
    double table_tol = 1e-9;
    unsigned table_threads = 1;
    bool table_canon = false;
    auto* table = app.add_subcommand("table", "CSV sweep over parameter grids");
    table_flags.attach(table);
    table->add_option("--out", table_out, "CSV output file");
    table->add_option("--tol", table_tol, "absolute agreement tolerance");
    table->add_option("--threads", table_threads, "worker threads")->check(CLI::Range(1u, 1024u));
    table->add_flag("--canonicalize", table_canon, "reduce θ into (0, 2π) before the closed form");

    // paradox
    SpecFlags par_flags;
    std::string par_kind;
    int par_k = 1;
    double par_m = 1.0;
    double par_tol = 1e-9;
    bool par_json = false;
    auto* paradox = app.add_subcommand("paradox", "demonstrate where the closed form fails");
    par_flags.attach(paradox);
    paradox->add_option("--kind", par_kind, "periodicity|imaginary-n")
        ->required()
        ->check(CLI::IsMember({"periodicity", "imaginary-n"}));
    paradox->add_option("--k", par_k, "shift θ by 2πk (periodicity)");
    paradox->add_option("--m", par_m, "n = m·i (imaginary-n)");
    paradox->add_option("--tol", par_tol, "tolerance for the restored agreement");
    paradox->add_flag("--json", par_json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (eval->parsed()) {
            return run_eval(eval_flags, eval_method, eval_json, eval_tol, eval_as_given);
        }
        if (verify->parsed()) {
            std::vector<IntegrandSpec> specs;
            if (!grid_path.empty()) {
                specs = cli::read_grid(read_file(grid_path));
            } else if (random_opt->count() > 0) {
                specs = cli::random_specs(random_count, seed);
            } else {
                return fail("verify needs --grid FILE or --random N");
            }
            const auto policy = verify_canon ? ThetaPolicy::Canonicalize : ThetaPolicy::AsGiven;
            return write_reports(cli::sweep(specs, verify_tol, policy, verify_threads), verify_out);
        }
        if (decompose_cmd->parsed()) {
            const Decomposition d = decompose(dec_flags.single());
            if (dec_format == "json") {
                std::cout << cli::to_json(d).dump() << '\n';
            } else {
                std::cout << "k\tomega\tcoeff\n";
                for (std::size_t k = 0; k < d.terms.size(); ++k) {
                    std::cout << k << '\t' << fmt(d.terms[k].omega) << '\t' << fmt(d.terms[k].coeff) << '\n';
                }
            }
            return exit_ok;
        }
        if (series_cmd->parsed()) {
            const IntegrandSpec spec = series_flags.single();
            SeriesResult r;
            if (variant == "one-sided") {
                r = series_one_sided(spec.n, spec.p.real(), spec.theta, series_tol);
            } else if (variant == "contracted") {
                r = series_contracted(spec.n, spec.p.real(), spec.theta, series_tol);
            } else {
                const double q = series_cmd->count("--q") > 0 ? series_q : spec.p.imag();
                r = series_imaginary(spec.n, q, spec.theta, series_tol);
            }
            if (series_json) {
                std::cout << cli::to_json(r).dump() << '\n';
            } else {
                std::cout << "value " << fmt(r.value) << "\nterms_used " << r.terms_used << "\ntail_estimate "
                          << fmt(r.tail_estimate) << '\n';
            }
            return exit_ok;
        }
        if (table->parsed()) {
            const auto policy = table_canon ? ThetaPolicy::Canonicalize : ThetaPolicy::AsGiven;
            const auto reports = cli::sweep(table_flags.grid(), table_tol, policy, table_threads);
            std::ostringstream out;
            out << cli::csv_header << '\n';
            bool disagree = false;
            for (const auto& r : reports) {
                out << cli::csv_row(r) << '\n';
                disagree = disagree || r.verdict == Verdict::Disagree;
            }
            if (table_out.empty() || table_out == "-") {
                std::cout << out.str();
            } else {
                std::ofstream file(table_out, std::ios::binary);
                if (!file) {
                    return fail("cannot write " + table_out);
                }
                file << out.str();
            }
            return disagree ? exit_disagree : exit_ok;
        }
        if (paradox->parsed()) {
            ParadoxReport r;
            if (par_kind == "periodicity") {
                r = paradox_periodicity(par_flags.single(), par_k, par_tol);
            } else {
                const IntegrandSpec spec = par_flags.single();
                r = paradox_imaginary_n(par_m, spec.p.real(), spec.theta);
            }
            const json j = cli::to_json(r);
            if (par_json) {
                std::cout << j.dump() << '\n';
            } else {
                for (const auto& [key, value] : j.items()) {
                    std::cout << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
                }
            }
            return r.manifested ? exit_ok : exit_disagree;
        }
    } catch (const Error& e) {
        return fail(e.what());
    }
    return exit_usage;
}

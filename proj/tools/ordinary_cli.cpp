// Command-line front end: find ordinary curves, run the exhaustive oracle,
// verify certificates, generate seeded data sets, report parameter-space
// dimensions, and plot results.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordinary/generators.hpp"
#include "ordinary/io.hpp"
#include "ordinary/oracle.hpp"
#include "ordinary/spaces.hpp"
#include "ordinary/svg.hpp"

using namespace ordinary;

namespace {

enum ExitCode {
    kOk = 0,
    kNotFound = 1,
    kPrecondition = 2,
    kIoError = 3,
    kBudget = 4,
    kAnomaly = 5,
};

int exit_code_for(const Error& e) {
    switch (e.code) {
        case Err::ContainedInCurve:
        case Err::AllCollinear:
        case Err::TooFewPoints:
            return kPrecondition;
        case Err::ParseError:
        case Err::DuplicatePoint:
        case Err::FormatError:
        case Err::SpecInvalid:
            return kIoError;
        case Err::BudgetExceeded:
            return kBudget;
        case Err::SelectionFailed:
        case Err::NotFound:
            return kNotFound;
        default:
            return kAnomaly;
    }
}

void write_anomaly_report(const std::string& command, const Error& e) {
    std::ostringstream os;
    os << "ordinary anomaly report\n";
    os << "command: " << command << "\n";
    os << "error: " << err_name(e.code) << "\n";
    os << "detail: " << e.what() << "\n";
    try {
        write_file("ordinary-anomaly-report.txt", os.str());
        std::cerr << "anomaly report written to ordinary-anomaly-report.txt\n";
    } catch (const Error&) {
        std::cerr << "anomaly report could not be written\n";
    }
}

PointSet load_points(const std::string& path) { return parse_points(read_file(path)); }

void emit(const std::string& text, const std::string& output) {
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
}

PlotWindow parse_window(const std::string& spec) {
    PlotWindow w;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.y0, &w.x1, &w.y1) != 4 ||
        w.x1 <= w.x0 || w.y1 <= w.y0)
        fail(Err::ParseError, "window must be X0,Y0,X1,Y1 with X0<X1 and Y0<Y1");
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordinary - exact search for ordinary lines, conics and cubics"};
    app.require_subcommand(1);

    // find
    auto* find_cmd = app.add_subcommand("find", "find an ordinary curve of the given degree");
    int find_degree = 3;
    std::string find_input, find_output;
    bool no_fallback = false;
    int threads = 1;
    find_cmd->add_option("--degree", find_degree, "curve degree")->required()->check(CLI::Range(1, 3));
    find_cmd->add_option("--input", find_input, "point file")->required();
    find_cmd->add_option("--output", find_output, "certificate file (default stdout)");
    find_cmd->add_flag("--no-fallback", no_fallback, "fail instead of falling back to the oracle");
    find_cmd->add_option("--threads", threads, "worker threads (never changes the result)")
        ->check(CLI::PositiveNumber);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive subset search");
    int oracle_degree = 3;
    std::string oracle_input;
    bool oracle_all = false;
    std::uint64_t budget = kDefaultSubsetBudget;
    oracle_cmd->add_option("--degree", oracle_degree, "curve degree")->required()->check(CLI::Range(2, 4));
    oracle_cmd->add_option("--input", oracle_input, "point file")->required();
    oracle_cmd->add_flag("--all", oracle_all, "list every admissible support");
    oracle_cmd->add_option("--budget", budget, "subset budget");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a point file");
    std::string verify_input, verify_cert;
    verify_cmd->add_option("--input", verify_input, "point file")->required();
    verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded point set");
    std::string gen_kind = "random", gen_output;
    GeneratorSpec spec;
    std::uint64_t gen_seed = 0;
    long gen_bound = 1000;
    int gen_n = 0, on_line = 0, on_conic = 0;
    gen_cmd->add_option("--kind", gen_kind, "random|heavy-line|heavy-conic|on-cubic|grid|case3b|case3c")
        ->required();
    gen_cmd->add_option("--n", gen_n, "number of points")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_seed, "64-bit seed")->required();
    gen_cmd->add_option("--bound", gen_bound, "coordinate magnitude bound")->required();
    gen_cmd->add_option("--on-line", on_line, "points on the heavy line (heavy-line kind)");
    gen_cmd->add_option("--on-conic", on_conic, "points on the heavy conic (heavy-conic kind)");
    gen_cmd->add_option("--output", gen_output, "point file (default stdout)");

    // dims
    auto* dims_cmd = app.add_subcommand("dims", "parameter-space dimension of the input");
    int dims_degree = 3;
    std::string dims_input;
    dims_cmd->add_option("--degree", dims_degree, "curve degree")->required()->check(CLI::Range(1, 6));
    dims_cmd->add_option("--input", dims_input, "point file")->required();

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "SVG plot of points and an optional certificate");
    std::string plot_input, plot_cert, plot_svg, plot_window = "-10,-10,10,10";
    plot_cmd->add_option("--input", plot_input, "point file")->required();
    plot_cmd->add_option("--cert", plot_cert, "certificate file");
    plot_cmd->add_option("--svg", plot_svg, "output SVG file")->required();
    plot_cmd->add_option("--window", plot_window, "X0,Y0,X1,Y1 affine window")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kIoError;
    }

    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

    try {
        if (*find_cmd) {
            set_default_threads(threads);
            PointSet A = load_points(find_input);
            Certificate cert;
            if (find_degree == 1) cert = find_ordinary_line_certificate(A, threads);
            else if (find_degree == 2) cert = find_ordinary_conic(A, threads);
            else cert = find_ordinary_cubic(A, !no_fallback, threads);
            auto check = verify_certificate(A, cert);
            if (!check.ok) fail(Err::Anomaly, "self-verification failed: " + check.reason);
            emit(write_certificate(cert), find_output);
            return kOk;
        }
        if (*oracle_cmd) {
            PointSet A = load_points(oracle_input);
            auto whole = vanishing_subspace(A, oracle_degree);
            if (whole.dim() >= 1)
                fail(Err::ContainedInCurve, "set lies on the degree-" + std::to_string(oracle_degree) +
                                                " curve " + whole.basis[0].str());
            auto hits = brute_force_ordinary(A, oracle_degree, oracle_all, budget);
            for (const auto& h : hits) {
                std::cout << "found";
                for (int i : h.support) std::cout << " " << i;
                std::cout << " :";
                for (const auto& c : h.curve.coeffs) std::cout << " " << c;
                std::cout << "\n";
            }
            std::cout << "total " << hits.size() << "\n";
            if (hits.empty()) {
                if (oracle_degree == 3) {
                    write_file("ordinary-counterexample-report.txt",
                               "no nine-point support admits an ordinary cubic\ncommand: " +
                                   cmdline.str() + "\npoints:\n" + write_points(A));
                    std::cerr << "counterexample candidate; report written to "
                                 "ordinary-counterexample-report.txt\n";
                }
                return kNotFound;
            }
            return kOk;
        }
        if (*verify_cmd) {
            PointSet A = load_points(verify_input);
            Certificate cert = read_certificate(read_file(verify_cert));
            auto res = verify_certificate(A, cert);
            if (res.ok) {
                std::cout << "verified\n";
                return kOk;
            }
            std::cout << "invalid: " << res.reason << "\n";
            return kNotFound;
        }
        if (*gen_cmd) {
            spec.kind = gen_kind_from_name(gen_kind);
            spec.n = gen_n;
            spec.seed = gen_seed;
            spec.bound = gen_bound;
            spec.on_count = spec.kind == GenKind::HeavyLine    ? on_line
                            : spec.kind == GenKind::HeavyConic ? on_conic
                                                               : 0;
            emit(write_points(generate(spec)), gen_output);
            return kOk;
        }
        if (*dims_cmd) {
            PointSet A = load_points(dims_input);
            std::cout << "n " << A.size() << "\n";
            std::cout << "degree " << dims_degree << "\n";
            std::cout << "param-dim " << param_dim(A, dims_degree) << "\n";
            if (A.size() <= 2 * dims_degree + 2) {
                auto d = expected_dim_defect(A, dims_degree);
                std::cout << "defect " << d.defect << " "
                          << (d.cause ? (*d.cause == DefectCause::CollinearDPlus2 ? "CollinearDPlus2"
                                                                                  : "ConicFull2dPlus2")
                                      : "-")
                          << "\n";
            }
            return kOk;
        }
        if (*plot_cmd) {
            PointSet A = load_points(plot_input);
            std::optional<Certificate> cert;
            if (!plot_cert.empty()) cert = read_certificate(read_file(plot_cert));
            write_file(plot_svg, emit_plot(A, cert, parse_window(plot_window)));
            return kOk;
        }
    } catch (const Error& e) {
        int rc = exit_code_for(e);
        std::cerr << err_name(e.code) << ": " << e.what() << "\n";
        if (rc == kAnomaly) write_anomaly_report(cmdline.str(), e);
        if (e.code == Err::NotFound && *find_cmd) {
            // An exhausted fallback search is a research finding, not a quiet
            // failure.
            try {
                write_file("ordinary-counterexample-report.txt",
                           std::string("exhaustive search found nothing\ncommand: ") +
                               cmdline.str() + "\ndetail: " + e.what() + "\n");
                std::cerr << "report written to ordinary-counterexample-report.txt\n";
            } catch (const Error&) {
            }
        }
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAnomaly;
    }
    return kIoError;
}

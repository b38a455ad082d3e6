// Command-line front end for the sc6 verification toolkit.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage/configuration error, 3 I/O or resource error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "sc6/acceptance.hpp"
#include "sc6/arith.hpp"
#include "sc6/binaryqf.hpp"
#include "sc6/lseries.hpp"
#include "sc6/modforms.hpp"
#include "sc6/qseries.hpp"
#include "sc6/sweep.hpp"
#include "sc6/ternary.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

unsigned default_threads() {
    if (const char* env = std::getenv("SC6_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return (unsigned)v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int print_check(const sc6::CheckReport& report) {
    std::cout << report.summary() << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    return report.passed() ? kExitOk : kExitMathFailure;
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_sweep(std::uint64_t n_max, unsigned threads, std::uint64_t chunk,
              const std::string& checkpoint, const std::string& report_path,
              const std::string& kernel) {
    sc6::SweepConfig cfg;
    cfg.n_max = n_max;
    cfg.chunk_size = chunk;
    cfg.worker_count = threads;
    cfg.counting_kernel = kernel == "counting";
    if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
    sc6::SweepReport report = sc6::sweep_positivity(cfg);
    std::string json = report.to_json();
    if (report_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream f(report_path, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open report file " + report_path);
        f << json;
        if (!f) throw std::runtime_error("short write to " + report_path);
        std::cout << "sweep to n_max=" << report.n_max << ": " << report.exceptions.size()
                  << " exceptions, report written to " << report_path << "\n";
    }
    return kExitOk;
}

int cmd_sc6(std::int64_t n, const std::string& method) {
    if (n < 0) throw CLI::ValidationError("sc6", "N must be nonnegative");
    if (method == "series") {
        sc6::IntSeries s = sc6::sc6_series(n + 1);
        std::cout << s[n].get_str() << "\n";
        return kExitOk;
    }
    auto table = sc6::loeschian_table((24 * n + 35) / 32 + 1);
    std::int64_t rq = sc6::rq_fast(24 * n + 35, table);
    if (rq % 12 != 0) {
        std::cout << "r_Q(" << 24 * n + 35 << ") = " << rq << " is not divisible by 12\n";
        return kExitMathFailure;
    }
    std::cout << rq / 12 << "\n";
    return kExitOk;
}

int cmd_rq(std::int64_t n, const std::string& form) {
    if (n < 0) throw CLI::ValidationError("rq", "N must be nonnegative");
    sc6::TernaryForm f = form == "mate" ? sc6::mate_form() : sc6::main_form();
    std::cout << sc6::rep_count(f, n) << "\n";
    return kExitOk;
}

int cmd_classnum(std::int64_t D) {
    sc6::BinaryFormClassData data = sc6::class_data(D);
    std::cout << "D = " << D << ", h = " << data.h << ", w = " << data.w << "\n";
    for (const auto& f : data.forms)
        std::cout << "  (" << f.a << ", " << f.b << ", " << f.c << ")\n";
    return kExitOk;
}

int cmd_decompose(std::int64_t limit) {
    if (limit < 0) throw CLI::ValidationError("decompose", "limit must be nonnegative");
    auto rq = sc6::rep_counts_upto(sc6::main_form(), limit);
    auto rqp = sc6::rep_counts_upto(sc6::mate_form(), limit);
    std::cout << "n,rQ,rQmate,e4,c4\n";
    for (std::int64_t n = 0; n <= limit; ++n) {
        std::int64_t a = rq[(std::size_t)n], b = rqp[(std::size_t)n];
        std::cout << n << "," << a << "," << b << "," << a + 3 * b << "," << 3 * (a - b)
                  << "\n";
    }
    return kExitOk;
}

int cmd_lvalue(std::int64_t N, double tolerance) {
    int sign = 0;
    sc6::LValue twisted = sc6::twisted_modular_L1(N, tolerance, sign);
    sc6::LValue dirichlet = sc6::dirichlet_L1(-N);
    sc6::GenusDecomposition d = sc6::decompose(N);
    double ac = (double)d.c4[(std::size_t)N] / 4.0;
    std::cout.precision(12);
    std::cout << "L(F x chi_-" << N << ", 1)   = " << twisted.value << "  (± "
              << twisted.abs_error_bound << ", " << twisted.terms_used
              << " terms, sign " << (sign > 0 ? "+1" : "-1") << ")\n";
    std::cout << "L(chi_-" << N << ", 1)       = " << dirichlet.value << "\n";
    std::cout << "a_C(" << N << ")            = " << ac << "\n";
    if (ac != 0.0 && twisted.value > 0.0) {
        double d_emp = std::abs(ac) / (std::pow((double)N, 0.25) * std::sqrt(twisted.value));
        std::cout << "d_emp              = " << d_emp << "\n";
    }
    return kExitOk;
}

int cmd_threshold(double a, double b, double d, double cup, double eup) {
    double nstar = sc6::positivity_threshold(a, b, d, cup, eup);
    double k = a * std::sqrt(b) / (d * 3.14159265358979323846);
    std::cout.precision(12);
    std::cout << "lower-bound constant a*sqrt(b)/(d*pi) = " << k << "\n";
    std::cout << "crossing N* = " << nstar << "\n";
    std::cout << "published cutoff for comparison: 916347.7794 (sweep default n_max 916348)\n";
    return kExitOk;
}

int cmd_verify_all(const std::string& level) {
    auto results = sc6::run_acceptance(
        level == "full" ? sc6::AcceptanceLevel::full : sc6::AcceptanceLevel::quick, std::cout);
    for (const auto& r : results)
        if (!r.passed) return kExitMathFailure;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for self-conjugate 6-core positivity via the "
                 "ternary form 3x^2 + 32y^2 + 32yz + 32z^2"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run the positivity sweep over n in [0, max-n]");
    std::uint64_t n_max = 916348, chunk = 65536;
    unsigned threads = default_threads();
    std::string checkpoint, report_path, kernel = "fast";
    sweep->add_option("--max-n", n_max, "largest n to verify");
    sweep->add_option("--threads", threads, "worker thread count");
    sweep->add_option("--chunk", chunk, "chunk size in n values")->check(CLI::PositiveNumber);
    sweep->add_option("--checkpoint", checkpoint, "checkpoint file for interrupt/resume");
    sweep->add_option("--report", report_path, "write the JSON report here instead of stdout");
    sweep->add_option("--kernel", kernel, "per-n kernel")
        ->check(CLI::IsMember({"fast", "counting"}));

    // sc6
    auto* sc6cmd = app.add_subcommand("sc6", "print sc6(N)");
    std::int64_t sc6_n = 0;
    std::string sc6_method = "series";
    sc6cmd->add_option("N", sc6_n, "index")->required();
    sc6cmd->add_option("--method", sc6_method, "pipeline to use")
        ->check(CLI::IsMember({"series", "lattice"}));

    // rq
    auto* rq = app.add_subcommand("rq", "print the representation count of N");
    std::int64_t rq_n = 0;
    std::string rq_form = "main";
    rq->add_option("N", rq_n, "value to represent")->required();
    rq->add_option("--form", rq_form, "which genus member")
        ->check(CLI::IsMember({"main", "mate"}));

    // classnum
    auto* classnum = app.add_subcommand("classnum", "reduced forms and h(D) for D < 0");
    std::int64_t D = 0;
    classnum->add_option("D", D, "negative discriminant, 0 or 1 mod 4")->required();

    // decompose
    auto* decompose = app.add_subcommand("decompose", "CSV table of r_Q, r_Q', 4a_E, 4a_C");
    std::int64_t limit = 0;
    decompose->add_option("--limit", limit, "largest n in the table")->required();

    // shimura
    auto* shimura = app.add_subcommand("shimura", "check the Shimura lift proportionality");
    std::int64_t shimura_limit = 0;
    shimura->add_option("--limit", shimura_limit, "largest lift index n")->required();

    // lvalue
    auto* lvalue = app.add_subcommand("lvalue", "central twisted L-value and Dirichlet L-value");
    std::int64_t lvalue_n = 0;
    double tolerance = 1e-8;
    lvalue->add_option("--N", lvalue_n, "twist index, squarefree 24n+35")->required();
    lvalue->add_option("--tolerance", tolerance, "truncation error target");

    // threshold
    auto* threshold = app.add_subcommand("threshold", "solve the positivity crossing point");
    double ta = 3.0, tb = 1.0, td = 1.63384, tcup = 2.5889, teup = 0.14157;
    threshold->add_option("--a", ta, "Eisenstein constant a");
    threshold->add_option("--b", tb, "discriminant scale b");
    threshold->add_option("--d", td, "Waldspurger constant d");
    threshold->add_option("--cup", tcup, "upper bound constant");
    threshold->add_option("--eup", teup, "upper bound exponent (< 1/4)");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run the whole acceptance suite");
    std::string level = "full";
    verify->add_option("--level", level, "bound caps")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sweep) return cmd_sweep(n_max, threads, chunk, checkpoint, report_path, kernel);
        if (*sc6cmd) return cmd_sc6(sc6_n, sc6_method);
        if (*rq) return cmd_rq(rq_n, rq_form);
        if (*classnum) return cmd_classnum(D);
        if (*decompose) return cmd_decompose(limit);
        if (*shimura) return print_check(sc6::shimura_lift_check(shimura_limit));
        if (*lvalue) return cmd_lvalue(lvalue_n, tolerance);
        if (*threshold) return cmd_threshold(ta, tb, td, tcup, teup);
        if (*verify) return cmd_verify_all(level);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sc6::LSeriesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}

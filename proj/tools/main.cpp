// qtl: verification suites, constant computation, and mean-square sweeps.
//
//   qtl <command> --config <path> --out <dir> [--threads N]
//
// Commands: verify-gauss, verify-poisson, verify-weights, verify-dirichlet,
// compute-z2, run-meansquare. Exit codes: 0 success, 1 check failure,
// 2 usage/config error, 3 runtime error. QTL_THREADS is the fallback for
// --threads. A manifest.json is written to the output directory even when
// the run fails.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtl/checks.hpp"
#include "qtl/config.hpp"
#include "qtl/dirichlet.hpp"
#include "qtl/meansquare.hpp"
#include "qtl/numeric_io.hpp"
#include "qtl/poisson.hpp"
#include "qtl/runio.hpp"

namespace {

namespace fs = std::filesystem;
using qtl::checks::CheckResult;

struct CliArgs {
    std::string command;
    std::string config_path;
    std::string output_dir = "out";
    int threads = 0;  // 0 = unset
};

int resolve_threads(const CliArgs& args, const qtl::config::ExperimentConfig& cfg) {
    if (args.threads > 0) return args.threads;
    if (const char* env = std::getenv("QTL_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return cfg.threads;
}

void print_results(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
}

void collect_failures(const std::vector<CheckResult>& results, qtl::runio::RunManifest& manifest) {
    for (const auto& r : results)
        if (!r.passed) manifest.failures.push_back(r.name + ": " + r.detail);
}

int run_command(const CliArgs& args, qtl::runio::RunManifest& manifest) {
    qtl::config::ExperimentConfig cfg;
    if (!args.config_path.empty()) cfg = qtl::config::parse_config(args.config_path);
    const int threads = resolve_threads(args, cfg);
    fs::create_directories(args.output_dir);

    std::vector<CheckResult> results;
    if (args.command == "verify-gauss") {
        results = qtl::checks::gauss_suite(cfg.gauss_k_max, cfg.gauss_m_max);
    } else if (args.command == "verify-poisson") {
        std::vector<qtl::poisson::PoissonCheck> rows;
        results = qtl::checks::poisson_suite(cfg.poisson_n_max, cfg.poisson_X, cfg.make_W(),
                                             cfg.quadrature, &rows);
        const fs::path csv = fs::path(args.output_dir) / "poisson.csv";
        std::ofstream f(csv);
        qtl::poisson::write_csv(f, rows);
        manifest.emitted_files.push_back(csv.string());
    } else if (args.command == "verify-weights") {
        results = qtl::checks::weights_suite(cfg.quadrature);
    } else if (args.command == "verify-dirichlet") {
        std::vector<qtl::dirichlet::ZFactorReport> factors;
        results = qtl::checks::dirichlet_suite(cfg.series_u, cfg.series_n_limit,
                                               cfg.series_prime_limit, &factors);
        const fs::path csv = fs::path(args.output_dir) / "euler_factors.csv";
        std::ofstream f(csv);
        qtl::dirichlet::write_csv(f, factors);
        manifest.emitted_files.push_back(csv.string());
    } else if (args.command == "compute-z2") {
        const fs::path csv = fs::path(args.output_dir) / "z2.csv";
        std::ofstream f(csv);
        f << "u,prime_limit,value,tail_bound\n";
        for (std::int64_t P : cfg.z2_prime_limits) {
            const auto v = qtl::dirichlet::z2_at(cfg.z2_u, P);
            f << qtl::io::shortest(cfg.z2_u) << ',' << P << ',' << qtl::io::shortest(v.value)
              << ',' << qtl::io::shortest(v.tail_bound) << '\n';
            std::cout << "Z2(" << cfg.z2_u << ", P=" << P << ") = " << qtl::io::shortest(v.value)
                      << "  +- " << qtl::io::shortest(v.tail_bound) << '\n';
        }
        manifest.emitted_files.push_back(csv.string());
    } else if (args.command == "run-meansquare") {
        qtl::meansquare::ExperimentPlan plan;
        plan.X_values = cfg.X_values;
        plan.y_is_power = cfg.Y_rule.is_power;
        plan.y_value = cfg.Y_rule.value;
        plan.w = cfg.make_W();
        plan.phi = cfg.make_Phi();
        plan.quadrature = cfg.quadrature;
        plan.threads = threads;
        plan.inner_scale = cfg.inner_scale;
        plan.h1_form = cfg.main_term_h1;
        plan.prime_limit = cfg.prime_limit;

        const fs::path csv = fs::path(args.output_dir) / "meansquare.csv";
        std::ofstream f(csv);
        std::vector<std::string> row_errors;
        const auto rows = qtl::meansquare::run_experiment(plan, &f, &row_errors);
        f.close();
        manifest.emitted_files.push_back(csv.string());
        for (const auto& e : row_errors) manifest.failures.push_back("row failure: " + e);
        for (const auto& r : rows)
            std::cout << "X=" << qtl::io::shortest(r.X) << " Y=" << qtl::io::shortest(r.Y)
                      << " ratio=" << qtl::io::shortest(r.ratio) << " (" << r.d_count
                      << " d-values, " << qtl::io::shortest(r.runtime_seconds) << " s)\n";
        if (!rows.empty()) {
            const std::string script = qtl::runio::emit_plot_script(rows, args.output_dir);
            manifest.emitted_files.push_back(script);
        }
        return manifest.failures.empty() ? 0 : 1;
    } else {
        manifest.failures.push_back("unknown command: " + args.command);
        return 2;
    }

    print_results(results);
    collect_failures(results, manifest);
    return qtl::checks::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification lab for quadratic twists of the Moebius function"};
    app.require_subcommand(1);

    CliArgs args;
    const std::vector<std::string> names = {"verify-gauss",     "verify-poisson",
                                            "verify-weights",   "verify-dirichlet",
                                            "compute-z2",       "run-meansquare"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", args.config_path, "key = value config file");
        sub->add_option("--out", args.output_dir, "output directory")->capture_default_str();
        sub->add_option("--threads", args.threads, "worker threads (QTL_THREADS as fallback)");
        sub->callback([&args, name]() { args.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    qtl::runio::RunManifest manifest;
    manifest.command = args.command;
    manifest.config_path = args.config_path;
    manifest.output_dir = args.output_dir;

    int code = 0;
    try {
        code = run_command(args, manifest);
    } catch (const qtl::config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        manifest.failures.push_back(std::string("config error: ") + e.what());
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        manifest.failures.push_back(std::string("runtime error: ") + e.what());
        code = 3;
    }
    manifest.exit_code = code;
    try {
        qtl::runio::write_manifest(manifest);
    } catch (const std::exception& e) {
        std::cerr << "manifest: " << e.what() << '\n';
        if (code == 0) code = 3;
    }
    return code;
}

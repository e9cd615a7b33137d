// Copyright 2026 The qdelete Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run / sweep-phi / table / verify / bench.
// Exit codes: 0 success, 1 usage error, 2 invariant or verification failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qdelete/report.hpp"
#include "qdelete/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct GlobalFlags {
    std::string format = "human";
    std::uint64_t seed = 12345;
    int cap = qdelete::kDefaultQubitCap;
};

int cmd_run(const GlobalFlags& globals, const qdelete::DeletionConfig& config, bool dump_amps) {
    const qdelete::RunReport report =
        qdelete::make_run_report(config, globals.seed, dump_amps);
    switch (qdelete::parse_format(globals.format)) {
        case qdelete::OutputFormat::kJson: std::cout << qdelete::run_report_json(report); break;
        case qdelete::OutputFormat::kCsv: std::cout << qdelete::run_report_csv(report); break;
        case qdelete::OutputFormat::kHuman: std::cout << qdelete::run_report_human(report); break;
    }
    if (report.fidelity_vs_oracle < 1.0 - 1e-6) {
        std::cerr << "invariant violation: oracle fidelity "
                  << qdelete::format_real(report.fidelity_vs_oracle) << " below 1 - 1e-6\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_sweep(const GlobalFlags& globals, int n_min, int n_max) {
    const auto rows = qdelete::sweep_phi(n_min, n_max, globals.cap);
    switch (qdelete::parse_format(globals.format)) {
        case qdelete::OutputFormat::kJson: std::cout << qdelete::sweep_json(rows); break;
        case qdelete::OutputFormat::kCsv: std::cout << qdelete::sweep_csv(rows); break;
        case qdelete::OutputFormat::kHuman: std::cout << qdelete::sweep_human(rows); break;
    }
    return kExitOk;
}

int cmd_table(const GlobalFlags& globals, std::uint64_t k_max) {
    const auto rows = qdelete::trig_period_table(k_max);
    switch (qdelete::parse_format(globals.format)) {
        case qdelete::OutputFormat::kJson: std::cout << qdelete::trig_table_json(rows); break;
        case qdelete::OutputFormat::kCsv: std::cout << qdelete::trig_table_csv(rows); break;
        case qdelete::OutputFormat::kHuman: std::cout << qdelete::trig_table_human(rows); break;
    }
    return kExitOk;
}

int cmd_verify(const GlobalFlags& globals, const qdelete::VerifyOptions& options) {
    const auto results = qdelete::run_verification(options);
    const qdelete::OutputFormat format = qdelete::parse_format(globals.format);

    if (format == qdelete::OutputFormat::kCsv) {
        std::cout << "invariant,max_deviation,tolerance,passed,worst_case\n";
        for (const auto& r : results) {
            std::cout << r.name << ',' << qdelete::format_real(r.max_deviation) << ','
                      << qdelete::format_real(r.tolerance) << ',' << (r.passed ? "true" : "false")
                      << ',' << r.worst_case << '\n';
        }
    } else if (format == qdelete::OutputFormat::kJson) {
        std::cout << "[\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            std::cout << "  {\"invariant\": \"" << r.name << "\", \"max_deviation\": "
                      << qdelete::format_real(r.max_deviation)
                      << ", \"tolerance\": " << qdelete::format_real(r.tolerance)
                      << ", \"passed\": " << (r.passed ? "true" : "false") << ", \"worst_case\": \""
                      << r.worst_case << "\"}" << (i + 1 < results.size() ? "," : "") << '\n';
        }
        std::cout << "]\n";
    } else {
        std::printf("verification (n_max=%d, trials=%d, seed=%llu)\n", options.n_max,
                    options.trials, static_cast<unsigned long long>(options.seed));
        for (const auto& r : results) {
            std::printf("  %-26s %s  max deviation %-12s tolerance %s\n", r.name.c_str(),
                        r.passed ? "PASS" : "FAIL",
                        qdelete::format_real(r.max_deviation).c_str(),
                        qdelete::format_real(r.tolerance).c_str());
        }
    }

    if (!qdelete::all_passed(results)) {
        for (const auto& r : results) {
            if (!r.passed) {
                std::cerr << "invariant failed: " << r.name << " (deviation "
                          << qdelete::format_real(r.max_deviation) << " > tolerance "
                          << qdelete::format_real(r.tolerance) << ") at " << r.worst_case << '\n';
            }
        }
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_bench(const GlobalFlags& globals, const std::vector<int>& qubit_counts, int reps) {
    const auto rows = qdelete::bench_deletion_step(qubit_counts, reps, globals.cap);
    switch (qdelete::parse_format(globals.format)) {
        case qdelete::OutputFormat::kJson: std::cout << qdelete::bench_json(rows); break;
        case qdelete::OutputFormat::kCsv: std::cout << qdelete::bench_csv(rows); break;
        case qdelete::OutputFormat::kHuman: std::cout << qdelete::bench_human(rows); break;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-query quantum deletion: statevector simulator and analytic oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags globals;
    app.add_option("--format", globals.format, "output format: human, csv, or json")
        ->capture_default_str();
    app.add_option("--seed", globals.seed, "seed for randomized verification; echoed in reports")
        ->capture_default_str();
    app.add_option("--cap", globals.cap, "qubit cap (memory ceiling is 16*2^cap bytes)")
        ->envname("QDELETE_CAP")
        ->capture_default_str();

    // run
    qdelete::DeletionConfig config;
    std::string mode = "exact";
    bool normalize = false;
    bool dump_amps = false;
    CLI::App* run_cmd = app.add_subcommand("run", "run k deletion steps on the even superposition");
    run_cmd->add_option("--n", config.n, "qubit count")->required();
    run_cmd->add_option("--tau", config.tau, "marked basis index")->required();
    run_cmd->add_option("--k", config.k, "iteration count")->capture_default_str();
    run_cmd->add_option("--mode", mode, "phase mode: exact or fixed-pi3")->capture_default_str();
    run_cmd->add_flag("--normalize", normalize, "remove the predicted global phase (deleted case)");
    run_cmd->add_flag("--dump-amps", dump_amps, "include the amplitude table even above n = 12");

    // sweep-phi
    int n_min = 1;
    int n_max_sweep = 20;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep-phi", "matched phase angle versus database size");
    sweep_cmd->add_option("--n-min", n_min, "smallest qubit count")->capture_default_str();
    sweep_cmd->add_option("--n-max", n_max_sweep, "largest qubit count")->capture_default_str();

    // table
    std::uint64_t k_max = 12;
    CLI::App* table_cmd =
        app.add_subcommand("table", "trigonometric period table at theta = k*pi/3");
    table_cmd->add_option("--k-max", k_max, "largest iteration count")->capture_default_str();

    // verify
    qdelete::VerifyOptions verify_options;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full cross-module invariant suite");
    verify_cmd->add_option("--n-max", verify_options.n_max, "largest qubit count")
        ->capture_default_str();
    verify_cmd->add_option("--trials", verify_options.trials, "random trials per size")
        ->capture_default_str();
    verify_cmd->add_flag("--self-test-fault", verify_options.inject_fault)->group("");

    // bench
    std::vector<int> bench_ns{18, 19, 20, 21, 22, 23, 24};
    int reps = 5;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time one deletion step per size");
    bench_cmd->add_option("--n", bench_ns, "qubit counts to time")->capture_default_str();
    bench_cmd->add_option("--reps", reps, "repetitions per size (median reported)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            config.mode = qdelete::parse_mode(mode);
            config.normalize_global_phase = normalize;
            config.cap = globals.cap;
            return cmd_run(globals, config, dump_amps);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(globals, n_min, n_max_sweep);
        }
        if (table_cmd->parsed()) {
            return cmd_table(globals, k_max);
        }
        if (verify_cmd->parsed()) {
            verify_options.seed = globals.seed;
            verify_options.cap = globals.cap;
            return cmd_verify(globals, verify_options);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(globals, bench_ns, reps);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }
    return kExitUsage;
}

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

#include "qdelete/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qdelete {

namespace {

using nlohmann::json;

// Machine formats round-trip exactly; the 12-digit form is for human output.
std::string format_exact(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

json config_json(const DeletionConfig& config) {
    return json{{"n", config.n},
                {"tau", config.tau},
                {"k", config.k},
                {"mode", mode_name(config.mode)},
                {"normalize_global_phase", config.normalize_global_phase},
                {"cap", config.cap}};
}

json amplitudes_json(const std::vector<Amplitude>& amps) {
    json list = json::array();
    for (const Amplitude& a : amps) {
        list.push_back(json{{"re", a.real()}, {"im", a.imag()}});
    }
    return list;
}

}  // namespace

std::string format_real(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    if (name == "human" || name == "table") return OutputFormat::kHuman;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv, json, or human)");
}

std::string mode_name(PhaseMode mode) {
    return mode == PhaseMode::kExact ? "exact" : "fixed-pi3";
}

PhaseMode parse_mode(const std::string& name) {
    if (name == "exact") return PhaseMode::kExact;
    if (name == "fixed-pi3" || name == "fixed") return PhaseMode::kFixedPiOverThree;
    throw std::invalid_argument("unknown mode '" + name + "' (expected exact or fixed-pi3)");
}

RunReport make_run_report(const DeletionConfig& config, std::uint64_t seed, bool dump_amps) {
    config.validate();

    const auto start = std::chrono::steady_clock::now();
    IterationOutcome outcome = run(config);
    const auto stop = std::chrono::steady_clock::now();

    const Prediction prediction = predict_final(config.database_size(), config.k, config.mode);
    const StateVector lifted = lift_to_full(prediction.state, config.tau, config.n);

    RunReport report;
    report.config = config;
    report.case_tag = outcome.case_tag;
    report.residual = outcome.residual_marked_magnitude;
    report.fidelity_vs_oracle = fidelity(outcome.final_state, lifted);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    report.seed = seed;
    report.include_amplitudes = dump_amps || config.n <= 12;
    if (report.include_amplitudes) {
        report.amplitudes = outcome.final_state.amps;
    }
    return report;
}

std::string run_report_json(const RunReport& report) {
    json doc{{"config", config_json(report.config)},
             {"case", case_name(report.case_tag)},
             {"residual", report.residual},
             {"fidelity", report.fidelity_vs_oracle},
             {"elapsed_ms", report.elapsed_ms},
             {"seed", report.seed},
             {"version", report.version}};
    if (report.include_amplitudes) {
        doc["amplitudes"] = amplitudes_json(report.amplitudes);
    }
    return doc.dump(2) + "\n";
}

std::string run_report_csv(const RunReport& report) {
    std::ostringstream out;
    out << "n,tau,k,mode,normalize_global_phase,cap,case,residual,fidelity,elapsed_ms,seed,version\n";
    out << report.config.n << ',' << report.config.tau << ',' << report.config.k << ','
        << mode_name(report.config.mode) << ','
        << (report.config.normalize_global_phase ? "true" : "false") << ','
        << report.config.cap << ',' << case_name(report.case_tag) << ','
        << format_exact(report.residual) << ',' << format_exact(report.fidelity_vs_oracle)
        << ',' << format_real(report.elapsed_ms) << ',' << report.seed << ','
        << report.version << '\n';
    if (report.include_amplitudes) {
        out << "\nindex,re,im,magnitude\n";
        for (std::size_t i = 0; i < report.amplitudes.size(); ++i) {
            const Amplitude& a = report.amplitudes[i];
            out << i << ',' << format_exact(a.real()) << ',' << format_exact(a.imag()) << ','
                << format_exact(std::abs(a)) << '\n';
        }
    }
    return out.str();
}

std::string run_report_human(const RunReport& report) {
    std::ostringstream out;
    out << "deletion run\n"
        << "  n                : " << report.config.n << " (N = " << report.config.database_size()
        << ")\n"
        << "  tau              : " << report.config.tau << '\n'
        << "  k                : " << report.config.k << '\n'
        << "  mode             : " << mode_name(report.config.mode) << '\n'
        << "  normalize phase  : " << (report.config.normalize_global_phase ? "yes" : "no")
        << '\n'
        << "  case             : " << case_name(report.case_tag) << '\n'
        << "  marked residual  : " << format_real(report.residual) << '\n'
        << "  oracle fidelity  : " << format_real(report.fidelity_vs_oracle) << '\n'
        << "  elapsed (ms)     : " << format_real(report.elapsed_ms) << '\n'
        << "  seed             : " << report.seed << '\n'
        << "  version          : " << report.version << '\n';
    if (report.include_amplitudes) {
        out << "  amplitudes (index re im magnitude):\n";
        for (std::size_t i = 0; i < report.amplitudes.size(); ++i) {
            const Amplitude& a = report.amplitudes[i];
            out << "    " << i << "  " << format_real(a.real()) << "  " << format_real(a.imag())
                << "  " << format_real(std::abs(a)) << '\n';
        }
    }
    return out.str();
}

std::vector<PhiSweepRow> sweep_phi(int n_min, int n_max, int cap) {
    if (n_min < 1 || n_min > n_max || n_max > cap) {
        throw std::length_error("qubit range [" + std::to_string(n_min) + ", " +
                                std::to_string(n_max) + "] invalid; need 1 <= n_min <= n_max <= " +
                                std::to_string(cap) + " (cap " + std::to_string(cap) + ")");
    }
    std::vector<PhiSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        const double phi = matched_phase(size).phi;
        rows.push_back(PhiSweepRow{n, size, phi, phi - kPhaseLimit});
    }
    return rows;
}

std::string sweep_csv(const std::vector<PhiSweepRow>& rows) {
    std::ostringstream out;
    out << "n,N,phi,phi_minus_pi_over_3\n";
    for (const PhiSweepRow& row : rows) {
        out << row.n << ',' << row.database_size << ',' << format_exact(row.phi) << ','
            << format_exact(row.phi_minus_limit) << '\n';
    }
    return out.str();
}

std::string sweep_json(const std::vector<PhiSweepRow>& rows) {
    json list = json::array();
    for (const PhiSweepRow& row : rows) {
        list.push_back(json{{"n", row.n},
                            {"N", row.database_size},
                            {"phi", row.phi},
                            {"phi_minus_pi_over_3", row.phi_minus_limit}});
    }
    return list.dump(2) + "\n";
}

std::string sweep_human(const std::vector<PhiSweepRow>& rows) {
    std::ostringstream out;
    out << "  n            N              phi   phi - pi/3\n";
    for (const PhiSweepRow& row : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%3d %12llu %16.12f %12.6g\n", row.n,
                      static_cast<unsigned long long>(row.database_size), row.phi,
                      row.phi_minus_limit);
        out << line;
    }
    return out.str();
}

std::string trig_table_csv(const std::vector<TrigPeriodRow>& rows) {
    std::ostringstream out;
    out << "k,sin_theta,cos_theta,alternating_sin,alternating_cos\n";
    for (const TrigPeriodRow& row : rows) {
        out << row.k << ',' << format_exact(row.sin_theta) << ',' << format_exact(row.cos_theta)
            << ',' << format_exact(row.alternating_sin) << ','
            << format_exact(row.alternating_cos) << '\n';
    }
    return out.str();
}

std::string trig_table_json(const std::vector<TrigPeriodRow>& rows) {
    json list = json::array();
    for (const TrigPeriodRow& row : rows) {
        list.push_back(json{{"k", row.k},
                            {"sin_theta", row.sin_theta},
                            {"cos_theta", row.cos_theta},
                            {"alternating_sin", row.alternating_sin},
                            {"alternating_cos", row.alternating_cos}});
    }
    return list.dump(2) + "\n";
}

std::string trig_table_human(const std::vector<TrigPeriodRow>& rows) {
    std::ostringstream out;
    out << "  k   sin(k*pi/3)   cos(k*pi/3)   (-1)^k sin   (-1)^k cos\n";
    for (const TrigPeriodRow& row : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%3llu %13.10f %13.10f %12.10g %12.10g\n",
                      static_cast<unsigned long long>(row.k), row.sin_theta, row.cos_theta,
                      row.alternating_sin, row.alternating_cos);
        out << line;
    }
    return out.str();
}

std::vector<BenchRow> bench_deletion_step(const std::vector<int>& qubit_counts,
                                          int repetitions, int cap) {
    if (repetitions < 1) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    std::vector<BenchRow> rows;
    rows.reserve(qubit_counts.size());
    for (int n : qubit_counts) {
        StateVector state = uniform_state(n, cap);
        const std::uint64_t size = state.size();
        const double phi = matched_phase(size).phi;
        const Amplitude even(1.0 / std::sqrt(static_cast<double>(size)), 0.0);
        const std::uint64_t tau = size / 2;

        std::vector<double> samples;
        samples.reserve(static_cast<std::size_t>(repetitions));
        for (int rep = 0; rep < repetitions; ++rep) {
            std::fill(state.amps.begin(), state.amps.end(), even);
            const auto start = std::chrono::steady_clock::now();
            apply_deletion_step(state, tau, phi);
            const auto stop = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(samples.begin(), samples.end());
        const double median = samples[samples.size() / 2];

        BenchRow row;
        row.n = n;
        row.database_size = size;
        row.step_ms = median;
        row.amps_per_second = static_cast<double>(size) / (median / 1000.0);
        row.classical_avg_queries = (static_cast<double>(size) + 1.0) / 2.0;
        row.quantum_queries = 1;
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,N,step_ms,amps_per_second,classical_avg_queries,quantum_queries\n";
    for (const BenchRow& row : rows) {
        out << row.n << ',' << row.database_size << ',' << format_real(row.step_ms) << ','
            << format_real(row.amps_per_second) << ',' << format_real(row.classical_avg_queries)
            << ',' << row.quantum_queries << '\n';
    }
    return out.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
    json list = json::array();
    for (const BenchRow& row : rows) {
        list.push_back(json{{"n", row.n},
                            {"N", row.database_size},
                            {"step_ms", row.step_ms},
                            {"amps_per_second", row.amps_per_second},
                            {"classical_avg_queries", row.classical_avg_queries},
                            {"quantum_queries", row.quantum_queries}});
    }
    return list.dump(2) + "\n";
}

std::string bench_human(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "  n            N     step (ms)      amps/sec   classical avg   quantum\n";
    for (const BenchRow& row : rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "%3d %12llu %12.3f %13.4g %15.1f %9llu\n", row.n,
                      static_cast<unsigned long long>(row.database_size), row.step_ms,
                      row.amps_per_second, row.classical_avg_queries,
                      static_cast<unsigned long long>(row.quantum_queries));
        out << line;
    }
    return out.str();
}

}  // namespace qdelete

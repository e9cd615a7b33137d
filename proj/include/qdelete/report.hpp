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

#ifndef QDELETE_REPORT_HPP
#define QDELETE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qdelete/analytic.hpp"
#include "qdelete/deletion.hpp"

namespace qdelete {

inline constexpr char kVersion[] = "1.0.0";

enum class OutputFormat { kHuman, kCsv, kJson };

OutputFormat parse_format(const std::string& name);

std::string mode_name(PhaseMode mode);
PhaseMode parse_mode(const std::string& name);

/// Everything one `run` invocation reports. Amplitudes are carried only when
/// the register is desk-sized (n <= 12) or a dump was forced.
struct RunReport {
    DeletionConfig config;
    CaseTag case_tag = CaseTag::kIdentity;
    double residual = 0.0;
    double fidelity_vs_oracle = 0.0;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    bool include_amplitudes = false;
    std::vector<Amplitude> amplitudes;
};

/// Runs the configured deletion, cross-checks against the two-level oracle.
RunReport make_run_report(const DeletionConfig& config, std::uint64_t seed, bool dump_amps);

std::string run_report_json(const RunReport& report);
std::string run_report_csv(const RunReport& report);
std::string run_report_human(const RunReport& report);

struct PhiSweepRow {
    int n;
    std::uint64_t database_size;
    double phi;
    double phi_minus_limit;  // phi - pi/3, positive and shrinking with N
};

std::vector<PhiSweepRow> sweep_phi(int n_min, int n_max, int cap = kDefaultQubitCap);
std::string sweep_csv(const std::vector<PhiSweepRow>& rows);
std::string sweep_json(const std::vector<PhiSweepRow>& rows);
std::string sweep_human(const std::vector<PhiSweepRow>& rows);

std::string trig_table_csv(const std::vector<TrigPeriodRow>& rows);
std::string trig_table_json(const std::vector<TrigPeriodRow>& rows);
std::string trig_table_human(const std::vector<TrigPeriodRow>& rows);

struct BenchRow {
    int n;
    std::uint64_t database_size;
    double step_ms;            // median over repetitions
    double amps_per_second;
    double classical_avg_queries;  // (N+1)/2 linear-scan expectation
    std::uint64_t quantum_queries; // 1 per deletion step
};

std::vector<BenchRow> bench_deletion_step(const std::vector<int>& qubit_counts,
                                          int repetitions, int cap = kDefaultQubitCap);
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);
std::string bench_human(const std::vector<BenchRow>& rows);

/// Formats a double with 12 significant digits, '.' decimal point.
std::string format_real(double value);

}  // namespace qdelete

#endif

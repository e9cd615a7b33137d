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

#include "qdelete/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qdelete/analytic.hpp"
#include "qdelete/deletion.hpp"
#include "qdelete/phase.hpp"
#include "qdelete/state_vector.hpp"

namespace qdelete {

namespace {

struct Tracker {
    double max_deviation = 0.0;
    std::string worst_case = "none";

    void observe(double deviation, const std::string& description) {
        if (deviation > max_deviation || worst_case == "none") {
            max_deviation = std::max(max_deviation, deviation);
            worst_case = description;
        }
    }
};

InvariantResult finish(const std::string& name, double tolerance, const Tracker& tracker) {
    InvariantResult result;
    result.name = name;
    result.max_deviation = tracker.max_deviation;
    result.tolerance = tolerance;
    result.passed = tracker.max_deviation <= tolerance;
    result.worst_case = tracker.worst_case;
    return result;
}

std::string describe(int n, std::uint64_t tau, std::uint64_t k, const char* mode) {
    std::ostringstream out;
    out << "n=" << n << " tau=" << tau << " k=" << k << " mode=" << mode;
    return out.str();
}

StateVector random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector state;
    state.n = n;
    state.amps.resize(std::uint64_t{1} << n);
    for (Amplitude& a : state.amps) {
        a = Amplitude(gauss(rng), gauss(rng));
    }
    const double scale = 1.0 / state.norm();
    for (Amplitude& a : state.amps) {
        a *= scale;
    }
    return state;
}

SpanState random_span_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpanState s{Amplitude(gauss(rng), gauss(rng)), Amplitude(gauss(rng), gauss(rng))};
    const double scale = 1.0 / s.norm();
    s.unmarked *= scale;
    s.marked *= scale;
    return s;
}

std::uint64_t random_index(std::mt19937_64& rng, std::uint64_t size) {
    return std::uniform_int_distribution<std::uint64_t>(0, size - 1)(rng);
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

// Eigenvalues of a 2x2 matrix by the quadratic formula: an oracle for the
// closed-form decomposition, independent of spectral_decompose.
std::pair<Amplitude, Amplitude> quadratic_eigenvalues(const Matrix2& m) {
    const Amplitude trace = m.m00 + m.m11;
    const Amplitude det = m.m00 * m.m11 - m.m01 * m.m10;
    const Amplitude disc = std::sqrt(trace * trace - 4.0 * det);
    return {(trace + disc) * 0.5, (trace - disc) * 0.5};
}

double eigenvalue_pair_distance(const std::pair<Amplitude, Amplitude>& got,
                                const Amplitude& want_a, const Amplitude& want_b) {
    const double direct =
        std::max(std::abs(got.first - want_a), std::abs(got.second - want_b));
    const double crossed =
        std::max(std::abs(got.first - want_b), std::abs(got.second - want_a));
    return std::min(direct, crossed);
}

}  // namespace

std::vector<InvariantResult> run_verification(const VerifyOptions& options) {
    std::vector<InvariantResult> results;
    std::mt19937_64 rng(options.seed);

    const int n_sv = std::min(options.n_max, 20);      // statevector-sized checks
    const int n_small = std::min(options.n_max, 12);   // per-amplitude sweeps
    const int spectral_n_max = 20;                     // pure 2x2 checks are cheap

    // Norm preservation across every engine operation.
    {
        Tracker tracker;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        for (int n = 1; n <= n_sv; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                StateVector state = random_state(rng, n);
                const std::uint64_t tau = random_index(rng, state.size());
                const double phi = angle(rng);
                const auto record = [&](const char* op) {
                    tracker.observe(std::abs(state.norm() - 1.0),
                                    describe(n, tau, 0, op));
                };
                apply_walsh_hadamard(state);
                record("walsh-hadamard");
                apply_marked_complement_phase(state, tau, phi);
                record("marked-complement-phase");
                apply_zero_phase(state, phi);
                record("zero-phase");
                apply_global_phase(state, phi);
                record("global-phase");
                apply_deletion_step(state, tau, matched_phase(state.size()).phi);
                record("deletion-step");
            }
        }
        results.push_back(finish("norm-preservation", 1e-10, tracker));
    }

    // W applied twice is the identity.
    {
        Tracker tracker;
        for (int n = 1; n <= std::min(options.n_max, 14); ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                StateVector state = random_state(rng, n);
                StateVector copy = state;
                apply_walsh_hadamard(copy);
                apply_walsh_hadamard(copy);
                tracker.observe(max_amp_diff(state, copy), describe(n, 0, 0, "involution"));
            }
        }
        results.push_back(finish("hadamard-involution", 1e-12, tracker));
    }

    // The two conditional phases are diagonal, so they commute.
    {
        Tracker tracker;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        for (int n = 1; n <= n_small; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                StateVector state = random_state(rng, n);
                const std::uint64_t size = state.size();
                const std::uint64_t tau = size > 1 ? 1 + random_index(rng, size - 1) : 0;
                const double phi_marked = angle(rng);
                const double phi_zero = angle(rng);
                StateVector order_a = state;
                apply_zero_phase(apply_marked_complement_phase(order_a, tau, phi_marked),
                                 phi_zero);
                StateVector order_b = state;
                apply_marked_complement_phase(apply_zero_phase(order_b, phi_zero), tau,
                                              phi_marked);
                tracker.observe(max_amp_diff(order_a, order_b),
                                describe(n, tau, 0, "commutation"));
            }
        }
        results.push_back(finish("diagonal-commutation", 1e-12, tracker));
    }

    // Conditional phase followed by its inverse is the identity.
    {
        Tracker tracker;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        for (int n = 1; n <= n_small; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                StateVector state = random_state(rng, n);
                StateVector copy = state;
                const std::uint64_t tau = random_index(rng, state.size());
                const double phi = angle(rng);
                apply_marked_complement_phase(copy, tau, phi);
                apply_marked_complement_phase(copy, tau, -phi);
                tracker.observe(max_amp_diff(state, copy),
                                describe(n, tau, 0, "phase-composition"));
            }
        }
        results.push_back(finish("phase-composition-identity", 1e-12, tracker));
    }

    // One exact step deletes the marked item and levels the rest.
    {
        Tracker tracker;
        for (int n = 1; n <= n_sv; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                DeletionConfig config;
                config.n = n;
                config.cap = options.cap;
                config.tau = random_index(rng, std::uint64_t{1} << n);
                config.k = 1;
                const IterationOutcome outcome = run(config);
                const double expected =
                    1.0 / std::sqrt(static_cast<double>(outcome.final_state.size()) - 1.0);
                double dev = outcome.residual_marked_magnitude;
                for (std::uint64_t i = 0; i < outcome.final_state.size(); ++i) {
                    if (i == config.tau) continue;
                    dev = std::max(dev,
                                   std::abs(std::abs(outcome.final_state.amps[i]) - expected));
                }
                tracker.observe(dev, describe(n, config.tau, 1, "exact"));
            }
        }
        if (options.inject_fault) {
            tracker.observe(1.0, "injected fault (self-test)");
        }
        results.push_back(finish("single-query-deletion", 1e-10, tracker));
    }

    // Three steps act as e^{i3phi} on the invariant span.
    {
        Tracker tracker;
        for (int n = 1; n <= n_small; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                const std::uint64_t tau = random_index(rng, std::uint64_t{1} << n);
                const SpanState span = random_span_state(rng);
                StateVector state = lift_to_full(span, tau, n);
                const StateVector original = state;
                const double phi = matched_phase(state.size()).phi;
                for (int step = 0; step < 3; ++step) {
                    apply_deletion_step(state, tau, phi);
                }
                StateVector reference = original;
                apply_global_phase(reference, 3.0 * phi);
                tracker.observe(max_amp_diff(state, reference),
                                describe(n, tau, 3, "span-period"));
            }
        }
        results.push_back(finish("span-periodicity", 1e-9, tracker));
    }

    // Case tags cycle deleted, phase-shifted, identity.
    {
        Tracker tracker;
        for (std::uint64_t k = 1; k <= 12; ++k) {
            DeletionConfig config;
            config.n = 3;
            config.tau = 5;
            config.k = k;
            config.cap = options.cap;
            const CaseTag expected = k % 3 == 1   ? CaseTag::kDeleted
                                     : k % 3 == 2 ? CaseTag::kPhaseShifted
                                                  : CaseTag::kIdentity;
            const IterationOutcome outcome = run(config);
            tracker.observe(outcome.case_tag == expected ? 0.0 : 1.0,
                            describe(3, 5, k, "exact"));
        }
        results.push_back(finish("case-classification", 0.5, tracker));
    }

    // Exact and fixed-pi/3 modes converge: fidelity >= 1 - 10/N.
    {
        Tracker tracker;
        for (int n = 1; n <= std::min(options.n_max, 14); ++n) {
            DeletionConfig config;
            config.n = n;
            config.tau = (std::uint64_t{1} << n) / 2;
            config.k = 1;
            config.cap = options.cap;
            const IterationOutcome exact = run(config);
            config.mode = PhaseMode::kFixedPiOverThree;
            const IterationOutcome fixed = run(config);
            const double bound =
                1.0 - 10.0 / static_cast<double>(std::uint64_t{1} << n);
            const double fid = fidelity(exact.final_state, fixed.final_state);
            tracker.observe(std::max(0.0, bound - fid),
                            describe(n, config.tau, 1, "exact-vs-fixed"));
        }
        results.push_back(finish("mode-consistency", 0.0, tracker));
    }

    // The marked-complement phase is the only oracle query: k steps, k calls.
    {
        Tracker tracker;
        for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                                std::uint64_t{7}, std::uint64_t{12}}) {
            DeletionConfig config;
            config.n = 4;
            config.tau = 9;
            config.k = k;
            config.cap = options.cap;
            const IterationOutcome outcome = run(config);
            tracker.observe(
                std::abs(static_cast<double>(outcome.oracle_calls) - static_cast<double>(k)),
                describe(4, 9, k, "exact"));
        }
        results.push_back(finish("query-counting", 0.5, tracker));
    }

    // The full evolution matches the lifted two-level closed form.
    {
        Tracker tracker;
        for (int n = 1; n <= n_small; ++n) {
            for (std::uint64_t k = 0; k <= 12; ++k) {
                for (PhaseMode mode : {PhaseMode::kExact, PhaseMode::kFixedPiOverThree}) {
                    DeletionConfig config;
                    config.n = n;
                    config.tau = random_index(rng, std::uint64_t{1} << n);
                    config.k = k;
                    config.mode = mode;
                    config.cap = options.cap;
                    const IterationOutcome outcome = run(config);
                    const Prediction prediction =
                        predict_final(config.database_size(), k, mode);
                    const StateVector lifted =
                        lift_to_full(prediction.state, config.tau, n);
                    const double amp_dev = max_amp_diff(outcome.final_state, lifted);
                    const double fid_dev =
                        1.0 - fidelity(outcome.final_state, lifted);
                    tracker.observe(std::max(amp_dev, fid_dev),
                                    describe(n, config.tau, k,
                                             mode == PhaseMode::kExact ? "exact" : "fixed-pi3"));
                }
            }
        }
        results.push_back(finish("oracle-equivalence", 1e-9, tracker));
    }

    // Closed-form power equals repeated multiplication.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            const Matrix2 step = deletion_matrix(size, matched_phase(size).phi);
            Matrix2 accumulated = Matrix2::identity();
            for (std::uint64_t k = 0; k <= 24; ++k) {
                tracker.observe(max_abs_diff(deletion_matrix_power(size, k), accumulated),
                                describe(n, 0, k, "closed-form"));
                accumulated = step * accumulated;
            }
        }
        results.push_back(finish("closed-form-power", 1e-10, tracker));
    }

    // Power matrices repeat with period 3 up to the phase e^{i3phi}.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            const double phi = matched_phase(size).phi;
            for (std::uint64_t k = 0; k <= 21; ++k) {
                const Matrix2 shifted = deletion_matrix_power(size, k + 3);
                const Matrix2 scaled =
                    deletion_matrix_power(size, k).scaled(std::polar(1.0, 3.0 * phi));
                tracker.observe(max_abs_diff(shifted, scaled),
                                describe(n, 0, k, "period-3"));
            }
        }
        results.push_back(finish("operator-period-3", 1e-10, tracker));
    }

    // Every emitted two-level matrix is unitary.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            const double phi = matched_phase(size).phi;
            tracker.observe(deletion_matrix(size, phi).unitarity_deviation(),
                            describe(n, 0, 1, "deletion-matrix"));
            tracker.observe(fixed_phase_matrix(size).unitarity_deviation(),
                            describe(n, 0, 1, "fixed-phase-matrix"));
            tracker.observe(spectral_decompose(size, phi).basis.unitarity_deviation(),
                            describe(n, 0, 0, "eigenvector-basis"));
            for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{5}, std::uint64_t{9}}) {
                tracker.observe(deletion_matrix_power(size, k).unitarity_deviation(),
                                describe(n, 0, k, "power-matrix"));
            }
        }
        results.push_back(finish("matrix-unitarity", 1e-12, tracker));
    }

    // Eigenvalues from the quadratic formula match the closed form.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            const double phi = matched_phase(size).phi;
            const SpectralDecomposition sd = spectral_decompose(size, phi);
            const auto eigs = quadratic_eigenvalues(deletion_matrix(size, phi));
            tracker.observe(
                eigenvalue_pair_distance(eigs, sd.eigenvalues[0], sd.eigenvalues[1]),
                describe(n, 0, 0, "eigenvalues"));
        }
        results.push_back(finish("eigenvalue-identity", 1e-12, tracker));
    }

    // Spectral half angle pi/6, the normalization closed form, reconstruction.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            const double phi = matched_phase(size).phi;
            const SpectralDecomposition sd = spectral_decompose(size, phi);
            tracker.observe(std::abs(sd.spectral_half_angle - kPi / 6.0),
                            describe(n, 0, 0, "half-angle"));
            const double n_items = static_cast<double>(size);
            const double expected =
                (3.0 * n_items + std::sqrt(3.0 * n_items * (3.0 * n_items - 4.0))) /
                (2.0 * n_items);
            tracker.observe(std::abs(sd.normalization - expected),
                            describe(n, 0, 0, "normalization"));
            const Matrix2 lambda{sd.eigenvalues[0], Amplitude(0.0, 0.0), Amplitude(0.0, 0.0),
                                 sd.eigenvalues[1]};
            const Matrix2 reconstructed = sd.basis * lambda * sd.basis.adjoint();
            tracker.observe(max_abs_diff(reconstructed, deletion_matrix(size, phi)),
                            describe(n, 0, 0, "reconstruction"));
        }
        results.push_back(finish("spectral-identities", 1e-12, tracker));
    }

    // Fixed-phase residual law: printed matrix, N^{-3/2}, and the simulation.
    {
        Tracker tracker;
        for (int n = 1; n <= spectral_n_max; ++n) {
            const std::uint64_t size = std::uint64_t{1} << n;
            tracker.observe(
                max_abs_diff(fixed_phase_matrix(size), deletion_matrix(size, kPhaseLimit)),
                describe(n, 0, 0, "printed-matrix"));
            const Prediction one_step = predict_final(size, 1, PhaseMode::kFixedPiOverThree);
            const double law = approximate_residual(size);
            tracker.observe(std::abs(std::abs(one_step.state.marked) - law) / law,
                            describe(n, 0, 1, "residual-relative"));
        }
        for (int n = 1; n <= std::min(options.n_max, 10); ++n) {
            DeletionConfig config;
            config.n = n;
            config.tau = random_index(rng, std::uint64_t{1} << n);
            config.k = 1;
            config.mode = PhaseMode::kFixedPiOverThree;
            config.cap = options.cap;
            const IterationOutcome outcome = run(config);
            tracker.observe(std::abs(outcome.residual_marked_magnitude -
                                     approximate_residual(config.database_size())),
                            describe(n, config.tau, 1, "sim-residual-absolute"));
        }
        results.push_back(finish("residual-law", 1e-12, tracker));
    }

    return results;
}

bool all_passed(const std::vector<InvariantResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const InvariantResult& r) { return r.passed; });
}

}  // namespace qdelete

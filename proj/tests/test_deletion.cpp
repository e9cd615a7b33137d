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

#include "qdelete/deletion.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qdelete/analytic.hpp"
#include "qdelete/phase.hpp"
#include "test_oracle.hpp"

using namespace qdelete;
using qdelete::testing::max_amp_diff;

namespace {

// Reduces an angle difference to (-pi, pi].
double principal_angle(double angle) {
    while (angle > kPi) angle -= 2.0 * kPi;
    while (angle <= -kPi) angle += 2.0 * kPi;
    return angle;
}

}  // namespace

TEST_CASE("matched phase values") {
    CHECK(std::abs(matched_phase(2).phi - kPi / 2.0) < 1e-15);
    CHECK(std::abs(matched_phase(4).phi - 1.230959417340775) < 1e-12);
    CHECK(std::abs(matched_phase(std::uint64_t{1} << 26).phi - kPhaseLimit) < 1e-6);

    for (std::uint64_t size : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{100},
                               std::uint64_t{1} << 20}) {
        const double phi = matched_phase(size).phi;
        CHECK(phi > kPhaseLimit);
        CHECK(phi <= kPi / 2.0 + 1e-15);
    }

    CHECK_THROWS_AS(matched_phase(1), std::domain_error);
    CHECK_THROWS_AS(matched_phase(0), std::domain_error);
}

TEST_CASE("matched phase half-angle identities") {
    for (int n = 1; n <= 20; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        const PhaseParameters p = matched_phase(size);
        const double items = static_cast<double>(size);
        CHECK(std::abs(p.marked_weight - 1.0 / std::sqrt(items)) < 1e-14);
        CHECK(std::abs(p.unmarked_weight - std::sqrt((items - 1.0) / items)) < 1e-14);
        CHECK(std::abs(p.sin_half_phi - 0.5 * std::sqrt(items / (items - 1.0))) < 1e-12);
        CHECK(std::abs(p.cos_half_phi - 0.5 * std::sqrt((3.0 * items - 4.0) / (items - 1.0))) <
              1e-12);
        CHECK(std::abs(p.sin_half_phi * p.sin_half_phi + p.cos_half_phi * p.cos_half_phi - 1.0) <
              1e-12);
        CHECK(std::abs(std::sin(p.phi / 2.0) - p.sin_half_phi) < 1e-14);
    }
}

TEST_CASE("fixed mode parameters") {
    const PhaseParameters p = phase_for_mode(1024, PhaseMode::kFixedPiOverThree);
    CHECK(p.phi == kPhaseLimit);
    CHECK(p.sin_half_phi == 0.5);
    CHECK(std::abs(p.cos_half_phi - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(std::abs(p.marked_weight - 1.0 / 32.0) < 1e-15);
}

TEST_CASE("one deletion step removes the marked amplitude") {
    const double phi = matched_phase(4).phi;

    StateVector state = uniform_state(2);
    apply_deletion_step(state, 2, phi);
    CHECK(std::abs(state.amps[2]) <= 1e-10);
    const Amplitude expected(0.3333333333333335, -0.4714045207910317);  // e^{i(phi-pi)/2}/sqrt(3)
    for (std::uint64_t i : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{3}}) {
        CHECK(std::abs(state.amps[i] - expected) < 1e-10);
    }

    StateVector tau_zero = uniform_state(2);
    apply_deletion_step(tau_zero, 0, phi);
    CHECK(std::abs(tau_zero.amps[0]) <= 1e-10);
}

TEST_CASE("deletion step equals the dense operator product") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int n : {1, 2, 3, 5}) {
        StateVector state;
        state.n = n;
        state.amps.resize(std::uint64_t{1} << n);
        for (Amplitude& a : state.amps) {
            a = Amplitude(gauss(rng), gauss(rng));
        }
        const double scale = 1.0 / state.norm();
        for (Amplitude& a : state.amps) a *= scale;

        const std::uint64_t tau = state.size() / 2;
        const double phi = matched_phase(state.size()).phi;
        const auto expected =
            testing::dense_deletion_operator(n, tau, phi).apply(state.amps);
        apply_deletion_step(state, tau, phi);
        CHECK(max_amp_diff(state.amps, expected) < 1e-12);
    }
}

TEST_CASE("run deletes in one query across sizes") {
    std::mt19937_64 rng(53);
    for (int n : {1, 2, 4, 10, 20}) {
        DeletionConfig config;
        config.n = n;
        config.tau = std::uniform_int_distribution<std::uint64_t>(
            0, (std::uint64_t{1} << n) - 1)(rng);
        config.k = 1;
        const IterationOutcome outcome = run(config);
        CHECK(outcome.case_tag == CaseTag::kDeleted);
        CHECK(outcome.residual_marked_magnitude <= 1e-10);
        CHECK(outcome.oracle_calls == 1);
        const double expected =
            1.0 / std::sqrt(static_cast<double>(config.database_size()) - 1.0);
        for (std::uint64_t i = 0; i < outcome.final_state.size(); i += 7) {
            if (i == config.tau) continue;
            CHECK(std::abs(std::abs(outcome.final_state.amps[i]) - expected) < 1e-10);
        }
    }
}

TEST_CASE("two steps phase-shift without deleting") {
    DeletionConfig config;
    config.n = 3;
    config.tau = 5;
    config.k = 2;
    const IterationOutcome outcome = run(config);
    CHECK(outcome.case_tag == CaseTag::kPhaseShifted);

    const double even = 1.0 / std::sqrt(8.0);
    for (const Amplitude& a : outcome.final_state.amps) {
        CHECK(std::abs(std::abs(a) - even) < 1e-10);
    }
    const double phi = matched_phase(8).phi;
    const double relative = principal_angle(std::arg(outcome.final_state.amps[0]) -
                                            std::arg(outcome.final_state.amps[5]));
    CHECK(std::abs(std::abs(relative) - phi) < 1e-10);
}

TEST_CASE("three steps restore the even superposition") {
    DeletionConfig config;
    config.n = 3;
    config.tau = 5;
    config.k = 3;
    const IterationOutcome outcome = run(config);
    CHECK(outcome.case_tag == CaseTag::kIdentity);
    CHECK(fidelity(outcome.final_state, uniform_state(3)) >= 1.0 - 1e-10);
}

TEST_CASE("zero steps return the even superposition unchanged") {
    DeletionConfig config;
    config.n = 4;
    config.tau = 7;
    config.k = 0;
    const IterationOutcome outcome = run(config);
    CHECK(outcome.case_tag == CaseTag::kIdentity);
    CHECK(outcome.oracle_calls == 0);
    CHECK(max_amp_diff(outcome.final_state, uniform_state(4)) == 0.0);
}

TEST_CASE("case tags cycle with period 3") {
    for (std::uint64_t k = 1; k <= 12; ++k) {
        DeletionConfig config;
        config.n = 2;
        config.tau = 1;
        config.k = k;
        const CaseTag expected = k % 3 == 1   ? CaseTag::kDeleted
                                 : k % 3 == 2 ? CaseTag::kPhaseShifted
                                              : CaseTag::kIdentity;
        CHECK(run(config).case_tag == expected);
        CHECK(case_for_iterations(k) == expected);
    }
    CHECK(case_for_iterations(0) == CaseTag::kIdentity);
}

TEST_CASE("normalized run leaves real positive amplitudes") {
    for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{4}}) {
        DeletionConfig config;
        config.n = 4;
        config.tau = 11;
        config.k = k;
        config.normalize_global_phase = true;
        const IterationOutcome outcome = run(config);
        const double expected = 1.0 / std::sqrt(15.0);
        for (std::uint64_t i = 0; i < outcome.final_state.size(); ++i) {
            if (i == config.tau) continue;
            CHECK(std::abs(outcome.final_state.amps[i] - Amplitude(expected, 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("three steps act as e^{i3phi} on the span") {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int n : {1, 2, 3, 6, 9}) {
        for (int trial = 0; trial < 4; ++trial) {
            SpanState span{Amplitude(gauss(rng), gauss(rng)), Amplitude(gauss(rng), gauss(rng))};
            const double scale = 1.0 / span.norm();
            span.unmarked *= scale;
            span.marked *= scale;

            const std::uint64_t tau = std::uniform_int_distribution<std::uint64_t>(
                0, (std::uint64_t{1} << n) - 1)(rng);
            StateVector state = lift_to_full(span, tau, n);
            StateVector reference = state;

            const double phi = matched_phase(state.size()).phi;
            for (int step = 0; step < 3; ++step) {
                apply_deletion_step(state, tau, phi);
            }
            apply_global_phase(reference, 3.0 * phi);
            CHECK(max_amp_diff(state, reference) < 1e-9);
        }
    }
}

TEST_CASE("orthogonal complement picks up -e^{i phi} per step") {
    // Resolved numerically: off the span the operator is the scalar -e^{i phi},
    // so the full-space period is 6, not 3.
    std::mt19937_64 rng(67);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 3;
    const std::uint64_t size = 8;
    const std::uint64_t tau = 5;
    const double phi = matched_phase(size).phi;

    StateVector state;
    state.n = n;
    state.amps.resize(size);
    for (Amplitude& a : state.amps) a = Amplitude(gauss(rng), gauss(rng));
    // Project out the span: zero the marked slot, remove the unmarked mean.
    state.amps[tau] = Amplitude(0.0, 0.0);
    Amplitude mean(0.0, 0.0);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i != tau) mean += state.amps[i];
    }
    mean /= static_cast<double>(size - 1);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i != tau) state.amps[i] -= mean;
    }
    const double scale = 1.0 / state.norm();
    for (Amplitude& a : state.amps) a *= scale;

    StateVector once = state;
    apply_deletion_step(once, tau, phi);
    StateVector scaled = state;
    apply_global_phase(scaled, kPi + phi);  // -e^{i phi}
    CHECK(max_amp_diff(once, scaled) < 1e-12);

    StateVector thrice = state;
    for (int step = 0; step < 3; ++step) apply_deletion_step(thrice, tau, phi);
    StateVector minus_thrice = state;
    apply_global_phase(minus_thrice, kPi + 3.0 * phi);  // -e^{i 3 phi}
    CHECK(max_amp_diff(thrice, minus_thrice) < 1e-12);
}

TEST_CASE("full-space period is 6") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector state;
    state.n = 4;
    state.amps.resize(16);
    for (Amplitude& a : state.amps) a = Amplitude(gauss(rng), gauss(rng));
    const double scale = 1.0 / state.norm();
    for (Amplitude& a : state.amps) a *= scale;

    const double phi = matched_phase(16).phi;
    StateVector evolved = state;
    for (int step = 0; step < 6; ++step) apply_deletion_step(evolved, 9, phi);
    StateVector reference = state;
    apply_global_phase(reference, 6.0 * phi);
    CHECK(max_amp_diff(evolved, reference) < 1e-9);
}

TEST_CASE("exact and fixed modes converge at large N") {
    for (int n : {10, 12}) {
        DeletionConfig config;
        config.n = n;
        config.tau = 123 % (std::uint64_t{1} << n);
        config.k = 1;
        const IterationOutcome exact = run(config);
        config.mode = PhaseMode::kFixedPiOverThree;
        const IterationOutcome fixed = run(config);
        const double bound = 1.0 - 10.0 / static_cast<double>(config.database_size());
        CHECK(fidelity(exact.final_state, fixed.final_state) >= bound);
    }
}

TEST_CASE("approximate residual law") {
    CHECK(approximate_residual(4) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(approximate_residual(std::uint64_t{1} << 20) ==
          doctest::Approx(std::pow(2.0, -30.0)).epsilon(1e-14));

    DeletionConfig config;
    config.n = 4;
    config.tau = 3;
    config.k = 1;
    config.mode = PhaseMode::kFixedPiOverThree;
    const IterationOutcome outcome = run(config);
    CHECK(std::abs(outcome.residual_marked_magnitude - 1.0 / 64.0) < 1e-12);

    // Cross-check against the two-level approximate matrix.
    const Prediction prediction = predict_final(16, 1, PhaseMode::kFixedPiOverThree);
    CHECK(std::abs(outcome.residual_marked_magnitude - std::abs(prediction.state.marked)) <
          1e-12);
}

TEST_CASE("oracle call accounting") {
    for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{3}, std::uint64_t{7}}) {
        DeletionConfig config;
        config.n = 5;
        config.tau = 17;
        config.k = k;
        CHECK(run(config).oracle_calls == k);
    }
}

TEST_CASE("classical linear scan query counts") {
    CHECK(classical_deletion_queries(8, 0) == 1);
    CHECK(classical_deletion_queries(8, 7) == 8);

    double total = 0.0;
    for (std::uint64_t tau = 0; tau < 8; ++tau) {
        total += static_cast<double>(classical_deletion_queries(8, tau));
    }
    CHECK(total / 8.0 == doctest::Approx(4.5).epsilon(1e-15));

    CHECK_THROWS_AS(classical_deletion_queries(8, 8), std::out_of_range);
}

TEST_CASE("config validation") {
    DeletionConfig config;
    config.n = 3;
    config.tau = 9;
    CHECK_THROWS_WITH_AS(config.validate(), "tau 9 out of range [0, 8)", std::out_of_range);

    config.tau = 0;
    config.n = 30;
    CHECK_THROWS_AS(config.validate(), std::length_error);

    config.n = 3;
    CHECK_NOTHROW(config.validate());
}

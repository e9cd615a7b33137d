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
#include <stdexcept>
#include <string>

namespace qdelete {

CaseTag case_for_iterations(std::uint64_t k) {
    switch (k % 3) {
        case 1: return CaseTag::kDeleted;
        case 2: return CaseTag::kPhaseShifted;
        default: return CaseTag::kIdentity;
    }
}

std::string case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::kDeleted: return "deleted";
        case CaseTag::kPhaseShifted: return "phase-shifted";
        case CaseTag::kIdentity: return "identity";
    }
    return "unknown";
}

void DeletionConfig::validate() const {
    if (n < 1 || n > cap) {
        throw std::length_error("qubit count " + std::to_string(n) +
                                " outside supported range [1, " + std::to_string(cap) +
                                "] (cap " + std::to_string(cap) + ")");
    }
    if (tau >= database_size()) {
        throw std::out_of_range("tau " + std::to_string(tau) + " out of range [0, " +
                                std::to_string(database_size()) + ")");
    }
}

StateVector& apply_deletion_step(StateVector& state, std::uint64_t tau, double phi) {
    apply_marked_complement_phase(state, tau, phi);
    apply_walsh_hadamard(state);
    apply_zero_phase(state, phi);
    apply_walsh_hadamard(state);
    apply_global_phase(state, kPi);
    return state;
}

IterationOutcome run(const DeletionConfig& config) {
    config.validate();
    const PhaseParameters params = phase_for_mode(config.database_size(), config.mode);

    StateVector state = uniform_state(config.n, config.cap);
    for (std::uint64_t step = 0; step < config.k; ++step) {
        apply_deletion_step(state, config.tau, params.phi);
    }

    IterationOutcome outcome;
    outcome.case_tag = case_for_iterations(config.k);
    if (config.normalize_global_phase && outcome.case_tag == CaseTag::kDeleted) {
        const double predicted =
            (static_cast<double>(config.k) - 0.5) * params.phi - kPi / 2.0;
        apply_global_phase(state, -predicted);
    }
    outcome.residual_marked_magnitude = std::abs(state.amps[config.tau]);
    outcome.oracle_calls = state.oracle_calls;
    outcome.final_state = std::move(state);
    return outcome;
}

std::uint64_t classical_deletion_queries(std::uint64_t database_size, std::uint64_t tau_position) {
    if (tau_position >= database_size) {
        throw std::out_of_range("tau " + std::to_string(tau_position) + " out of range [0, " +
                                std::to_string(database_size) + ")");
    }
    std::uint64_t queries = 0;
    for (std::uint64_t i = 0; i < database_size; ++i) {
        ++queries;
        if (i == tau_position) {
            break;
        }
    }
    return queries;
}

double approximate_residual(std::uint64_t database_size) {
    const double n_items = static_cast<double>(database_size);
    return 1.0 / (n_items * std::sqrt(n_items));
}

}  // namespace qdelete

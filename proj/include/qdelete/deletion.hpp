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

#ifndef QDELETE_DELETION_HPP
#define QDELETE_DELETION_HPP

#include <cstdint>
#include <string>

#include "qdelete/phase.hpp"
#include "qdelete/state_vector.hpp"

namespace qdelete {

/// Outcome class of k deletion steps; periodic in k with period 3.
enum class CaseTag {
    kDeleted,      // k = 3m+1: marked amplitude driven to zero
    kPhaseShifted, // k = 3m+2: magnitudes even, marked state phase-shifted
    kIdentity      // k = 3m (incl. k = 0): even superposition restored
};

CaseTag case_for_iterations(std::uint64_t k);
std::string case_name(CaseTag tag);

struct DeletionConfig {
    int n = 1;
    std::uint64_t tau = 0;
    std::uint64_t k = 1;
    PhaseMode mode = PhaseMode::kExact;
    bool normalize_global_phase = false;
    int cap = kDefaultQubitCap;

    std::uint64_t database_size() const { return std::uint64_t{1} << n; }
    /// Throws std::invalid_argument / std::out_of_range / std::length_error
    /// with a message naming the violated bound.
    void validate() const;
};

struct IterationOutcome {
    CaseTag case_tag = CaseTag::kIdentity;
    double residual_marked_magnitude = 0.0;
    StateVector final_state;
    std::uint64_t oracle_calls = 0;
};

/// One deletion step: the marked-complement phase, a Hadamard transform, the
/// zero-state phase, a second Hadamard transform, then a global phase of pi.
/// Exactly one oracle call.
StateVector& apply_deletion_step(StateVector& state, std::uint64_t tau, double phi);

/// Runs k deletion steps on the even superposition. With
/// normalize_global_phase set and k = 3m+1, the predicted global phase
/// (k - 1/2)phi - pi/2 is removed after the final step.
IterationOutcome run(const DeletionConfig& config);

/// Queries a linear scan spends before hitting position tau_position
/// (worst case N; average (N+1)/2). Classical baseline for the benchmark.
std::uint64_t classical_deletion_queries(std::uint64_t database_size, std::uint64_t tau_position);

/// Predicted marked-amplitude magnitude after one fixed-pi/3 step: N^{-3/2}.
double approximate_residual(std::uint64_t database_size);

}  // namespace qdelete

#endif

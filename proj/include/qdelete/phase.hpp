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

#ifndef QDELETE_PHASE_HPP
#define QDELETE_PHASE_HPP

#include <cstdint>
#include <numbers>

namespace qdelete {

inline constexpr double kPi = std::numbers::pi;

/// Large-database limit of the matched phase.
inline constexpr double kPhaseLimit = std::numbers::pi / 3.0;

enum class PhaseMode {
    kExact,           // size-matched phi(N)
    kFixedPiOverThree // constant pi/3, the large-N limit
};

/// Conditional phase angle and the derived quantities the two-level model
/// needs. For a database of N items the even superposition splits into a
/// marked component of weight 1/sqrt(N) and an unmarked component of weight
/// sqrt((N-1)/N); the matched phase is fixed by sin(phi/2) = (1/2)sqrt(N/(N-1)).
struct PhaseParameters {
    std::uint64_t database_size = 0;  // N
    double marked_weight = 0.0;       // 1/sqrt(N)
    double unmarked_weight = 0.0;     // sqrt((N-1)/N)
    double phi = 0.0;                 // radians
    double sin_half_phi = 0.0;        // (1/2)sqrt(N/(N-1)) in exact mode
    double cos_half_phi = 0.0;        // (1/2)sqrt((3N-4)/(N-1)) in exact mode
};

/// Matched phase for a database of N >= 2 items; phi lies in (pi/3, pi/2].
PhaseParameters matched_phase(std::uint64_t database_size);

/// Parameters for the chosen mode: matched phi(N) or the fixed pi/3.
PhaseParameters phase_for_mode(std::uint64_t database_size, PhaseMode mode);

}  // namespace qdelete

#endif

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

#include "qdelete/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdelete {

namespace {

void check_size(std::uint64_t database_size) {
    if (database_size < 2) {
        throw std::domain_error("database size " + std::to_string(database_size) +
                                " too small; need N >= 2");
    }
}

}  // namespace

PhaseParameters matched_phase(std::uint64_t database_size) {
    check_size(database_size);
    const double n_items = static_cast<double>(database_size);
    PhaseParameters p;
    p.database_size = database_size;
    p.marked_weight = 1.0 / std::sqrt(n_items);
    p.unmarked_weight = std::sqrt((n_items - 1.0) / n_items);
    p.sin_half_phi = 0.5 * std::sqrt(n_items / (n_items - 1.0));
    p.cos_half_phi = 0.5 * std::sqrt((3.0 * n_items - 4.0) / (n_items - 1.0));
    p.phi = 2.0 * std::asin(p.sin_half_phi);
    return p;
}

PhaseParameters phase_for_mode(std::uint64_t database_size, PhaseMode mode) {
    if (mode == PhaseMode::kExact) {
        return matched_phase(database_size);
    }
    check_size(database_size);
    const double n_items = static_cast<double>(database_size);
    PhaseParameters p;
    p.database_size = database_size;
    p.marked_weight = 1.0 / std::sqrt(n_items);
    p.unmarked_weight = std::sqrt((n_items - 1.0) / n_items);
    p.phi = kPhaseLimit;
    p.sin_half_phi = 0.5;
    p.cos_half_phi = std::sqrt(3.0) / 2.0;
    return p;
}

}  // namespace qdelete

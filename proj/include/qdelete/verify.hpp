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

#ifndef QDELETE_VERIFY_HPP
#define QDELETE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qdelete {

struct VerifyOptions {
    int n_max = 20;
    std::uint64_t seed = 12345;
    int trials = 5;
    int cap = 26;
    /// Test-only: biases one invariant so the failure path can be exercised.
    bool inject_fault = false;
};

struct InvariantResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Config of the worst observed case, for reproduction.
    std::string worst_case;
};

/// Runs every cross-module invariant (engine norm/involution properties,
/// single-query deletion, span periodicity, case classification, oracle
/// equivalence, spectral identities, residual law, query counting).
std::vector<InvariantResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<InvariantResult>& results);

}  // namespace qdelete

#endif

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

#ifndef QDELETE_STATE_VECTOR_HPP
#define QDELETE_STATE_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace qdelete {

using Amplitude = std::complex<double>;

/// Default ceiling on the register size: 2^26 amplitudes is 1 GiB.
inline constexpr int kDefaultQubitCap = 26;

/// Dense register of 2^n complex amplitudes. Basis index i is the integer
/// reading of the qubit register. Plain data; the engine operations below
/// mutate it in place and also return it, so calls can be chained.
struct StateVector {
    int n = 0;
    std::vector<Amplitude> amps;

    /// Number of times the marked-complement phase (the only tau-dependent
    /// operation, i.e. an oracle query) has been applied to this register.
    std::uint64_t oracle_calls = 0;

    std::uint64_t size() const { return static_cast<std::uint64_t>(amps.size()); }
    double norm() const;
    double probability(std::uint64_t index) const;
};

/// Even superposition over all 2^n basis states.
StateVector uniform_state(int n, int cap = kDefaultQubitCap);

/// |index> on n qubits.
StateVector basis_state(int n, std::uint64_t index, int cap = kDefaultQubitCap);

/// n-qubit Hadamard transform, computed as n in-place butterfly passes with
/// per-pass 1/sqrt(2) scaling. Self-inverse. O(N log N).
StateVector& apply_walsh_hadamard(StateVector& state);

/// Multiplies every amplitude except the one at `tau` by e^{i phi}.
/// Counts as one oracle call.
StateVector& apply_marked_complement_phase(StateVector& state, std::uint64_t tau, double phi);

/// Multiplies the amplitude at index 0 by e^{i phi}.
StateVector& apply_zero_phase(StateVector& state, double phi);

/// Multiplies every amplitude by e^{i theta}.
StateVector& apply_global_phase(StateVector& state, double theta);

/// |<a|b>|: 1 iff the states agree up to a global phase, 0 if orthogonal.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qdelete

#endif

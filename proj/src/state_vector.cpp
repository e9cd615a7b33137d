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

#include "qdelete/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdelete {

namespace {

void check_qubit_count(int n, int cap) {
    if (n < 1 || n > cap) {
        throw std::length_error("qubit count " + std::to_string(n) +
                                " outside supported range [1, " + std::to_string(cap) +
                                "] (cap " + std::to_string(cap) + ")");
    }
}

void check_index(const StateVector& state, std::uint64_t index, const char* what) {
    if (index >= state.size()) {
        throw std::out_of_range(std::string(what) + " " + std::to_string(index) +
                                " out of range [0, " + std::to_string(state.size()) + ")");
    }
}

}  // namespace

double StateVector::norm() const {
    long double sum = 0.0L;
    for (const Amplitude& a : amps) {
        sum += static_cast<long double>(a.real()) * a.real() +
               static_cast<long double>(a.imag()) * a.imag();
    }
    return static_cast<double>(std::sqrt(sum));
}

double StateVector::probability(std::uint64_t index) const {
    check_index(*this, index, "basis index");
    return std::norm(amps[index]);
}

StateVector uniform_state(int n, int cap) {
    check_qubit_count(n, cap);
    StateVector state;
    state.n = n;
    const std::uint64_t size = std::uint64_t{1} << n;
    state.amps.assign(size, Amplitude(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
    return state;
}

StateVector basis_state(int n, std::uint64_t index, int cap) {
    check_qubit_count(n, cap);
    StateVector state;
    state.n = n;
    state.amps.assign(std::uint64_t{1} << n, Amplitude(0.0, 0.0));
    check_index(state, index, "basis index");
    state.amps[index] = Amplitude(1.0, 0.0);
    return state;
}

StateVector& apply_walsh_hadamard(StateVector& state) {
    Amplitude* a = state.amps.data();
    const std::uint64_t size = state.size();
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    for (std::uint64_t half = 1; half < size; half <<= 1) {
        for (std::uint64_t block = 0; block < size; block += half << 1) {
            for (std::uint64_t j = block; j < block + half; ++j) {
                const Amplitude x = a[j];
                const Amplitude y = a[j + half];
                a[j] = (x + y) * inv_sqrt2;
                a[j + half] = (x - y) * inv_sqrt2;
            }
        }
    }
    return state;
}

StateVector& apply_marked_complement_phase(StateVector& state, std::uint64_t tau, double phi) {
    check_index(state, tau, "tau");
    const Amplitude marked = state.amps[tau];
    const Amplitude factor = std::polar(1.0, phi);
    for (Amplitude& a : state.amps) {
        a *= factor;
    }
    state.amps[tau] = marked;
    ++state.oracle_calls;
    return state;
}

StateVector& apply_zero_phase(StateVector& state, double phi) {
    state.amps[0] *= std::polar(1.0, phi);
    return state;
}

StateVector& apply_global_phase(StateVector& state, double theta) {
    const Amplitude factor = std::polar(1.0, theta);
    for (Amplitude& a : state.amps) {
        a *= factor;
    }
    return state;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n != b.n || a.size() != b.size()) {
        throw std::invalid_argument("fidelity requires equal qubit counts, got " +
                                    std::to_string(a.n) + " and " + std::to_string(b.n));
    }
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const Amplitude& x = a.amps[i];
        const Amplitude& y = b.amps[i];
        re += static_cast<long double>(x.real()) * y.real() +
              static_cast<long double>(x.imag()) * y.imag();
        im += static_cast<long double>(x.real()) * y.imag() -
              static_cast<long double>(x.imag()) * y.real();
    }
    return std::min(1.0, static_cast<double>(std::sqrt(re * re + im * im)));
}

}  // namespace qdelete

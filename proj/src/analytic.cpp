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

#include "qdelete/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdelete {

namespace {

constexpr double kHalfSqrt3 = 0.86602540378443864676;  // sqrt(3)/2

// sin(k*pi/3) and cos(k*pi/3) are exact six-periodic lattices; evaluating
// them by lookup keeps the table entries bit-identical to the constants.
double sin_third_turn(std::uint64_t k) {
    switch (k % 6) {
        case 1:
        case 2: return kHalfSqrt3;
        case 4:
        case 5: return -kHalfSqrt3;
        default: return 0.0;
    }
}

double cos_third_turn(std::uint64_t k) {
    switch (k % 6) {
        case 0: return 1.0;
        case 1: return 0.5;
        case 2: return -0.5;
        case 3: return -1.0;
        case 4: return -0.5;
        default: return 0.5;
    }
}

struct SpanWeights {
    double marked;    // 1/sqrt(N)
    double unmarked;  // sqrt((N-1)/N)
};

SpanWeights span_weights(std::uint64_t database_size) {
    if (database_size < 2) {
        throw std::domain_error("database size " + std::to_string(database_size) +
                                " too small; need N >= 2");
    }
    const double n_items = static_cast<double>(database_size);
    return SpanWeights{1.0 / std::sqrt(n_items), std::sqrt((n_items - 1.0) / n_items)};
}

}  // namespace

double SpanState::norm() const {
    return std::sqrt(std::norm(unmarked) + std::norm(marked));
}

Matrix2 Matrix2::identity() {
    return Matrix2{Amplitude(1.0, 0.0), Amplitude(0.0, 0.0),
                   Amplitude(0.0, 0.0), Amplitude(1.0, 0.0)};
}

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
    return Matrix2{m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
                   m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
}

SpanState Matrix2::operator*(const SpanState& v) const {
    return SpanState{m00 * v.unmarked + m01 * v.marked,
                     m10 * v.unmarked + m11 * v.marked};
}

Matrix2 Matrix2::adjoint() const {
    return Matrix2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

Matrix2 Matrix2::scaled(Amplitude factor) const {
    return Matrix2{m00 * factor, m01 * factor, m10 * factor, m11 * factor};
}

double Matrix2::unitarity_deviation() const {
    const Matrix2 product = *this * adjoint();
    return max_abs_diff(product, identity());
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                     std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
}

Matrix2 deletion_matrix(std::uint64_t database_size, double phi) {
    const SpanWeights w = span_weights(database_size);
    const double sb = w.marked;
    const double cb = w.unmarked;
    const Amplitude e = std::polar(1.0, phi);
    const Amplitude e1 = e - 1.0;
    return Matrix2{-e * (1.0 + e1 * (cb * cb)), -e1 * (sb * cb),
                   -e * e1 * (sb * cb), -(1.0 + e1 * (sb * sb))};
}

Matrix2 fixed_phase_matrix(std::uint64_t database_size) {
    if (database_size < 2) {
        throw std::domain_error("database size " + std::to_string(database_size) +
                                " too small; need N >= 2");
    }
    const double n_items = static_cast<double>(database_size);
    return Matrix2{
        Amplitude((n_items - 2.0) / (2.0 * n_items), -kHalfSqrt3),
        Amplitude(std::sqrt(n_items - 1.0) / (2.0 * n_items),
                  -std::sqrt(3.0 * (n_items - 1.0)) / (2.0 * n_items)),
        Amplitude(std::sqrt(n_items - 1.0) / n_items, 0.0),
        Amplitude((-2.0 * n_items + 1.0) / (2.0 * n_items),
                  -std::sqrt(3.0) / (2.0 * n_items)),
    };
}

SpectralDecomposition spectral_decompose(std::uint64_t database_size, double phi) {
    const SpanWeights w = span_weights(database_size);
    const double cb = w.unmarked;
    const double sb = w.marked;

    SpectralDecomposition sd;
    sd.spectral_half_angle = std::asin(std::sin(phi / 2.0) * cb);
    const double column = std::cos(phi / 2.0) * cb + std::cos(sd.spectral_half_angle);
    sd.normalization = sb * sb + column * column;

    const double scale = 1.0 / std::sqrt(sd.normalization);
    sd.basis = Matrix2{std::polar(scale * column, -phi / 2.0), Amplitude(-scale * sb, 0.0),
                       Amplitude(scale * sb, 0.0), std::polar(scale * column, phi / 2.0)};
    sd.eigenvalues[0] = -std::polar(1.0, phi + 2.0 * sd.spectral_half_angle);
    sd.eigenvalues[1] = -std::polar(1.0, phi - 2.0 * sd.spectral_half_angle);
    return sd;
}

Matrix2 deletion_matrix_power(std::uint64_t database_size, std::uint64_t k) {
    const PhaseParameters p = matched_phase(database_size);
    const double n_items = static_cast<double>(database_size);

    const double sin_turn = sin_third_turn(k);
    const double cos_turn = cos_third_turn(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Amplitude prefactor =
        std::polar(sign, static_cast<double>(k) * p.phi);

    const double diag = std::sqrt((3.0 * n_items - 4.0) / (3.0 * n_items));
    const double off_re = std::sqrt(1.0 / (3.0 * (n_items - 1.0)));
    const double off_im = std::sqrt((3.0 * n_items - 4.0) / (3.0 * n_items * (n_items - 1.0)));

    return Matrix2{
        prefactor * Amplitude(cos_turn, sin_turn * diag),
        prefactor * Amplitude(sin_turn * off_re, sin_turn * off_im),
        prefactor * Amplitude(-sin_turn * off_re, sin_turn * off_im),
        prefactor * Amplitude(cos_turn, -sin_turn * diag),
    };
}

std::vector<TrigPeriodRow> trig_period_table(std::uint64_t k_max) {
    if (k_max < 1) {
        throw std::invalid_argument("k_max must be >= 1");
    }
    std::vector<TrigPeriodRow> rows;
    rows.reserve(k_max);
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const double s = sin_third_turn(k);
        const double c = cos_third_turn(k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        // + 0.0 turns -1 * 0 back into a plain zero.
        rows.push_back(TrigPeriodRow{k, s, c, sign * s + 0.0, sign * c + 0.0});
    }
    return rows;
}

Prediction predict_final(std::uint64_t database_size, std::uint64_t k, PhaseMode mode) {
    const PhaseParameters p = phase_for_mode(database_size, mode);
    const SpanState initial{Amplitude(p.unmarked_weight, 0.0), Amplitude(p.marked_weight, 0.0)};

    Prediction prediction;
    prediction.case_tag = case_for_iterations(k);
    if (k == 0) {
        prediction.state = initial;
        return prediction;
    }

    if (mode == PhaseMode::kFixedPiOverThree) {
        const Matrix2 step = fixed_phase_matrix(database_size);
        SpanState state = initial;
        for (std::uint64_t i = 0; i < k; ++i) {
            state = step * state;
        }
        prediction.state = state;
        return prediction;
    }

    const double steps = static_cast<double>(k);
    switch (k % 3) {
        case 1:
            prediction.state = SpanState{std::polar(1.0, (steps - 0.5) * p.phi - kPi / 2.0),
                                         Amplitude(0.0, 0.0)};
            break;
        case 2:
            // The relative phase the marked state picks up is phi; written out,
            // the unmarked component carries pi + (k-1)phi and the marked one
            // pi + k*phi.
            prediction.state =
                SpanState{std::polar(p.unmarked_weight, kPi + (steps - 1.0) * p.phi),
                          std::polar(p.marked_weight, kPi + steps * p.phi)};
            break;
        default:
            prediction.state = SpanState{std::polar(p.unmarked_weight, steps * p.phi),
                                         std::polar(p.marked_weight, steps * p.phi)};
            break;
    }
    return prediction;
}

StateVector lift_to_full(const SpanState& span, std::uint64_t tau, int n) {
    StateVector state;
    state.n = n;
    const std::uint64_t size = std::uint64_t{1} << n;
    if (n < 1) {
        throw std::length_error("qubit count " + std::to_string(n) + " must be >= 1");
    }
    if (tau >= size) {
        throw std::out_of_range("tau " + std::to_string(tau) + " out of range [0, " +
                                std::to_string(size) + ")");
    }
    const Amplitude unmarked_each =
        span.unmarked / std::sqrt(static_cast<double>(size - 1));
    state.amps.assign(size, unmarked_each);
    state.amps[tau] = span.marked;
    return state;
}

SpanState project_to_span(const StateVector& state, std::uint64_t tau) {
    if (tau >= state.size()) {
        throw std::out_of_range("tau " + std::to_string(tau) + " out of range [0, " +
                                std::to_string(state.size()) + ")");
    }
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        if (i == tau) {
            continue;
        }
        re += state.amps[i].real();
        im += state.amps[i].imag();
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(state.size() - 1));
    return SpanState{Amplitude(static_cast<double>(re) * scale, static_cast<double>(im) * scale),
                     state.amps[tau]};
}

}  // namespace qdelete

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

#ifndef QDELETE_ANALYTIC_HPP
#define QDELETE_ANALYTIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qdelete/deletion.hpp"
#include "qdelete/phase.hpp"
#include "qdelete/state_vector.hpp"

namespace qdelete {

// Closed-form two-level model of the deletion operator on the invariant span
// {uniform-over-unmarked, marked}. This module is the independent oracle the
// full statevector engine is validated against; it never calls the engine
// transforms.

/// Amplitudes in the two-level span basis. First component multiplies the
/// normalized uniform superposition over unmarked items, second the marked
/// basis state.
struct SpanState {
    Amplitude unmarked{0.0, 0.0};
    Amplitude marked{0.0, 0.0};

    double norm() const;
};

struct Matrix2 {
    Amplitude m00, m01, m10, m11;

    static Matrix2 identity();
    Matrix2 operator*(const Matrix2& rhs) const;
    SpanState operator*(const SpanState& v) const;
    Matrix2 adjoint() const;
    Matrix2 scaled(Amplitude factor) const;

    /// max entry of |M M^dag - I|.
    double unitarity_deviation() const;
};

/// max entrywise |a - b|.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// The 2x2 matrix of one deletion step on the span, for any phase angle.
Matrix2 deletion_matrix(std::uint64_t database_size, double phi);

/// The fixed-pi/3 step matrix in its printed closed form; identical to
/// deletion_matrix(N, pi/3).
Matrix2 fixed_phase_matrix(std::uint64_t database_size);

/// Eigensystem of the deletion matrix. Columns of `basis` are the
/// eigenvectors; column j pairs with eigenvalues[j]. For the matched phase
/// the half angle is pi/6 independent of N and `normalization` equals
/// (3N + sqrt(3N(3N-4)))/(2N).
struct SpectralDecomposition {
    Matrix2 basis;
    Amplitude eigenvalues[2];     // -e^{i(phi + 2a)}, -e^{i(phi - 2a)}
    double spectral_half_angle;   // a = arcsin(sin(phi/2) * unmarked_weight)
    double normalization;         // squared norm of the unnormalized columns
};

SpectralDecomposition spectral_decompose(std::uint64_t database_size, double phi);

/// k-th power of the matched-phase deletion matrix in closed form
/// (rotation angle k*pi/3 with alternating sign); periodic in k with
/// period 3 up to the phase e^{i 3 phi}.
Matrix2 deletion_matrix_power(std::uint64_t database_size, std::uint64_t k);

/// One row of the trigonometric period table at theta = k*pi/3.
struct TrigPeriodRow {
    std::uint64_t k;
    double sin_theta;
    double cos_theta;
    double alternating_sin;  // (-1)^k sin(theta), period 3
    double alternating_cos;  // (-1)^k cos(theta), period 3
};

/// Rows for k = 1..k_max. Entries are exact multiples of {0, 1/2, 1, sqrt(3)/2}.
std::vector<TrigPeriodRow> trig_period_table(std::uint64_t k_max);

struct Prediction {
    SpanState state;
    CaseTag case_tag;
};

/// Closed-form state after k deletion steps from the even superposition.
/// Exact mode uses the per-case formulas; fixed-pi/3 mode multiplies out
/// the fixed-phase matrix. k = 0 returns the initial span state.
Prediction predict_final(std::uint64_t database_size, std::uint64_t k, PhaseMode mode);

/// Embeds a span state into the full register: the marked component lands on
/// index tau, the unmarked component spreads evenly over the other N-1.
StateVector lift_to_full(const SpanState& span, std::uint64_t tau, int n);

/// Orthogonal projection of a register onto the span basis at tau.
SpanState project_to_span(const StateVector& state, std::uint64_t tau);

}  // namespace qdelete

#endif

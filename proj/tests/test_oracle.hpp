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

// Test-only brute-force oracle: dense operator matrices built entrywise and
// applied by plain matrix-vector products. Deliberately independent of the
// engine's in-place transforms; only usable for small registers.

#ifndef QDELETE_TESTS_TEST_ORACLE_HPP
#define QDELETE_TESTS_TEST_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qdelete/analytic.hpp"
#include "qdelete/state_vector.hpp"

namespace qdelete::testing {

struct DenseMatrix {
    std::uint64_t size = 0;
    std::vector<Amplitude> entries;  // row-major

    static DenseMatrix identity(std::uint64_t size) {
        DenseMatrix m;
        m.size = size;
        m.entries.assign(size * size, Amplitude(0.0, 0.0));
        for (std::uint64_t i = 0; i < size; ++i) {
            m.at(i, i) = Amplitude(1.0, 0.0);
        }
        return m;
    }

    Amplitude& at(std::uint64_t row, std::uint64_t col) { return entries[row * size + col]; }
    const Amplitude& at(std::uint64_t row, std::uint64_t col) const {
        return entries[row * size + col];
    }

    DenseMatrix operator*(const DenseMatrix& rhs) const {
        DenseMatrix out;
        out.size = size;
        out.entries.assign(size * size, Amplitude(0.0, 0.0));
        for (std::uint64_t i = 0; i < size; ++i) {
            for (std::uint64_t k = 0; k < size; ++k) {
                const Amplitude lhs_ik = at(i, k);
                for (std::uint64_t j = 0; j < size; ++j) {
                    out.at(i, j) += lhs_ik * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    std::vector<Amplitude> apply(const std::vector<Amplitude>& v) const {
        std::vector<Amplitude> out(size, Amplitude(0.0, 0.0));
        for (std::uint64_t i = 0; i < size; ++i) {
            for (std::uint64_t j = 0; j < size; ++j) {
                out[i] += at(i, j) * v[j];
            }
        }
        return out;
    }

    DenseMatrix scaled(Amplitude factor) const {
        DenseMatrix out = *this;
        for (Amplitude& e : out.entries) {
            e *= factor;
        }
        return out;
    }
};

// Hadamard entry H^{(n)}[i][j] = (-1)^{popcount(i & j)} / sqrt(2^n).
inline DenseMatrix dense_walsh(int n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    DenseMatrix m;
    m.size = size;
    m.entries.resize(size * size);
    for (std::uint64_t i = 0; i < size; ++i) {
        for (std::uint64_t j = 0; j < size; ++j) {
            const int parity = __builtin_popcountll(i & j) & 1;
            m.at(i, j) = Amplitude(parity ? -scale : scale, 0.0);
        }
    }
    return m;
}

inline DenseMatrix dense_marked_complement_phase(int n, std::uint64_t tau, double phi) {
    DenseMatrix m = DenseMatrix::identity(std::uint64_t{1} << n);
    const Amplitude factor = std::polar(1.0, phi);
    for (std::uint64_t i = 0; i < m.size; ++i) {
        if (i != tau) {
            m.at(i, i) = factor;
        }
    }
    return m;
}

inline DenseMatrix dense_zero_phase(int n, double phi) {
    DenseMatrix m = DenseMatrix::identity(std::uint64_t{1} << n);
    m.at(0, 0) = std::polar(1.0, phi);
    return m;
}

inline DenseMatrix dense_deletion_operator(int n, std::uint64_t tau, double phi) {
    const DenseMatrix w = dense_walsh(n);
    const DenseMatrix product =
        w * dense_zero_phase(n, phi) * w * dense_marked_complement_phase(n, tau, phi);
    return product.scaled(Amplitude(-1.0, 0.0));
}

// Restriction of a dense operator to the two-level basis (unmarked-uniform,
// marked): B^dag M B with B's columns the two basis vectors.
inline Matrix2 project_to_span_basis(const DenseMatrix& m, std::uint64_t tau) {
    const std::uint64_t size = m.size;
    std::vector<Amplitude> unmarked(size, Amplitude(0.0, 0.0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(size - 1));
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i != tau) {
            unmarked[i] = Amplitude(scale, 0.0);
        }
    }
    std::vector<Amplitude> marked(size, Amplitude(0.0, 0.0));
    marked[tau] = Amplitude(1.0, 0.0);

    const auto inner = [size](const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
        Amplitude sum(0.0, 0.0);
        for (std::uint64_t i = 0; i < size; ++i) {
            sum += std::conj(a[i]) * b[i];
        }
        return sum;
    };
    const std::vector<Amplitude> m_unmarked = m.apply(unmarked);
    const std::vector<Amplitude> m_marked = m.apply(marked);
    return Matrix2{inner(unmarked, m_unmarked), inner(unmarked, m_marked),
                   inner(marked, m_unmarked), inner(marked, m_marked)};
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

inline double max_amp_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace qdelete::testing

#endif

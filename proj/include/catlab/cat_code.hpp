// Copyright 2026 The catlab Authors
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

// Two-component cat code: |0_L> ~ |a> + |-a>, |1_L> ~ |ia> + |-ia>.
//
// Every normalization here is numerical, against the Gram matrix of the
// (non-orthogonal) logical basis. Logical states are carried as coefficient
// pairs (mu, nu) or 2x2 coefficient blocks B, meaning the operator
// sum_jk B_jk |j_L><k_L| on the Fock space.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "catlab/fock.hpp"

namespace catlab {

FockVector logical_zero(double alpha, int cutoff, const Tolerances& tol = default_tolerances());
FockVector logical_one(double alpha, int cutoff, const Tolerances& tol = default_tolerances());

struct LogicalFrame {
    double alpha = 0.0;
    FockVector zero;
    FockVector one;
    /// gram(j, k) = <j_L|k_L>
    Eigen::Matrix2cd gram;

    int cutoff() const { return zero.cutoff(); }
    /// D x 2 matrix with columns |0_L>, |1_L>.
    Eigen::MatrixXcd basis() const;
    /// sum_jk B_jk |j_L><k_L|
    DensityMatrix embed(const Eigen::Matrix2cd& block) const;
    FockVector embed(const Eigen::Vector2cd& coeffs) const;
    /// Trace of the embedded block: Tr(B * gram) = sum_jk B_jk <k_L|j_L>.
    double block_trace(const Eigen::Matrix2cd& block) const;
};

LogicalFrame make_frame(double alpha, int cutoff, const Tolerances& tol = default_tolerances());

enum class PauliLabel { Zero, One, Plus, Minus, PlusI, MinusI };

std::string_view to_string(PauliLabel label);
/// Accepts "0", "1", "+", "-", "+i", "-i".
PauliLabel parse_pauli_label(std::string_view text);

inline constexpr std::array<PauliLabel, 6> kAllPauliLabels = {
    PauliLabel::Zero, PauliLabel::One,   PauliLabel::Plus,
    PauliLabel::Minus, PauliLabel::PlusI, PauliLabel::MinusI};

/// mu|0_L> + nu|1_L>, normalized so the embedded vector has unit norm.
struct LogicalCoeffState {
    LogicalFrame frame;
    cplx mu;
    cplx nu;

    Eigen::Vector2cd coeffs() const { return {mu, nu}; }
    Eigen::Matrix2cd block() const;
    FockVector embed() const { return frame.embed(coeffs()); }
    DensityMatrix density() const { return frame.embed(block()); }
};

LogicalCoeffState make_logical_state(const LogicalFrame& frame, cplx mu, cplx nu);
LogicalCoeffState pauli_eigenstate(PauliLabel label, const LogicalFrame& frame);
LogicalCoeffState pauli_eigenstate(PauliLabel label, double alpha, int cutoff);

/// Normalized |0bar_L>|0_L> + |1bar_L>|1_L>, where the first mode carries
/// amplitude alpha_in and the second alpha_out.
struct BellState {
    LogicalFrame frame_in;
    LogicalFrame frame_out;
    /// Two-mode amplitudes amps(m_in, m_out).
    Eigen::MatrixXcd amps;
    /// amps = (|0bar>|0> + |1bar>|1>) / scale.
    double scale = 1.0;
};

BellState bell_state(double alpha_in, double alpha_out, int cutoff,
                     const Tolerances& tol = default_tolerances());

/// Logical Pauli operators as maps on coefficients. Bit 0 is X, bit 1 is Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, XZ = 3 };

constexpr Pauli compose(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr bool has_x(Pauli p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool has_z(Pauli p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }

std::string_view to_string(Pauli p);

/// Coefficient-space matrix: X swaps labels, Z negates the |1_L> coefficient,
/// XZ applies Z then X.
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// P B P^dag on a coefficient block (no renormalization).
Eigen::Matrix2cd apply_logical_pauli(const Eigen::Matrix2cd& block, Pauli p);

/// Applies the Pauli to the coefficients and renormalizes against the Gram.
LogicalCoeffState apply_logical_pauli(const LogicalCoeffState& state, Pauli p);

}  // namespace catlab

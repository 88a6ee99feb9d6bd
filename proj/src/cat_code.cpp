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

#include "catlab/cat_code.hpp"

#include <cmath>
#include <stdexcept>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

// |beta> + |-beta> with odd amplitudes set to exactly zero.
Eigen::VectorXcd even_cat(double alpha, int cutoff, const Tolerances& tol) {
    if (alpha < 0.0) {
        throw std::invalid_argument("cat amplitude must be >= 0");
    }
    const FockVector c = coherent(alpha, cutoff, tol);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
    for (int n = 0; n < cutoff; n += 2) {
        v[n] = 2.0 * c[n];
    }
    return v;
}

}  // namespace

FockVector logical_zero(double alpha, int cutoff, const Tolerances& tol) {
    return FockVector(even_cat(alpha, cutoff, tol)).normalized();
}

FockVector logical_one(double alpha, int cutoff, const Tolerances& tol) {
    Eigen::VectorXcd v = even_cat(alpha, cutoff, tol);
    // |ia> + |-ia> = sum_n i^n (1 + (-1)^n) <n|a> |n>
    for (int n = 2; n < cutoff; n += 4) {
        v[n] = -v[n];
    }
    return FockVector(std::move(v)).normalized();
}

Eigen::MatrixXcd LogicalFrame::basis() const {
    Eigen::MatrixXcd e(cutoff(), 2);
    e.col(0) = zero.amps();
    e.col(1) = one.amps();
    return e;
}

DensityMatrix LogicalFrame::embed(const Eigen::Matrix2cd& block) const {
    const Eigen::MatrixXcd e = basis();
    return DensityMatrix(e * block * e.adjoint());
}

FockVector LogicalFrame::embed(const Eigen::Vector2cd& coeffs) const {
    return FockVector(basis() * coeffs);
}

double LogicalFrame::block_trace(const Eigen::Matrix2cd& block) const {
    return (block * gram).trace().real();
}

LogicalFrame make_frame(double alpha, int cutoff, const Tolerances& tol) {
    LogicalFrame f;
    f.alpha = alpha;
    f.zero = logical_zero(alpha, cutoff, tol);
    f.one = logical_one(alpha, cutoff, tol);
    const Eigen::MatrixXcd e = f.basis();
    f.gram = e.adjoint() * e;
    return f;
}

std::string_view to_string(PauliLabel label) {
    switch (label) {
        case PauliLabel::Zero:
            return "0";
        case PauliLabel::One:
            return "1";
        case PauliLabel::Plus:
            return "+";
        case PauliLabel::Minus:
            return "-";
        case PauliLabel::PlusI:
            return "+i";
        case PauliLabel::MinusI:
            return "-i";
    }
    return "?";
}

PauliLabel parse_pauli_label(std::string_view text) {
    for (PauliLabel l : kAllPauliLabels) {
        if (to_string(l) == text) {
            return l;
        }
    }
    if (text == "plus") return PauliLabel::Plus;
    if (text == "minus") return PauliLabel::Minus;
    throw std::invalid_argument("unknown logical Pauli label '" + std::string(text) + "'");
}

Eigen::Matrix2cd LogicalCoeffState::block() const {
    const Eigen::Vector2cd c = coeffs();
    return c * c.adjoint();
}

LogicalCoeffState make_logical_state(const LogicalFrame& frame, cplx mu, cplx nu) {
    const Eigen::Vector2cd c(mu, nu);
    const double n2 = (c.adjoint() * frame.gram * c)(0, 0).real();
    if (!(n2 > 0.0)) {
        throw ZeroProbability("logical state has zero norm");
    }
    const double s = 1.0 / std::sqrt(n2);
    return {frame, mu * s, nu * s};
}

LogicalCoeffState pauli_eigenstate(PauliLabel label, const LogicalFrame& frame) {
    const cplx i(0.0, 1.0);
    switch (label) {
        case PauliLabel::Zero:
            return make_logical_state(frame, 1.0, 0.0);
        case PauliLabel::One:
            return make_logical_state(frame, 0.0, 1.0);
        case PauliLabel::Plus:
            return make_logical_state(frame, 1.0, 1.0);
        case PauliLabel::Minus:
            return make_logical_state(frame, 1.0, -1.0);
        case PauliLabel::PlusI:
            return make_logical_state(frame, 1.0, i);
        case PauliLabel::MinusI:
            return make_logical_state(frame, 1.0, -i);
    }
    throw std::invalid_argument("bad PauliLabel");
}

LogicalCoeffState pauli_eigenstate(PauliLabel label, double alpha, int cutoff) {
    return pauli_eigenstate(label, make_frame(alpha, cutoff));
}

BellState bell_state(double alpha_in, double alpha_out, int cutoff, const Tolerances& tol) {
    if (alpha_in < 0.0 || alpha_in > alpha_out) {
        throw std::invalid_argument("bell_state: need 0 <= alpha_in <= alpha_out");
    }
    BellState b;
    b.frame_in = make_frame(alpha_in, cutoff, tol);
    b.frame_out = make_frame(alpha_out, cutoff, tol);
    Eigen::MatrixXcd amps = b.frame_in.zero.amps() * b.frame_out.zero.amps().transpose() +
                            b.frame_in.one.amps() * b.frame_out.one.amps().transpose();
    b.scale = amps.norm();
    b.amps = amps / b.scale;
    return b;
}

std::string_view to_string(Pauli p) {
    switch (p) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::Z:
            return "Z";
        case Pauli::XZ:
            return "XZ";
    }
    return "?";
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    if (has_z(p)) {
        m(1, 1) = -1.0;
    }
    if (has_x(p)) {
        m.row(0).swap(m.row(1));
    }
    return m;
}

Eigen::Matrix2cd apply_logical_pauli(const Eigen::Matrix2cd& block, Pauli p) {
    const Eigen::Matrix2cd m = pauli_matrix(p);
    return m * block * m.adjoint();
}

LogicalCoeffState apply_logical_pauli(const LogicalCoeffState& state, Pauli p) {
    const Eigen::Vector2cd c = pauli_matrix(p) * state.coeffs();
    return make_logical_state(state.frame, c[0], c[1]);
}

}  // namespace catlab

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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "catlab/cat_code.hpp"

namespace catlab {
namespace {

double gram_formula(double alpha) {
    const double a2 = alpha * alpha;
    return std::cos(a2) / std::cosh(a2);
}

TEST(LogicalStates, VacuumLimit) {
    const FockVector z = logical_zero(0.0, 20);
    EXPECT_NEAR(std::abs(z[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(z.norm(), 1.0, 1e-15);
}

TEST(LogicalStates, EvenSupportAndSigns) {
    const double alpha = 2.3;
    const int d = cutoff_for_alpha(alpha);
    const FockVector z = logical_zero(alpha, d);
    const FockVector o = logical_one(alpha, d);
    for (int n = 1; n < d; n += 2) {
        EXPECT_EQ(z[n], cplx(0.0));
        EXPECT_EQ(o[n], cplx(0.0));
    }
    // Same magnitudes up to the normalization ratio, signs alternate with n/2.
    const double ratio = std::abs(o[0] / z[0]);
    for (int n = 0; n < 30; n += 2) {
        const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(std::abs(o[n] - sign * ratio * z[n]), 0.0, 1e-14);
    }
}

TEST(LogicalStates, GramMatchesClosedForm) {
    for (double alpha = 0.1; alpha <= 5.0001; alpha += 0.1) {
        const LogicalFrame f = make_frame(alpha, cutoff_for_alpha(alpha));
        EXPECT_NEAR(f.gram(0, 1).real(), gram_formula(alpha), 1e-9) << alpha;
        EXPECT_NEAR(f.gram(0, 1).imag(), 0.0, 1e-12);
        EXPECT_NEAR(f.gram(0, 0).real(), 1.0, 1e-12);
        EXPECT_NEAR(f.gram(1, 1).real(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(f.gram(1, 0) - std::conj(f.gram(0, 1))), 0.0, 1e-15);
    }
    EXPECT_NEAR(make_frame(2.0, 45).gram(0, 1).real(), -0.02394, 5e-6);
    EXPECT_LT(std::abs(make_frame(4.0, 86).gram(0, 1)), 2.2e-7);
}

TEST(PauliStates, ModFourSupport) {
    const double alpha = 2.0;
    const int d = cutoff_for_alpha(alpha);
    const FockVector plus = pauli_eigenstate(PauliLabel::Plus, alpha, d).embed();
    const FockVector minus = pauli_eigenstate(PauliLabel::Minus, alpha, d).embed();
    for (int n = 0; n < d; ++n) {
        if (n % 4 != 0) {
            EXPECT_EQ(std::abs(plus[n]), 0.0) << n;
        }
        if (n % 4 != 2) {
            EXPECT_EQ(std::abs(minus[n]), 0.0) << n;
        }
    }
    EXPECT_NEAR(plus.norm(), 1.0, 1e-12);
    EXPECT_NEAR(minus.norm(), 1.0, 1e-12);
}

TEST(PauliStates, AllLabelsNormalized) {
    const LogicalFrame f = make_frame(1.1, cutoff_for_alpha(1.1));
    for (PauliLabel label : kAllPauliLabels) {
        const LogicalCoeffState s = pauli_eigenstate(label, f);
        EXPECT_NEAR(s.embed().norm(), 1.0, 1e-12) << to_string(label);
        EXPECT_NEAR(f.block_trace(s.block()), 1.0, 1e-12) << to_string(label);
        EXPECT_EQ(parse_pauli_label(to_string(label)), label);
    }
    EXPECT_THROW(parse_pauli_label("y"), std::invalid_argument);
}

TEST(PauliStates, YPairOverlap) {
    const double alpha = 2.5;
    const LogicalFrame f = make_frame(alpha, cutoff_for_alpha(alpha));
    const FockVector p = pauli_eigenstate(PauliLabel::PlusI, f).embed();
    const FockVector m = pauli_eigenstate(PauliLabel::MinusI, f).embed();
    const double g = gram_formula(alpha);
    // (<0| - i<1|)(|0> - i|1>) = -2 i g with g real; both norms are sqrt 2.
    EXPECT_NEAR(std::abs(p.inner(m)), std::abs(g), 1e-10);
}

TEST(PauliStates, RotationIsLogicalX) {
    const double alpha = 1.7;
    const LogicalFrame f = make_frame(alpha, cutoff_for_alpha(alpha));
    const FockVector rz = rotate(f.zero, std::numbers::pi / 2.0);
    EXPECT_LT((rz.amps() - f.one.amps()).norm(), 1e-12);

    const LogicalCoeffState s = make_logical_state(f, cplx(0.8, 0.1), cplx(-0.3, 0.5));
    const LogicalCoeffState x = apply_logical_pauli(s, Pauli::X);
    EXPECT_NEAR(std::abs(x.mu - s.nu), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(x.nu - s.mu), 0.0, 1e-15);
    const FockVector via_rotation = rotate(s.embed(), std::numbers::pi / 2.0);
    EXPECT_LT((via_rotation.amps() - x.embed().amps()).norm(), 1e-10);
}

TEST(Paulis, CoefficientMaps) {
    const Eigen::Matrix2cd x = pauli_matrix(Pauli::X);
    const Eigen::Matrix2cd z = pauli_matrix(Pauli::Z);
    EXPECT_EQ(x * Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0));
    const Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    EXPECT_LT((z * plus - Eigen::Vector2cd(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0))).norm(),
              1e-15);
    Eigen::Matrix2cd b;
    b << 0.3, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.7;
    EXPECT_EQ(apply_logical_pauli(apply_logical_pauli(b, Pauli::X), Pauli::X), b);
    EXPECT_EQ(pauli_matrix(Pauli::XZ), x * z);
    EXPECT_EQ(compose(Pauli::X, Pauli::Z), Pauli::XZ);
    EXPECT_EQ(compose(Pauli::XZ, Pauli::Z), Pauli::X);
}

TEST(Bell, VacuumLimit) {
    const BellState b = bell_state(0.0, 0.0, 20);
    EXPECT_NEAR(std::abs(b.amps(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(b.amps.norm(), 1.0, 1e-14);
}

TEST(Bell, NormIncludesCrossTerms) {
    for (auto [ain, aout] : {std::pair{4.0, 4.0}, std::pair{0.8, 1.0}, std::pair{1.2, 1.5}}) {
        const BellState b = bell_state(ain, aout, cutoff_for_alpha(aout));
        const double expected = 2.0 + 2.0 * gram_formula(ain) * gram_formula(aout);
        EXPECT_NEAR(b.scale * b.scale, expected, 1e-9);
        EXPECT_NEAR(b.amps.norm(), 1.0, 1e-12);
    }
    EXPECT_LT(std::abs(bell_state(4.0, 4.0, 86).scale * bell_state(4.0, 4.0, 86).scale - 2.0),
              1e-6);
}

TEST(Bell, ReducedParityIsEven) {
    const BellState b = bell_state(1.3, 1.5, cutoff_for_alpha(1.5));
    double parity1 = 0.0;
    double parity2 = 0.0;
    for (int m1 = 0; m1 < b.amps.rows(); ++m1) {
        for (int m2 = 0; m2 < b.amps.cols(); ++m2) {
            const double w = std::norm(b.amps(m1, m2));
            parity1 += (m1 % 2 == 0 ? w : -w);
            parity2 += (m2 % 2 == 0 ? w : -w);
        }
    }
    EXPECT_NEAR(parity1, 1.0, 1e-12);
    EXPECT_NEAR(parity2, 1.0, 1e-12);
}

TEST(Bell, RejectsLargerInputAmplitude) {
    EXPECT_THROW(bell_state(2.0, 1.0, 45), std::invalid_argument);
}

}  // namespace
}  // namespace catlab

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

#include "catlab/errors.hpp"
#include "catlab/loss.hpp"
#include "catlab/metrics.hpp"

namespace catlab {
namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

TEST(Helstrom, Limits) {
    const DensityMatrix a = DensityMatrix::pure(coherent(0.5, 25));
    EXPECT_NEAR(helstrom_perr(a, a), 0.5, 1e-12);
    const DensityMatrix v0 = DensityMatrix::pure(FockVector::basis(0, 5));
    const DensityMatrix v1 = DensityMatrix::pure(FockVector::basis(1, 5));
    EXPECT_NEAR(helstrom_perr(v0, v1), 0.0, 1e-15);
}

TEST(Helstrom, PureStatesWithOverlap) {
    for (auto [b1, b2] : {std::pair<cplx, cplx>{0.3, -0.4}, {cplx(1.0, 0.5), cplx(0.2, 0.1)}}) {
        const int d = 30;
        const DensityMatrix r1 = DensityMatrix::pure(coherent(b1, d));
        const DensityMatrix r2 = DensityMatrix::pure(coherent(b2, d));
        const double c2 = std::norm(coherent_overlap(b1, b2));
        const double expected = 0.5 * (1.0 - std::sqrt(1.0 - c2));
        EXPECT_NEAR(helstrom_perr(r1, r2), expected, 1e-12);
        EXPECT_NEAR(helstrom_perr(r1, r2), helstrom_perr(r2, r1), 1e-14);
    }
}

TEST(Helstrom, DimensionMismatch) {
    EXPECT_THROW(helstrom_perr(DensityMatrix::pure(FockVector::basis(0, 4)),
                               DensityMatrix::pure(FockVector::basis(0, 5))),
                 DimensionMismatch);
}

TEST(Helstrom, LossDoesNotIncreaseDistinguishability) {
    const double alpha = 1.4;
    const int d = cutoff_for_alpha(alpha);
    const DensityMatrix p = pauli_eigenstate(PauliLabel::Plus, alpha, d).density();
    const DensityMatrix m = pauli_eigenstate(PauliLabel::Minus, alpha, d).density();
    double prev = trace_norm(p.mat() - m.mat());
    for (double g : {0.01, 0.05, 0.2, 0.5}) {
        const double now = trace_norm(apply_loss(p, g).mat() - apply_loss(m, g).mat());
        EXPECT_LE(now, prev + 1e-9) << g;
        prev = now;
    }
}

TEST(AvgPerr, IdentityChannel) {
    auto identity = [](const LogicalCoeffState& s) { return s.density(); };
    const PerrReport large = avg_perr(identity, make_frame(4.0, cutoff_for_alpha(4.0)));
    EXPECT_LT(large.p_avg, 1e-6);
    // Z and Y pairs overlap by |g| = cos(a^2)/cosh(a^2); the X pair is orthogonal.
    const double a2 = 0.05 * 0.05;
    const double g = std::cos(a2) / std::cosh(a2);
    const double pair = 0.5 * (1.0 - std::sqrt(1.0 - g * g));
    const PerrReport small = avg_perr(identity, make_frame(0.05, cutoff_for_alpha(0.05)));
    EXPECT_NEAR(small.p_z, pair, 1e-9);
    EXPECT_NEAR(small.p_y, pair, 1e-9);
    EXPECT_NEAR(small.p_avg, 1.0 / 3.0, 2e-3);
    EXPECT_LT(small.p_x, 1e-10);
    EXPECT_NEAR(small.p_avg, (small.p_x + small.p_y + small.p_z) / 3.0, 0.0);
}

TEST(AvgPerr, FullyDepolarizing) {
    const LogicalFrame f = make_frame(2.0, cutoff_for_alpha(2.0));
    const DensityMatrix fixed = pauli_eigenstate(PauliLabel::Zero, f).density();
    const PerrReport r = avg_perr([&](const LogicalCoeffState&) { return fixed; }, f);
    EXPECT_NEAR(r.p_avg, 0.5, 1e-12);
}

TEST(Fidelity, Basics) {
    const FockVector psi = coherent(cplx(0.7, -0.2), 25);
    EXPECT_NEAR(fidelity(psi, DensityMatrix::pure(psi)), 1.0, 1e-12);
    EXPECT_EQ(fidelity(FockVector::basis(1, 5), DensityMatrix::pure(FockVector::basis(0, 5))),
              0.0);
    // Lossy coherent state is still pure: |<b|b sqrt(1-G)>|^2.
    const cplx beta(1.5, 0.5);
    const double g = 0.3;
    const int d = choose_cutoff(std::abs(beta));
    const double f = fidelity(coherent(beta, d), apply_loss(DensityMatrix::pure(coherent(beta, d)), g));
    EXPECT_NEAR(f, std::norm(coherent_overlap(beta, beta * std::sqrt(1.0 - g))), 1e-10);
}

TEST(Wigner, ParityAtOrigin) {
    const double alpha = 1.6;
    const int d = cutoff_for_alpha(alpha);
    EXPECT_NEAR(wigner_at(DensityMatrix::pure(FockVector::basis(0, 10)), 0.0), kTwoOverPi, 1e-15);
    EXPECT_NEAR(wigner_at(DensityMatrix::pure(logical_zero(alpha, d)), 0.0), kTwoOverPi, 1e-12);
    const FockVector odd = annihilate(logical_zero(alpha, d)).normalized();
    EXPECT_NEAR(wigner_at(DensityMatrix::pure(odd), 0.0), -kTwoOverPi, 1e-12);
}

TEST(Wigner, CoherentGaussian) {
    const cplx beta(0.8, -0.6);
    const DensityMatrix rho = DensityMatrix::pure(coherent(beta, 40));
    for (cplx pt : {cplx(0.0, 0.0), cplx(0.5, 0.2), cplx(-1.0, 1.3)}) {
        const double expected = kTwoOverPi * std::exp(-2.0 * std::norm(pt - beta));
        EXPECT_NEAR(wigner_at(rho, pt), expected, 1e-12) << pt;
    }
}

TEST(Wigner, MatchesDisplacedParity) {
    // (2/pi) sum_n (-1)^n |<n|D(-b)|psi>|^2, with D(-b)|psi> built from the
    // expm of the displacement generator on a larger space.
    const int d = 30;
    const int big = 70;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(big);
    amps.head(d) = pauli_eigenstate(PauliLabel::PlusI, 1.2, d).embed().amps();
    const Eigen::MatrixXcd a = annihilation_operator(big).mat;
    for (cplx b : {cplx(0.4, -0.3), cplx(-1.1, 0.2)}) {
        const Eigen::MatrixXcd gen = -b * a.adjoint() + std::conj(b) * a;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(gen);
        const Eigen::MatrixXcd disp = es.eigenvectors() *
                                      es.eigenvalues().array().exp().matrix().asDiagonal() *
                                      es.eigenvectors().inverse();
        const Eigen::VectorXcd shifted = disp * amps;
        double parity = 0.0;
        for (int n = 0; n < 40; ++n) {
            parity += (n % 2 == 0 ? 1.0 : -1.0) * std::norm(shifted[n]);
        }
        const DensityMatrix rho = pauli_eigenstate(PauliLabel::PlusI, 1.2, d).density();
        EXPECT_NEAR(wigner_at(rho, b), kTwoOverPi * parity, 1e-8) << b;
    }
}

TEST(Wigner, GridIntegratesToTrace) {
    const double alpha = 2.0;
    const int d = cutoff_for_alpha(alpha);
    const DensityMatrix rho = pauli_eigenstate(PauliLabel::Plus, alpha, d).density();
    const WignerGrid w = wigner(rho, GridSpec::symmetric(6.0, 121));
    EXPECT_NEAR(w.integral(), 1.0, 1e-3);
    EXPECT_LT(w.min(), 0.0);
    EXPECT_EQ(w.x.size(), 121u);
    EXPECT_NEAR(w.values(60, 60), wigner_at(rho, 0.0), 1e-14);
}

}  // namespace
}  // namespace catlab

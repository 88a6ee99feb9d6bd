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

#include "catlab/cavity.hpp"
#include "catlab/errors.hpp"

namespace catlab {
namespace {

constexpr cplx kI(0.0, 1.0);

TEST(Reflection, ResonantAnchors) {
    CavityParams p;
    p.kappa = 1.0;
    p.kappa_r = 1.0;
    p.delta = 0.0;
    p.gamma_at = 1.0;
    p.g = 100.0;  // g^2 / (kappa gamma) = 1e4
    const ReflectionPair r = reflection(p);
    EXPECT_EQ(r.r_down, cplx(-1.0));
    const double expected = 1.0 - 2.0 * p.kappa * p.gamma_at / (p.kappa * p.gamma_at + p.g * p.g);
    EXPECT_NEAR(std::abs(r.r_up - expected), 0.0, 1e-15);
    EXPECT_NEAR(r.r_up.real(), 0.9998, 1e-6);
    EXPECT_NEAR(r.relative_phase(), std::numbers::pi, 1e-3);
}

TEST(Reflection, DetunedQuarterTurn) {
    CavityParams p;
    p.kappa = p.kappa_r = p.delta = 1.0;
    p.gamma_at = 1.0;
    p.g = 1000.0;
    const ReflectionPair r = reflection(p);
    EXPECT_NEAR(std::abs(r.r_down - kI), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.r_up - 1.0), 0.0, 1e-5);
    EXPECT_NEAR(r.relative_phase(), std::numbers::pi / 2.0, 1e-3);
}

TEST(Reflection, MagnitudeBoundAndValidation) {
    for (double delta : {-2.0, 0.0, 0.3, 1.0, 5.0}) {
        for (double g : {0.0, 1.0, 30.0}) {
            CavityParams p{0.7, 1.0, delta, 0.2, g};
            const ReflectionPair r = reflection(p);
            EXPECT_LE(std::abs(r.r_up), 1.0 + 1e-12);
            EXPECT_LE(std::abs(r.r_down), 1.0 + 1e-12);
        }
    }
    CavityParams bad;
    bad.kappa_r = 2.0;
    EXPECT_THROW(reflection(bad), std::invalid_argument);
}

TEST(ReflectCat, CoherentInputEntanglesWithAtom) {
    const double alpha = 1.3;
    const double h = 1.0 / std::sqrt(2.0);
    const auto field = CoherentSuperposition::product({alpha});
    const AtomFieldState s = reflect_cat(field, 0, h, h, {1.0, -1.0});
    ASSERT_EQ(s.up.terms.size(), 1u);
    EXPECT_EQ(s.up.terms[0].amps[0], cplx(alpha));
    EXPECT_EQ(s.down.terms[0].amps[0], cplx(-alpha));
    EXPECT_NEAR(std::abs(s.up.terms[0].coeff - h), 0.0, 1e-15);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
}

TEST(ReflectCat, EvenCatWithQuarterTurn) {
    const double alpha = 1.8;
    const int d = cutoff_for_alpha(alpha);
    const double h = 1.0 / std::sqrt(2.0);
    CoherentSuperposition cat = CoherentSuperposition::product({alpha}).plus(
        CoherentSuperposition::product({-alpha}));
    cat = cat.scaled(1.0 / std::sqrt(cat.norm_squared()));
    const AtomFieldState s = reflect_cat(cat, 0, h, h, {1.0, kI});
    const FockVector up = s.up.to_fock(d).normalized();
    const FockVector down = s.down.to_fock(d).normalized();
    EXPECT_NEAR(std::abs(up.inner(logical_zero(alpha, d))), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(down.inner(logical_one(alpha, d))), 1.0, 1e-12);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(ReflectCat, SingleAtomStateIsPhaseMap) {
    const auto field = CoherentSuperposition::product({cplx(0.9, 0.4)});
    const AtomFieldState s = reflect_cat(field, 0, 1.0, 0.0, {kI, -1.0});
    EXPECT_EQ(s.down.norm_squared(), 0.0);
    EXPECT_NEAR(s.up.norm_squared(), 1.0, 1e-14);
}

TEST(ReflectCat, NonIdealNeedsOptIn) {
    const auto field = CoherentSuperposition::product({1.0});
    const ReflectionPair lossy{0.9, -1.0};
    EXPECT_THROW(reflect_cat(field, 0, 1.0, 0.0, lossy), NonIdealReflection);
    ReflectOptions opts;
    opts.allow_nonideal = true;
    EXPECT_NO_THROW(reflect_cat(field, 0, 1.0, 0.0, lossy, opts));
    EXPECT_THROW(reflect_cat(field, 1, 1.0, 0.0, {1.0, -1.0}), std::invalid_argument);
}

TEST(ProjectAtom, ZeroProbabilityThrows) {
    const auto field = CoherentSuperposition::product({0.5});
    const AtomFieldState s{field, field.scaled(-1.0)};
    EXPECT_THROW(project_atom_plus(s), ZeroProbability);
}

TEST(CavityBell, IdealCoefficientsGiveLogicalBell) {
    for (double alpha : {0.0, 1.0, 2.0}) {
        const int d = cutoff_for_alpha(alpha);
        const CavityBell b = bell_from_cavity(alpha, ReflectionPair{1.0, kI}, d);
        EXPECT_GE(bell_fidelity(b, alpha, d), 1.0 - 1e-9) << alpha;
        EXPECT_GT(b.success_probability, 0.0);
        EXPECT_LE(b.overall_probability, b.success_probability + 1e-15);
    }
}

TEST(CavityBell, EvenParityOnBothModes) {
    const double alpha = 1.4;
    const int d = cutoff_for_alpha(alpha);
    const CavityBell b = bell_from_cavity(alpha, ReflectionPair{1.0, kI}, d);
    double p1 = 0.0;
    double p2 = 0.0;
    for (int m1 = 0; m1 < d; ++m1) {
        for (int m2 = 0; m2 < d; ++m2) {
            const double w = std::norm(b.amps(m1, m2));
            p1 += m1 % 2 == 0 ? w : -w;
            p2 += m2 % 2 == 0 ? w : -w;
        }
    }
    EXPECT_NEAR(p1, 1.0, 1e-12);
    EXPECT_NEAR(p2, 1.0, 1e-12);
}

TEST(CavityBell, PhaseErrorDegradesSmoothly) {
    const double alpha = 2.0;
    const int d = cutoff_for_alpha(alpha);
    double prev = 1.0 + 1e-12;
    for (int k = 0; k <= 20; ++k) {
        const double eps = 0.005 * k;
        const ReflectionPair pair{1.0, std::polar(1.0, std::numbers::pi / 2.0 + eps)};
        const double f = bell_fidelity(bell_from_cavity(alpha, pair, d), alpha, d);
        EXPECT_LT(f, prev) << eps;
        EXPECT_GT(f, prev - 0.05) << eps;
        prev = f;
    }
    const ReflectionPair off{1.0, std::polar(1.0, std::numbers::pi / 2.0 + 0.05)};
    EXPECT_LT(bell_fidelity(bell_from_cavity(alpha, off, d), alpha, d), 1.0 - 1e-6);
}

TEST(CavityBell, FromDetunedCavity) {
    CavityParams p;
    p.kappa = p.kappa_r = p.delta = 1.0;
    p.gamma_at = 1.0;
    p.g = 1000.0;
    const double alpha = 2.0;
    const int d = cutoff_for_alpha(alpha);
    const CavityBell b = bell_from_cavity(alpha, p, d);
    EXPECT_GT(bell_fidelity(b, alpha, d), 0.999);
}

}  // namespace
}  // namespace catlab

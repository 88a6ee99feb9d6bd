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

// Closed-form outcome maps of the teleportation circuit.
//
// Everything here is written for unnormalized cats, |0_L> = |a> + |-a> and
// |1_L> = |ia> + |-ia>, on the input, on both Bell modes and on the output.
// A formula maps input coefficients (mu, nu) to the output coefficients
// (c0, c1) of a PNRD outcome (n1, n2). For a single loss the input is
// a (mu|0_L> + nu|1_L>) with the cats at the damped amplitude.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace catlab {

enum class OutcomeClass { BothNonzero, OneZero, BothZero, Any };

struct BranchFormula {
    int loss_order = 0;
    OutcomeClass outcome_class = OutcomeClass::Any;
    std::complex<double> prefactor = 0.0;
    Eigen::Matrix2cd shape = Eigen::Matrix2cd::Zero();
    /// Set when the branch leaves no trace in the detected photon numbers.
    bool undetectable = false;

    Eigen::Matrix2cd map() const { return prefactor * shape; }
    /// Exact zero from the selection rules (no rounding involved).
    bool vanishes() const { return prefactor == 0.0; }
};

/// n1, n2 > 0. Nonzero only for even totals with n1 = n2 (mod 4); the
/// coefficients come out swapped, with a Z when both counts are odd.
BranchFormula lossless_both_nonzero(int n1, int n2, double alpha);

/// Outcome (n, 0) or (0, n), n > 0. Vanishes for odd n. For n = 2 (mod 4)
/// the map is diag(1, -1); for n = 0 (mod 4) it is [[1, s], [s, 1]].
BranchFormula lossless_one_zero(int n, double alpha);

/// s = (-1)^(n/4) / sqrt(2)^(n-2) for n = 0 (mod 4), else 0.
double weak_x_admixture(int n);

/// (0, 0): 4 e^{-alpha^2} [[1, 1], [1, 1]], a projection onto |+_L>.
BranchFormula lossless_both_zero(double alpha);

/// Any lossless outcome.
BranchFormula lossless_branch(int n1, int n2, double alpha);

/// Outcome after one photon was lost; alpha_gamma is the damped amplitude.
/// Nonzero only for odd totals.
BranchFormula single_loss_branch(int n1, int n2, double alpha_gamma);

/// Z factor of the swapped single-loss map, (i/2)((-1)^n1 + (-1)^n2 + 2 i^(n1+n2)).
std::complex<double> single_loss_z_factor(int n1, int n2);
/// The same factor for odd totals, (-1)^((n1+n2+1)/2).
double single_loss_z_factor_odd(int n1, int n2);

/// Off-diagonal term t of the single-loss (n, 0) map for odd n:
/// n = 1 (mod 4): (c0, c1) = (mu - t nu, -nu + t mu);
/// n = 3 (mod 4): (c0, c1) = (mu + t nu,  nu + t mu);
/// with t = e^{i pi (n -+ 1)/4} / sqrt(2)^(n-1).
double single_loss_admixture(int n);
/// The same term with a sqrt(2)^(n+1) denominator, as it is sometimes quoted.
/// It is half of single_loss_admixture and does not match the circuit.
double single_loss_admixture_quoted(int n);

/// Two lost photons: diag(1, -1), not visible in the photon counts.
BranchFormula double_loss_map();

/// Dispatch on loss order 0, 1 or 2.
BranchFormula oracle_map(int loss_order, int n1, int n2, double alpha);

}  // namespace catlab

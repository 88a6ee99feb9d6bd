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

// Pure-loss channel in Kraus form and its segmentation.

#pragma once

#include <vector>

#include "catlab/fock.hpp"

namespace catlab {

/// Gamma_dB = -10 log10(1 - Gamma)
double db_to_fraction(double db);
double fraction_to_db(double gamma);

/// Fraction of photons lost, Gamma in [0, 1).
struct LossSpec {
    double fraction = 0.0;

    static LossSpec from_db(double db) { return {db_to_fraction(db)}; }
    double db() const { return fraction_to_db(fraction); }
};

/// Total loss split into N + 1 equal segments with N correction steps.
struct SegmentPlan {
    LossSpec total;
    int steps = 0;
    LossSpec segment;
};

/// gamma = 1 - (1 - Gamma)^(1/(N+1))
SegmentPlan plan_segments(LossSpec total, int steps);

/// Number of steps that puts `segment_db` of loss between corrections.
/// Throws ConfigError unless total_db / segment_db is (close to) an integer.
int steps_for_segment_db(double total_db, double segment_db);

/// Dense matrix of K_l = sqrt(G/(1-G))^l a^l/sqrt(l!) sqrt(1-G)^n.
ModeOperator kraus(int l, double gamma, int cutoff);

/// The nonzero diagonal of K_l: K_l|n> = kraus_coefficient(l, n) |n - l>.
double kraus_coefficient(int l, int n, double gamma);

/// K_l applied to a pure vector.
FockVector apply_kraus(int l, double gamma, const FockVector& v);

/// Kraus coefficients for one (gamma, D), l = 0..D-1.
class KrausSet {
   public:
    KrausSet(double gamma, int cutoff);

    double gamma() const { return gamma_; }
    int cutoff() const { return cutoff_; }
    /// coeff(l)[n] multiplies |n> -> |n-l>; entries with n < l are zero.
    const Eigen::VectorXd& coeff(int l) const { return coeffs_[l]; }
    Eigen::VectorXcd apply(int l, const Eigen::VectorXcd& v) const;

   private:
    double gamma_;
    int cutoff_;
    std::vector<Eigen::VectorXd> coeffs_;
};

/// L_Gamma(rho) = sum_l K_l rho K_l^dag, summed until the untouched weight
/// drops below tol.kraus_tail. Throws CutoffTooSmall if rho has weight on the
/// top two Fock levels above tol.leak_tol, NonConvergentTail if the Kraus sum
/// fails to exhaust the trace.
DensityMatrix apply_loss(const DensityMatrix& rho, double gamma,
                         const Tolerances& tol = default_tolerances());

/// Single Kraus branch K_l rho K_l^dag.
DensityMatrix apply_loss_branch(const DensityMatrix& rho, double gamma, int l);

}  // namespace catlab

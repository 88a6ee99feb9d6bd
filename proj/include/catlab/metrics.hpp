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

#pragma once

#include <functional>
#include <vector>

#include "catlab/cat_code.hpp"

namespace catlab {

/// Sum of |eigenvalues| of a Hermitian matrix, ignoring |lambda| < eig_floor.
double trace_norm(const Eigen::MatrixXcd& herm, double eig_floor = default_tolerances().eig_floor);

/// Helstrom minimum error probability 1/2 - ||rho0 - rho1||_1 / 4, in [0, 1/2].
double helstrom_perr(const DensityMatrix& rho0, const DensityMatrix& rho1,
                     const Tolerances& tol = default_tolerances());

struct PerrReport {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;
    double p_avg = 0.0;
};

PerrReport make_perr_report(double p_x, double p_y, double p_z);

using LogicalChannel = std::function<DensityMatrix(const LogicalCoeffState&)>;

/// Runs the channel on the three pairs of Pauli eigenstates of `frame`.
PerrReport avg_perr(const LogicalChannel& channel, const LogicalFrame& frame,
                    const Tolerances& tol = default_tolerances());

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity(const FockVector& psi, const DensityMatrix& rho);

/// Square grid of phase-space points beta = x + i p.
struct GridSpec {
    double x_min = -5.0;
    double x_max = 5.0;
    int nx = 101;
    double p_min = -5.0;
    double p_max = 5.0;
    int np = 101;

    static GridSpec symmetric(double half_width, int points) {
        return {-half_width, half_width, points, -half_width, half_width, points};
    }
    std::vector<double> xs() const;
    std::vector<double> ps() const;
};

/// W(x, p), stored values(ix, ip).
struct WignerGrid {
    std::vector<double> x;
    std::vector<double> p;
    Eigen::MatrixXd values;

    double min() const { return values.minCoeff(); }
    double max() const { return values.maxCoeff(); }
    /// Trapezoidal integral over dx dp.
    double integral() const;
};

/// W(beta) = (2/pi) Tr[rho D(beta) Pi D(beta)^dag] with Pi the photon-number
/// parity and beta = x + i p. Integrates to Tr(rho) over dx dp; the vacuum
/// gives 2/pi at the origin.
WignerGrid wigner(const DensityMatrix& rho, const GridSpec& grid);

/// Single-point evaluation of the same function.
double wigner_at(const DensityMatrix& rho, cplx beta);

}  // namespace catlab

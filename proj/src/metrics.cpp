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

#include "catlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catlab/errors.hpp"

namespace catlab {

double trace_norm(const Eigen::MatrixXcd& herm, double eig_floor) {
    const Eigen::MatrixXcd h = 0.5 * (herm + herm.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = std::abs(es.eigenvalues()[i]);
        if (lam >= eig_floor) {
            s += lam;
        }
    }
    return s;
}

double helstrom_perr(const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol) {
    if (rho0.cutoff() != rho1.cutoff()) {
        throw DimensionMismatch("helstrom_perr: cutoff mismatch");
    }
    const double tn = trace_norm(rho0.mat() - rho1.mat(), tol.eig_floor);
    return std::clamp(0.5 - 0.25 * tn, 0.0, 0.5);
}

PerrReport make_perr_report(double p_x, double p_y, double p_z) {
    return {p_x, p_y, p_z, (p_x + p_y + p_z) / 3.0};
}

PerrReport avg_perr(const LogicalChannel& channel, const LogicalFrame& frame,
                    const Tolerances& tol) {
    auto pair_error = [&](PauliLabel a, PauliLabel b) {
        const DensityMatrix ra = channel(pauli_eigenstate(a, frame));
        const DensityMatrix rb = channel(pauli_eigenstate(b, frame));
        return helstrom_perr(ra, rb, tol);
    };
    const double p_z = pair_error(PauliLabel::Zero, PauliLabel::One);
    const double p_x = pair_error(PauliLabel::Plus, PauliLabel::Minus);
    const double p_y = pair_error(PauliLabel::PlusI, PauliLabel::MinusI);
    return make_perr_report(p_x, p_y, p_z);
}

double fidelity(const FockVector& psi, const DensityMatrix& rho) {
    if (psi.cutoff() != rho.cutoff()) {
        throw DimensionMismatch("fidelity: cutoff mismatch");
    }
    const cplx f = psi.amps().dot(rho.mat() * psi.amps());
    return std::clamp(f.real(), 0.0, 1.0);
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(std::max(n, 0));
    for (int i = 0; i < n; ++i) {
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return v;
}

// Iterative Laguerre-free evaluation: wl[n] holds the Wigner function of
// |m><n| while row m is being processed.
double wigner_point(const Eigen::MatrixXcd& rho, cplx beta, std::vector<cplx>& wl) {
    const int d = static_cast<int>(rho.rows());
    wl.assign(d, 0.0);
    wl[0] = std::exp(-2.0 * std::norm(beta)) / std::numbers::pi;
    double w = rho(0, 0).real() * wl[0].real();
    for (int n = 1; n < d; ++n) {
        wl[n] = 2.0 * beta * wl[n - 1] / std::sqrt(static_cast<double>(n));
        w += 2.0 * (rho(0, n) * wl[n]).real();
    }
    const cplx cb = std::conj(beta);
    for (int m = 1; m < d; ++m) {
        const double sm = std::sqrt(static_cast<double>(m));
        cplx temp = wl[m];
        wl[m] = (2.0 * cb * temp - sm * wl[m - 1]) / sm;
        w += (rho(m, m) * wl[m]).real();
        for (int n = m + 1; n < d; ++n) {
            const cplx next = (2.0 * beta * wl[n - 1] - sm * temp) / std::sqrt(static_cast<double>(n));
            temp = wl[n];
            wl[n] = next;
            w += 2.0 * (rho(m, n) * wl[n]).real();
        }
    }
    return 2.0 * w;
}

}  // namespace

std::vector<double> GridSpec::xs() const { return linspace(x_min, x_max, nx); }
std::vector<double> GridSpec::ps() const { return linspace(p_min, p_max, np); }

double WignerGrid::integral() const {
    if (x.size() < 2 || p.size() < 2) {
        return 0.0;
    }
    const double dx = x[1] - x[0];
    const double dp = p[1] - p[0];
    double s = 0.0;
    const int nx = static_cast<int>(x.size());
    const int np = static_cast<int>(p.size());
    for (int i = 0; i < nx; ++i) {
        const double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
        for (int j = 0; j < np; ++j) {
            const double wp = (j == 0 || j == np - 1) ? 0.5 : 1.0;
            s += wx * wp * values(i, j);
        }
    }
    return s * dx * dp;
}

WignerGrid wigner(const DensityMatrix& rho, const GridSpec& grid) {
    WignerGrid g;
    g.x = grid.xs();
    g.p = grid.ps();
    g.values.resize(static_cast<int>(g.x.size()), static_cast<int>(g.p.size()));
    std::vector<cplx> scratch;
    for (int i = 0; i < static_cast<int>(g.x.size()); ++i) {
        for (int j = 0; j < static_cast<int>(g.p.size()); ++j) {
            g.values(i, j) = wigner_point(rho.mat(), cplx(g.x[i], g.p[j]), scratch);
        }
    }
    return g;
}

double wigner_at(const DensityMatrix& rho, cplx beta) {
    std::vector<cplx> scratch;
    return wigner_point(rho.mat(), beta, scratch);
}

}  // namespace catlab

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

#include "catlab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catlab/errors.hpp"

namespace catlab {

FockVector FockVector::zeros(int cutoff) {
    return FockVector(Eigen::VectorXcd::Zero(cutoff));
}

FockVector FockVector::basis(int n, int cutoff) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
    v[n] = 1.0;
    return FockVector(std::move(v));
}

double FockVector::leakage() const {
    const int d = cutoff();
    double w = 0.0;
    for (int n = std::max(0, d - 2); n < d; ++n) {
        w += std::norm(amps_[n]);
    }
    return w;
}

FockVector FockVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw ZeroProbability("cannot normalize the zero vector");
    }
    return FockVector(amps_ / nrm);
}

cplx FockVector::inner(const FockVector& other) const {
    if (other.cutoff() != cutoff()) {
        throw DimensionMismatch("FockVector::inner: cutoff mismatch");
    }
    return amps_.dot(other.amps_);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd mat) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols()) {
        throw DimensionMismatch("DensityMatrix must be square");
    }
}

DensityMatrix DensityMatrix::pure(const FockVector& psi) {
    return DensityMatrix(psi.amps() * psi.amps().adjoint());
}

DensityMatrix DensityMatrix::normalized() const {
    const double t = trace();
    if (t <= 0.0) {
        throw ZeroProbability("cannot normalize a density matrix with zero trace");
    }
    return DensityMatrix(mat_ / t);
}

void DensityMatrix::check_physical(const Tolerances& tol, double expected_trace) const {
    const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.herm_tol) {
        std::ostringstream os;
        os << "density matrix not Hermitian: deviation " << herm;
        throw NumericalError(os.str());
    }
    const Eigen::MatrixXcd h = 0.5 * (mat_ + mat_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -tol.psd_tol) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << lmin;
        throw NumericalError(os.str());
    }
    if (std::abs(trace() - expected_trace) > tol.trace_tol) {
        std::ostringstream os;
        os << "density matrix trace " << trace() << " != " << expected_trace;
        throw NumericalError(os.str());
    }
}

ModeOperator annihilation_operator(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return {std::move(a)};
}

ModeOperator rotation_operator(double theta, int cutoff) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int n = 0; n < cutoff; ++n) {
        r(n, n) = std::polar(1.0, theta * n);
    }
    return {std::move(r)};
}

int choose_cutoff(double beta_max, const CutoffMargin& margin) {
    if (beta_max < 0.0) {
        throw std::invalid_argument("choose_cutoff: beta_max must be >= 0");
    }
    return static_cast<int>(
        std::ceil(beta_max * beta_max + margin.linear * beta_max + margin.constant));
}

int cutoff_for_alpha(double alpha, const CutoffMargin& margin) {
    return choose_cutoff(std::sqrt(2.0) * std::abs(alpha), margin);
}

FockVector coherent(cplx beta, int cutoff, const Tolerances& tol) {
    Eigen::VectorXcd v(cutoff);
    v[0] = std::exp(-0.5 * std::norm(beta));
    for (int n = 1; n < cutoff; ++n) {
        v[n] = v[n - 1] * beta / std::sqrt(static_cast<double>(n));
    }
    FockVector out(std::move(v));
    // The Poisson tail beyond D is bounded by the last retained weights
    // whenever D exceeds |beta|^2, which choose_cutoff guarantees.
    const double missing = std::max(0.0, 1.0 - out.amps().squaredNorm());
    if (out.leakage() > tol.leak_tol || missing > tol.leak_tol) {
        std::ostringstream os;
        os << "cutoff " << cutoff << " too small for coherent amplitude |beta| = "
           << std::abs(beta) << " (leakage " << std::max(out.leakage(), missing) << ")";
        throw CutoffTooSmall(os.str());
    }
    return out;
}

cplx coherent_overlap(cplx beta1, cplx beta2) {
    const double phase = (std::conj(beta1) * beta2).imag();
    return std::polar(std::exp(-0.5 * std::norm(beta1 - beta2)), phase);
}

FockVector annihilate(const FockVector& v) {
    const int d = v.cutoff();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (int n = 0; n + 1 < d; ++n) {
        out[n] = std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
    }
    return FockVector(std::move(out));
}

FockVector rotate(const FockVector& v, double theta) {
    Eigen::VectorXcd out = v.amps();
    for (int n = 0; n < v.cutoff(); ++n) {
        out[n] *= std::polar(1.0, theta * n);
    }
    return FockVector(std::move(out));
}

std::pair<cplx, cplx> bs_output_coherent(cplx beta1, cplx beta2) {
    const double s = 1.0 / std::sqrt(2.0);
    return {(beta1 + beta2) * s, (-beta1 + beta2) * s};
}

BeamSplitterBlocks& BeamSplitterBlocks::shared() {
    static BeamSplitterBlocks cache;
    return cache;
}

const Eigen::MatrixXd& BeamSplitterBlocks::block(int total) {
    if (total < 0) {
        throw std::invalid_argument("BeamSplitterBlocks: negative photon number");
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (blocks_.empty()) {
        blocks_.push_back(std::make_unique<Eigen::MatrixXd>(Eigen::MatrixXd::Ones(1, 1)));
    }
    const double s = 1.0 / std::sqrt(2.0);
    while (static_cast<int>(blocks_.size()) <= total) {
        const int big_n = static_cast<int>(blocks_.size());
        const Eigen::MatrixXd& prev = *blocks_.back();
        auto next = std::make_unique<Eigen::MatrixXd>(big_n + 1, big_n + 1);
        // Both ways of adding the last input photon (through mode 1 or mode 2)
        // give block N from block N-1; averaging them with weights n/N and
        // (N-n)/N keeps every coefficient below one, so rounding errors do
        // not grow with N the way a single-path recursion does.
        auto at = [&](int r, int c) {
            return (r < 0 || c < 0 || r >= big_n || c >= big_n) ? 0.0 : prev(r, c);
        };
        const double nn = static_cast<double>(big_n);
        for (int n = 0; n <= big_n; ++n) {
            const double in1 = std::sqrt(static_cast<double>(n));
            const double in2 = std::sqrt(nn - n);
            for (int n1 = 0; n1 <= big_n; ++n1) {
                const double out1 = std::sqrt(static_cast<double>(n1));
                const double out2 = std::sqrt(nn - n1);
                (*next)(n1, n) = s / nn *
                                 (in1 * out1 * at(n1 - 1, n - 1) - in1 * out2 * at(n1, n - 1) +
                                  in2 * out1 * at(n1 - 1, n) + in2 * out2 * at(n1, n));
            }
        }
        blocks_.push_back(std::move(next));
    }
    return *blocks_[total];
}

cplx bs_fock_element(int n1, int n2, int n, int m) {
    if (n1 < 0 || n2 < 0 || n < 0 || m < 0) {
        throw std::invalid_argument("bs_fock_element: negative index");
    }
    if (n1 + n2 != n + m) {
        return 0.0;
    }
    return BeamSplitterBlocks::shared().block(n + m)(n1, n);
}

Eigen::MatrixXcd apply_beamsplitter(const Eigen::MatrixXcd& psi) {
    const int d1 = static_cast<int>(psi.rows());
    const int d2 = static_cast<int>(psi.cols());
    const int dout = d1 + d2 - 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dout, dout);
    auto& cache = BeamSplitterBlocks::shared();
    for (int total = 0; total <= d1 + d2 - 2; ++total) {
        const Eigen::MatrixXd& u = cache.block(total);
        const int lo = std::max(0, total - d2 + 1);
        const int hi = std::min(total, d1 - 1);
        for (int n1 = 0; n1 <= total; ++n1) {
            cplx acc = 0.0;
            for (int n = lo; n <= hi; ++n) {
                acc += u(n1, n) * psi(n, total - n);
            }
            out(n1, total - n1) = acc;
        }
    }
    return out;
}

}  // namespace catlab

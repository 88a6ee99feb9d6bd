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

// Single-mode truncated Fock space primitives and the two-mode 50:50
// beamsplitter in the photon-number basis.

#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catlab/tolerances.hpp"

namespace catlab {

using cplx = std::complex<double>;

/// Amplitudes of one bosonic mode on |0>, ..., |D-1>.
class FockVector {
   public:
    FockVector() = default;
    explicit FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {}

    static FockVector zeros(int cutoff);
    static FockVector basis(int n, int cutoff);

    int cutoff() const { return static_cast<int>(amps_.size()); }
    const Eigen::VectorXcd& amps() const { return amps_; }
    cplx operator[](int n) const { return amps_[n]; }

    double norm() const { return amps_.norm(); }
    /// Weight on the two highest retained photon numbers.
    double leakage() const;
    FockVector normalized() const;
    /// <this|other>
    cplx inner(const FockVector& other) const;

   private:
    Eigen::VectorXcd amps_;
};

/// D x D density operator. Conditional (unnormalized) branches are allowed;
/// `check_physical` takes the expected trace.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    explicit DensityMatrix(Eigen::MatrixXcd mat);

    static DensityMatrix pure(const FockVector& psi);

    int cutoff() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& mat() const { return mat_; }
    double trace() const { return mat_.trace().real(); }
    DensityMatrix normalized() const;

    /// Throws NumericalError if the matrix is not Hermitian, not positive
    /// semidefinite, or its trace differs from `expected_trace`.
    void check_physical(const Tolerances& tol = default_tolerances(),
                        double expected_trace = 1.0) const;

   private:
    Eigen::MatrixXcd mat_;
};

struct ModeOperator {
    Eigen::MatrixXcd mat;
};

ModeOperator annihilation_operator(int cutoff);
ModeOperator rotation_operator(double theta, int cutoff);

struct CutoffMargin {
    double linear = 6.0;
    double constant = 20.0;
};

/// Smallest cutoff that holds coherent states of magnitude <= beta_max with
/// leakage below 1e-12: ceil(beta_max^2 + c*beta_max + k).
int choose_cutoff(double beta_max, const CutoffMargin& margin = {});

/// Cutoff used for a cat code of amplitude alpha: the pipeline's largest
/// coherent component is sqrt(2)*alpha after the beamsplitter.
int cutoff_for_alpha(double alpha, const CutoffMargin& margin = {});

/// Throws CutoffTooSmall when leakage exceeds tol.leak_tol.
FockVector coherent(cplx beta, int cutoff, const Tolerances& tol = default_tolerances());

/// Analytic <beta1|beta2>.
cplx coherent_overlap(cplx beta1, cplx beta2);

FockVector annihilate(const FockVector& v);
FockVector rotate(const FockVector& v, double theta);

/// Coherent-state action of the beamsplitter:
/// |b1>|b2> -> |(b1+b2)/sqrt2>|(-b1+b2)/sqrt2>.
std::pair<cplx, cplx> bs_output_coherent(cplx beta1, cplx beta2);

/// Fock-basis beamsplitter blocks, one per total photon number N.
///
/// Block N has entry (n1, n) = <n1, N-n1| U |n, N-n>, where U maps
/// a1^dag -> (a1^dag - a2^dag)/sqrt2 and a2^dag -> (a1^dag + a2^dag)/sqrt2.
/// All entries are real. Block N is a weighted average of the two ways to
/// add one photon to block N-1; the weights are bounded by one, so blocks
/// stay unitary to rounding for totals in the hundreds, where the binomial
/// expansion cancels badly.
class BeamSplitterBlocks {
   public:
    BeamSplitterBlocks() = default;
    BeamSplitterBlocks(const BeamSplitterBlocks&) = delete;
    BeamSplitterBlocks& operator=(const BeamSplitterBlocks&) = delete;

    /// Process-wide cache.
    static BeamSplitterBlocks& shared();

    /// Reference stays valid for the lifetime of the cache.
    const Eigen::MatrixXd& block(int total);

   private:
    std::mutex mu_;
    std::vector<std::unique_ptr<Eigen::MatrixXd>> blocks_;
};

/// <n1, n2| U_BS |n, m>; zero unless n1 + n2 == n + m.
cplx bs_fock_element(int n1, int n2, int n, int m);

/// U_BS applied to a two-mode state given as psi(n, m).
Eigen::MatrixXcd apply_beamsplitter(const Eigen::MatrixXcd& psi);

}  // namespace catlab

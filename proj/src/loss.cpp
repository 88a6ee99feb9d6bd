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

#include "catlab/loss.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "catlab/errors.hpp"

namespace catlab {
namespace {

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        std::ostringstream os;
        os << "loss fraction must lie in [0, 1), got " << gamma;
        throw std::invalid_argument(os.str());
    }
}

// Adds K_l rho K_l^dag into out and returns its trace.
double accumulate_branch(const Eigen::MatrixXcd& rho, const Eigen::VectorXd& k, int l,
                         Eigen::MatrixXcd& out) {
    const int d = static_cast<int>(rho.rows());
    const int m = d - l;
    const Eigen::VectorXd kk = k.segment(l, m);
    out.topLeftCorner(m, m).array() +=
        (kk * kk.transpose()).array().cast<cplx>() * rho.bottomRightCorner(m, m).array();
    double tr = 0.0;
    for (int a = 0; a < m; ++a) {
        tr += kk[a] * kk[a] * rho(a + l, a + l).real();
    }
    return tr;
}

}  // namespace

double db_to_fraction(double db) {
    if (db < 0.0) {
        throw std::invalid_argument("loss in dB must be >= 0");
    }
    return -std::expm1(-db * std::log(10.0) / 10.0);
}

double fraction_to_db(double gamma) {
    check_gamma(gamma);
    return -10.0 * std::log1p(-gamma) / std::log(10.0);
}

SegmentPlan plan_segments(LossSpec total, int steps) {
    check_gamma(total.fraction);
    if (steps < 0) {
        throw std::invalid_argument("plan_segments: N must be >= 0");
    }
    SegmentPlan plan;
    plan.total = total;
    plan.steps = steps;
    if (steps == 0) {
        plan.segment = total;
    } else {
        plan.segment.fraction = -std::expm1(std::log1p(-total.fraction) / (steps + 1));
    }
    return plan;
}

int steps_for_segment_db(double total_db, double segment_db) {
    if (!(segment_db > 0.0) || total_db < 0.0) {
        throw ConfigError("segment loss must be > 0 dB and total loss >= 0 dB");
    }
    const double segments = total_db / segment_db;
    const double rounded = std::round(segments);
    if (rounded < 1.0 || std::abs(segments - rounded) > 1e-9 * std::max(1.0, segments)) {
        std::ostringstream os;
        os << "total loss " << total_db << " dB is not a whole number of " << segment_db
           << " dB segments";
        throw ConfigError(os.str());
    }
    return static_cast<int>(rounded) - 1;
}

double kraus_coefficient(int l, int n, double gamma) {
    check_gamma(gamma);
    if (l < 0 || n < l) {
        return 0.0;
    }
    if (gamma == 0.0) {
        return l == 0 ? 1.0 : 0.0;
    }
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0);
    return std::exp(0.5 * (log_binom + l * std::log(gamma) + (n - l) * std::log1p(-gamma)));
}

ModeOperator kraus(int l, double gamma, int cutoff) {
    check_gamma(gamma);
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int n = l; n < cutoff; ++n) {
        k(n - l, n) = kraus_coefficient(l, n, gamma);
    }
    return {std::move(k)};
}

FockVector apply_kraus(int l, double gamma, const FockVector& v) {
    const int d = v.cutoff();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (int n = l; n < d; ++n) {
        out[n - l] = kraus_coefficient(l, n, gamma) * v[n];
    }
    return FockVector(std::move(out));
}

KrausSet::KrausSet(double gamma, int cutoff) : gamma_(gamma), cutoff_(cutoff) {
    check_gamma(gamma);
    coeffs_.reserve(cutoff);
    for (int l = 0; l < cutoff; ++l) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(cutoff);
        for (int n = l; n < cutoff; ++n) {
            c[n] = kraus_coefficient(l, n, gamma);
        }
        coeffs_.push_back(std::move(c));
    }
}

Eigen::VectorXcd KrausSet::apply(int l, const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(cutoff_);
    const int m = cutoff_ - l;
    out.head(m) = coeffs_[l].tail(m).cast<cplx>().cwiseProduct(v.tail(m));
    return out;
}

DensityMatrix apply_loss(const DensityMatrix& rho, double gamma, const Tolerances& tol) {
    check_gamma(gamma);
    const int d = rho.cutoff();
    const Eigen::MatrixXcd& m = rho.mat();
    double top = 0.0;
    for (int n = std::max(0, d - 2); n < d; ++n) {
        top += std::abs(m(n, n).real());
    }
    if (top > tol.leak_tol) {
        std::ostringstream os;
        os << "apply_loss: weight " << top << " on the top Fock levels of D = " << d;
        throw CutoffTooSmall(os.str());
    }
    if (gamma == 0.0) {
        return rho;
    }
    const double total = rho.trace();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    double kept = 0.0;
    for (int l = 0; l < d; ++l) {
        Eigen::VectorXd k(d);
        for (int n = 0; n < d; ++n) {
            k[n] = kraus_coefficient(l, n, gamma);
        }
        kept += accumulate_branch(m, k, l, out);
        if (std::abs(total - kept) < tol.kraus_tail * std::max(1.0, std::abs(total))) {
            return DensityMatrix(std::move(out));
        }
    }
    std::ostringstream os;
    os << "apply_loss: Kraus sum left weight " << (total - kept) << " unaccounted";
    throw NonConvergentTail(os.str());
}

DensityMatrix apply_loss_branch(const DensityMatrix& rho, double gamma, int l) {
    check_gamma(gamma);
    const int d = rho.cutoff();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    if (l < 0 || l >= d) {
        return DensityMatrix(std::move(out));
    }
    Eigen::VectorXd k(d);
    for (int n = 0; n < d; ++n) {
        k[n] = kraus_coefficient(l, n, gamma);
    }
    accumulate_branch(rho.mat(), k, l, out);
    return DensityMatrix(std::move(out));
}

}  // namespace catlab

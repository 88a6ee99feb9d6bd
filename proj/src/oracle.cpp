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

#include "catlab/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catlab {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI(0.0, 1.0);

// i^n and (-1)^n without rounding.
cplx ipow(int n) {
    static const cplx table[4] = {1.0, kI, -1.0, -kI};
    return table[((n % 4) + 4) % 4];
}
int sign_pow(int n) { return (n % 2 == 0) ? 1 : -1; }

cplx phase_eighth(int n) {
    const int k = ((n % 8) + 8) % 8;
    return std::polar(1.0, k * std::numbers::pi / 4.0);
}

// alpha^n / sqrt(n1! n2!) in log space; alpha > 0.
double power_over_factorials(double alpha, int n, int n1, int n2) {
    if (n == 0) {
        return 1.0;
    }
    if (alpha == 0.0) {
        return 0.0;
    }
    return std::exp(n * std::log(alpha) - 0.5 * (std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0)));
}

void check_counts(int n1, int n2) {
    if (n1 < 0 || n2 < 0) {
        throw std::invalid_argument("photon counts must be >= 0");
    }
}

Eigen::Matrix2cd swap_shape(cplx f) {
    Eigen::Matrix2cd m;
    m << 0.0, f, 1.0, 0.0;
    return m;
}

}  // namespace

BranchFormula lossless_both_nonzero(int n1, int n2, double alpha) {
    if (n1 <= 0 || n2 <= 0) {
        throw std::invalid_argument("lossless_both_nonzero: both counts must be > 0");
    }
    const int n = n1 + n2;
    BranchFormula b;
    b.loss_order = 0;
    b.outcome_class = OutcomeClass::BothNonzero;
    // (alpha (1 + i) / sqrt 2)^n = alpha^n e^{i n pi / 4}
    const cplx selection = (ipow(n1) + ipow(n2)) * static_cast<double>(1 + sign_pow(n));
    b.prefactor = std::exp(-alpha * alpha) * power_over_factorials(alpha, n, n1, n2) *
                  phase_eighth(n) * selection;
    b.shape = swap_shape(0.5 * (sign_pow(n1) + sign_pow(n2)));
    return b;
}

double weak_x_admixture(int n) {
    if (n <= 0 || n % 4 != 0) {
        return 0.0;
    }
    return sign_pow(n / 4) * std::pow(2.0, -0.5 * (n - 2));
}

BranchFormula lossless_one_zero(int n, double alpha) {
    if (n <= 0) {
        throw std::invalid_argument("lossless_one_zero: count must be > 0");
    }
    BranchFormula b;
    b.loss_order = 0;
    b.outcome_class = OutcomeClass::OneZero;
    const double parity = 1 + sign_pow(n);
    b.prefactor = std::exp(-alpha * alpha) *
                  power_over_factorials(std::sqrt(2.0) * alpha, n, n, 0) * parity;
    const cplx w = phase_eighth(n) * std::pow(2.0, -0.5 * n) * (ipow(n) + 1.0);
    b.shape << 1.0, w * (0.5 * parity), w, ipow(n);
    return b;
}

BranchFormula lossless_both_zero(double alpha) {
    BranchFormula b;
    b.loss_order = 0;
    b.outcome_class = OutcomeClass::BothZero;
    b.prefactor = 4.0 * std::exp(-alpha * alpha);
    b.shape.setOnes();
    return b;
}

BranchFormula lossless_branch(int n1, int n2, double alpha) {
    check_counts(n1, n2);
    if (n1 > 0 && n2 > 0) {
        return lossless_both_nonzero(n1, n2, alpha);
    }
    if (n1 + n2 == 0) {
        return lossless_both_zero(alpha);
    }
    return lossless_one_zero(n1 + n2, alpha);
}

cplx single_loss_z_factor(int n1, int n2) {
    return 0.5 * kI * (static_cast<double>(sign_pow(n1) + sign_pow(n2)) + 2.0 * ipow(n1 + n2));
}

double single_loss_z_factor_odd(int n1, int n2) {
    const int n = n1 + n2;
    if (n % 2 == 0) {
        throw std::invalid_argument("single_loss_z_factor_odd: total must be odd");
    }
    return sign_pow((n + 1) / 2);
}

double single_loss_admixture(int n) {
    if (n <= 0 || n % 2 == 0) {
        throw std::invalid_argument("single_loss_admixture: count must be odd");
    }
    const int k = n % 4 == 1 ? (n - 1) / 4 : (n + 1) / 4;
    return sign_pow(k) * std::pow(2.0, -0.5 * (n - 1));
}

double single_loss_admixture_quoted(int n) {
    return 0.5 * single_loss_admixture(n);
}

BranchFormula single_loss_branch(int n1, int n2, double alpha_gamma) {
    check_counts(n1, n2);
    const int n = n1 + n2;
    const double odd = 1 - sign_pow(n);
    BranchFormula b;
    b.loss_order = 1;
    if (n1 > 0 && n2 > 0) {
        b.outcome_class = OutcomeClass::BothNonzero;
        b.prefactor = alpha_gamma * std::exp(-alpha_gamma * alpha_gamma) *
                      power_over_factorials(alpha_gamma, n, n1, n2) * phase_eighth(n) *
                      (ipow(n2) - ipow(n1)) * odd;
        b.shape = swap_shape(single_loss_z_factor(n1, n2));
        return b;
    }
    if (n == 0) {
        b.outcome_class = OutcomeClass::BothZero;
        b.prefactor = 0.0;
        b.shape.setZero();
        return b;
    }
    b.outcome_class = OutcomeClass::OneZero;
    b.prefactor = alpha_gamma * std::exp(-alpha_gamma * alpha_gamma) *
                  power_over_factorials(std::sqrt(2.0) * alpha_gamma, n, n, 0) * odd;
    // Mirror outcomes (0, n) differ by a global sign only.
    if (n1 == 0) {
        b.prefactor = -b.prefactor;
    }
    const cplx w = phase_eighth(n) * std::pow(2.0, -0.5 * n) * (1.0 - ipow(n));
    const double s = (n % 2 == 1) ? sign_pow((n + 1) / 2) : 0.0;
    b.shape << 1.0, w * s, w, ipow(n + 1);
    return b;
}

BranchFormula double_loss_map() {
    BranchFormula b;
    b.loss_order = 2;
    b.outcome_class = OutcomeClass::Any;
    b.prefactor = 1.0;
    b.shape << 1.0, 0.0, 0.0, -1.0;
    b.undetectable = true;
    return b;
}

BranchFormula oracle_map(int loss_order, int n1, int n2, double alpha) {
    switch (loss_order) {
        case 0:
            return lossless_branch(n1, n2, alpha);
        case 1:
            return single_loss_branch(n1, n2, alpha);
        case 2:
            return double_loss_map();
        default:
            throw std::invalid_argument("oracle_map: loss order must be 0, 1 or 2");
    }
}

}  // namespace catlab

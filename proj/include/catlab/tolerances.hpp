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

namespace catlab {

struct Tolerances {
    double norm_tol = 1e-10;
    double leak_tol = 1e-12;
    double herm_tol = 1e-10;
    double psd_tol = 1e-9;
    double trace_tol = 1e-10;
    /// Completeness of enumerated PNRD outcome probabilities.
    double prob_tol = 1e-8;
    /// Enumeration stops once cumulative probability reaches 1 - enum_target.
    double enum_target = 1e-10;
    /// Kraus sums stop once the remaining weight drops below this.
    double kraus_tail = 1e-12;
    /// Eigenvalues below this magnitude are dropped from trace norms.
    double eig_floor = 1e-13;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace catlab

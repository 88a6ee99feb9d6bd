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

// Cat and Bell state preparation by reflecting coherent pulses off a
// cavity that holds a three-level atom.
//
// Field states are kept as finite sums of multimode coherent states, so
// reflection is exact: amplitude beta becomes r_s beta in the branch where
// the atom is in state s. Reflection coefficients with |r| != 1 are applied
// as a plain amplitude scaling; the photons lost that way are not traced
// out, so the result is only meaningful close to |r| = 1.

#pragma once

#include <optional>
#include <vector>

#include "catlab/cat_code.hpp"

namespace catlab {

struct CavityParams {
    /// Input mode to cavity coupling rate.
    double kappa_r = 1.0;
    /// Total cavity decay rate.
    double kappa = 1.0;
    /// Field to cavity detuning.
    double delta = 0.0;
    /// Spontaneous decay of the excited atomic state into other modes.
    double gamma_at = 1.0;
    /// Atom to cavity coupling.
    double g = 100.0;

    /// Throws std::invalid_argument unless 0 <= kappa_r <= kappa and all
    /// rates are >= 0 (kappa > 0).
    void validate() const;
};

struct ReflectionPair {
    cplx r_up = 1.0;
    cplx r_down = -1.0;

    /// arg(r_down / r_up) in (-pi, pi].
    double relative_phase() const;
    /// Same phases, unit magnitudes.
    ReflectionPair unit_magnitude() const;
};

/// r_up = 1 - 2 kr (i D + ga) / ((i D + k)(i D + ga) + g^2),
/// r_down = 1 - 2 kr / (i D + k).
ReflectionPair reflection(const CavityParams& params);

struct CoherentTerm {
    cplx coeff;
    /// One amplitude per mode.
    std::vector<cplx> amps;
};

/// sum_t coeff_t |amps_t>, a finite superposition of product coherent states.
struct CoherentSuperposition {
    int modes = 1;
    std::vector<CoherentTerm> terms;

    static CoherentSuperposition product(std::vector<cplx> amps);
    cplx inner(const CoherentSuperposition& other) const;
    double norm_squared() const;
    CoherentSuperposition scaled(cplx factor) const;
    CoherentSuperposition plus(const CoherentSuperposition& other) const;

    /// Single mode only.
    FockVector to_fock(int cutoff) const;
    /// Two modes only; amps(m1, m2).
    Eigen::MatrixXcd to_fock_two_mode(int cutoff) const;
};

/// |up>|field_up> + |down>|field_down>.
struct AtomFieldState {
    CoherentSuperposition up;
    CoherentSuperposition down;

    double norm_squared() const { return up.norm_squared() + down.norm_squared(); }
};

struct ReflectOptions {
    /// Largest allowed ||r| - 1| unless non-ideal reflection is allowed.
    double ideal_tol = 1e-3;
    bool allow_nonideal = false;
};

/// Reflects `mode` of a field off the cavity with the atom in
/// c_up |up> + c_down |down>. Amplitudes are written in the frame where r_up
/// is real and positive. Throws NonIdealReflection if |r| is off by more than
/// ideal_tol and non-ideal reflection is not allowed.
AtomFieldState reflect_cat(const CoherentSuperposition& field, int mode, cplx c_up, cplx c_down,
                           const ReflectionPair& pair, const ReflectOptions& opts = {});

/// Reflects another mode off the same atom.
AtomFieldState reflect_cat(const AtomFieldState& state, int mode, const ReflectionPair& pair,
                           const ReflectOptions& opts = {});

struct AtomProjection {
    /// Normalized field state.
    CoherentSuperposition field;
    double probability = 0.0;
};

/// Measures the atom in |+> = (|up> + |down>)/sqrt 2. Throws ZeroProbability.
AtomProjection project_atom_plus(const AtomFieldState& state);

struct CavityBell {
    CoherentSuperposition field;
    /// Normalized two-mode Fock amplitudes amps(m1, m2).
    Eigen::MatrixXcd amps;
    /// Probability of the final atom measurement.
    double success_probability = 0.0;
    /// Including the two cat-preparation heralds.
    double overall_probability = 0.0;
};

/// Two coherent pulses |alpha>|alpha> are each turned into even cats with
/// the `prepare` reflection (an atom in |+> measured in |+>). Both cats are
/// then reflected off one atom with the `entangle` pair and the atom is
/// measured in |+>. With entangle = (1, i) the result is the logical Bell
/// state of amplitude alpha.
CavityBell bell_from_cavity(double alpha, const ReflectionPair& entangle, int cutoff,
                            const ReflectOptions& opts = {},
                            const ReflectionPair& prepare = {1.0, -1.0});
CavityBell bell_from_cavity(double alpha, const CavityParams& entangle, int cutoff,
                            const ReflectOptions& opts = {},
                            const ReflectionPair& prepare = {1.0, -1.0});

/// |<bell|psi>|^2 with bell_state(alpha, alpha) of the same cutoff.
double bell_fidelity(const CavityBell& state, double alpha, int cutoff);

}  // namespace catlab
